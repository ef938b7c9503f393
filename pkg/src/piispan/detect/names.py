"""Gazetteer-driven recognizers for person names and place names."""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..core import Entity, Span
from ..resources import ALL_CITIES, ALL_COUNTRIES, ALL_FIRST_NAMES, ALL_LAST_NAMES, ALL_REGIONS, STREETS
from .rules import ADDRESS_WORDS, ContextKeyword, DetectorRule, _kw

NAME_WORDS = "name|named|mr|mrs|ms|dr|patient|client|customer|contact|holder|nom|prénom|monsieur|madame|nombre|señor|señora|sr|sra|name|herr|frau|kunde|signor|signora|sig|nome|cliente|senhor|senhora|naam|dhr|mevr|meneer|mevrouw"
GREETING_WORDS = "hi|hello|hey|dear|thanks|bonjour|salut|cher|chère|merci|hola|estimado|estimada|gracias|hallo|liebe|lieber|danke|ciao|caro|cara|gentile|grazie|olá|oi|caro|obrigado|obrigada|beste|hoi|dag|bedankt"
TITLES = r"(?:Mr|Mrs|Ms|Dr|Prof|M|Mme|Mlle|Sr|Sra|Srta|D|Dña|Herr|Frau|Sig|Sig\.ra|Dott|Dott\.ssa|Sr\.ª|Dhr|Mevr|Mevrouw|Meneer|Monsieur|Madame|Señor|Señora|Signor|Signora|Senhor|Senhora)\.?"

_WORD = r"[^\W\d_](?:[^\W\d_]|['’-](?=[^\W\d_]))*"
_CAP = re.compile(_WORD)
_TITLE_NAME = re.compile(rf"(?<!\w){TITLES}\s+(?P<value>{_WORD})")

_NAME_KW = _kw(NAME_WORDS, 20, 0.15)
_GREET_KW = _kw(GREETING_WORDS, 12, 0.3)


def _boost(text: str, start: int, conf: float, keywords: tuple[ContextKeyword, ...]) -> float:
    for kw in keywords:
        if kw.regex.search(text[max(0, start - kw.window) : start]):
            conf += kw.delta
    return round(min(1.0, max(0.0, conf)), 6)


@dataclass(frozen=True)
class NameRecognizer:
    """Finds full names anchored on a known first name, plus their parts.

    A gazetteer first name followed by capitalised words yields a
    full_name with nested first/middle/last spans; a bare first name or a
    title followed by a surname yields the single part.
    """

    first_names: frozenset[str] = ALL_FIRST_NAMES
    last_names: frozenset[str] = ALL_LAST_NAMES

    labels = frozenset({"full_name", "first_name", "middle_name", "last_name"})

    def _is_cap(self, word: str) -> bool:
        return word[:1].isupper() and not word.isupper()

    def find(self, text: str) -> list[Entity]:
        words = [(m.start(), m.end(), m.group()) for m in _CAP.finditer(text)]
        out: list[Entity] = []
        used_last: set[int] = set()
        i = 0
        while i < len(words):
            start, end, word = words[i]
            if word not in self.first_names:
                i += 1
                continue
            # extend over following capitalised words separated by one space
            j = i
            while (
                j + 1 < len(words)
                and j - i < 2
                and words[j + 1][0] == words[j][1] + 1
                and text[words[j][1]] == " "
                and self._is_cap(words[j + 1][2])
            ):
                j += 1
            if j == i:
                conf = _boost(text, start, 0.35, _NAME_KW + _GREET_KW)
                out.append(Entity(Span(start, end), "first_name", conf, word))
                i += 1
                continue
            parts = words[i : j + 1]
            last = parts[-1]
            known_last = last[2] in self.last_names
            full_conf = _boost(text, start, 0.6 if known_last else 0.45, _NAME_KW)
            full_end = last[1]
            out.append(Entity(Span(start, full_end), "full_name", full_conf, text[start:full_end]))
            out.append(Entity(Span(start, end), "first_name", round(min(1.0, full_conf), 6), word))
            for ms, me, mw in parts[1:-1]:
                conf = 0.55 if mw in self.first_names else 0.4
                out.append(Entity(Span(ms, me), "middle_name", conf, mw))
            out.append(Entity(Span(last[0], last[1]), "last_name", 0.6 if known_last else 0.45, last[2]))
            used_last.add(last[0])
            i = j + 1

        for m in _TITLE_NAME.finditer(text):
            s, e = m.span("value")
            value = m.group("value")
            if s in used_last or value in self.first_names or not self._is_cap(value):
                continue
            out.append(Entity(Span(s, e), "last_name", 0.55 if value in self.last_names else 0.4, value))
        return out


def _alternation(values) -> str:
    return "|".join(re.escape(v) for v in sorted(values, key=len, reverse=True))


def _street_pattern() -> str:
    shapes = []
    for templates in STREETS.values():
        for tpl in templates:
            before, after = tpl.split("{n}")
            body = re.escape(before) + r"\d{1,4}[a-zA-Z]?" + re.escape(after)
            shapes.append(body)
    generic = (
        r"\d{1,4}[a-z]?,? (?:[A-Z][\w'-]+ ){1,3}(?:Street|St\.|Avenue|Ave\.|Road|Rd\.|Lane|Drive|Boulevard)"
        r"|\d{1,4},? (?:rue|avenue|boulevard|place|allée|chemin) [\w' -]{2,30}?(?=,|\n|$)"
        r"|(?:Calle|Avenida|Plaza|Paseo|Via|Viale|Piazza|Corso|Rua|Avenida|Travessa|Praça) [\w' ]{2,30}? \d{1,4}"
        r"|[A-ZÄÖÜ][\wäöüß-]*(?:straße|strasse|weg|platz|allee|gasse|straat|laan|plein|gracht|kade) \d{1,4}[a-z]?"
    )
    return "(?<![\\w-])(?P<value>" + "|".join(shapes) + "|" + generic + ")(?![\\w-])"


def place_rules() -> tuple[DetectorRule, ...]:
    return (
        DetectorRule(
            "city",
            rf"(?<![\w-])(?P<value>{_alternation(ALL_CITIES)})(?![\w-])",
            None,
            _kw("city|town|ville|ciudad|localidad|stadt|ort|città|comune|cidade|localidade|stad|woonplaats|in|à|en|aus|di|em", 15, 0.2)
            + _kw(ADDRESS_WORDS, 80, 0.15),
            0.45,
            name="city-gazetteer",
        ),
        DetectorRule(
            "state_or_region",
            rf"(?<![\w-])(?P<value>{_alternation(ALL_REGIONS)})(?![\w-])",
            None,
            _kw("state|region|county|province|région|département|región|provincia|comunidad|bundesland|land|regione|região|distrito|provincie", 20, 0.3)
            + _kw(ADDRESS_WORDS, 80, 0.15),
            0.4,
            name="region-gazetteer",
        ),
        DetectorRule(
            "country",
            rf"(?<![\w-])(?P<value>{_alternation(ALL_COUNTRIES)})(?![\w-])",
            None,
            _kw("country|nationality|pays|nationalité|país|nacionalidad|land|staatsangehörigkeit|paese|nazionalità|nacionalidade|nationaliteit", 25, 0.3)
            + _kw(ADDRESS_WORDS, 80, 0.15),
            0.45,
            name="country-gazetteer",
        ),
        DetectorRule("street_address", _street_pattern(), None, (), 0.6, name="street"),
    )
