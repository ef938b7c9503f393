"""Locale-aware fake values.

Checksummed identifiers are generated valid (Luhn card numbers, mod-97
IBANs, ABA routing numbers) so a correct validator accepts every one.
Each faker returns the text plus the labelled sub-spans it contains.
"""

from __future__ import annotations

import base64
import datetime as dt
import json
import random
import string
import unicodedata
from dataclasses import dataclass

from ..detect.validators import aba_check_digit, iban_check_digits, luhn_check_digit
from ..resources import (
    CITIES,
    COUNTRIES,
    FIRST_NAMES,
    IBAN_BBAN,
    LAST_NAMES,
    LOCALE_COUNTRY,
    MONTHS,
    PHONE_PREFIX,
    STREETS,
)
from .units import Unit


@dataclass(frozen=True)
class Value:
    text: str
    spans: tuple[tuple[int, int, str], ...]  # relative to text


def fill(rng: random.Random, fmt: str) -> str:
    """'#' digit, 'A' uppercase letter, 'X' uppercase alphanumeric; others kept."""
    out = []
    for ch in fmt:
        if ch == "#":
            out.append(rng.choice(string.digits))
        elif ch == "A":
            out.append(rng.choice(string.ascii_uppercase))
        elif ch == "X":
            out.append(rng.choice(string.ascii_uppercase + string.digits))
        else:
            out.append(ch)
    return "".join(out)


def ascii_fold(text: str) -> str:
    decomposed = unicodedata.normalize("NFKD", text)
    return "".join(c for c in decomposed if c.isascii() and (c.isalnum() or c in ".-_"))


def group(text: str, size: int = 4, sep: str = " ") -> str:
    return sep.join(text[i : i + size] for i in range(0, len(text), size))


# -- checksummed numbers ------------------------------------------------------


def card_number(rng: random.Random, grouped: bool | None = None) -> str:
    prefix = rng.choice(["4", "51", "52", "53", "54", "55"])
    body = prefix + "".join(rng.choice(string.digits) for _ in range(15 - len(prefix)))
    digits = body + luhn_check_digit(body)
    if grouped is None:
        grouped = rng.random() < 0.7
    return group(digits) if grouped else digits


_ABA_PREFIXES = [f"{n:02d}" for n in list(range(1, 13)) + list(range(21, 33))]


def routing_number(rng: random.Random) -> str:
    first = rng.choice(_ABA_PREFIXES) + "".join(rng.choice(string.digits) for _ in range(6))
    return first + aba_check_digit(first)


def iban(rng: random.Random, country: str, grouped: bool | None = None) -> str:
    bban = fill(rng, IBAN_BBAN[country])
    compact = f"{country}{iban_check_digits(country, bban)}{bban}"
    if grouped is None:
        grouped = rng.random() < 0.6
    return group(compact) if grouped else compact


def account_number(rng: random.Random) -> str:
    n = rng.randint(8, 11)
    return rng.choice("123456789") + "".join(rng.choice(string.digits) for _ in range(n - 1))


# -- dates ----------------------------------------------------------------------

_YEARS = {
    "date_of_birth": (1950, 2004),
    "document_date": (2019, 2025),
    "expiration_date": (2026, 2034),
    "transaction_date": (2023, 2026),
    "sensitive_date": (2015, 2026),
}


def date_text(rng: random.Random, locale: str, label: str) -> str:
    lo, hi = _YEARS.get(label, (2000, 2026))
    d = dt.date(rng.randint(lo, hi), rng.randint(1, 12), rng.randint(1, 28))
    month = MONTHS[locale][d.month - 1]
    numeric = rng.random() < 0.5
    if locale == "en":
        return d.isoformat() if numeric else f"{month} {d.day}, {d.year}"
    if numeric:
        sep = {"de": ".", "nl": "-"}.get(locale, "/")
        return f"{d.day:02d}{sep}{d.month:02d}{sep}{d.year}"
    if locale in ("es", "pt"):
        return f"{d.day} de {month} de {d.year}"
    if locale == "de":
        return f"{d.day}. {month} {d.year}"
    return f"{d.day} {month} {d.year}"


# -- identifiers ----------------------------------------------------------------

_NATIONAL_ID = {
    "en": ("###-##-####",),
    "fr": ("# ## ## ## ### ### ##",),
    "es": ("########A",),
    "de": ("AXXXXXXX#",),
    "it": ("AAAAAA##A##A###A",),
    "pt": ("######## # AA#",),
    "nl": ("#########",),
}
_TAX_NUMBER = {
    "en": ("##-#######",),
    "fr": ("#############",),
    "es": ("A########",),
    "de": ("##/###/#####",),
    "it": ("###########",),
    "pt": ("#########",),
    "nl": ("NL#########B##",),
}
_DRIVER = ("A#######", "AA########", "DL-######")


def _national_id(rng: random.Random, locale: str) -> str:
    value = fill(rng, rng.choice(_NATIONAL_ID[locale]))
    if locale == "nl" and value[0] == "0":
        value = "1" + value[1:]
    return value


def phone_number(rng: random.Random, locale: str) -> str:
    country = LOCALE_COUNTRY[locale]
    intl = rng.random() < 0.5
    if locale == "en":
        if rng.random() < 0.5:
            return fill(rng, "+1 ### 555 ####") if intl else fill(rng, "(###) 555-####")
        return fill(rng, "+44 20 #### ####") if intl else fill(rng, "020 #### ####")
    national = {
        "fr": ("6 ## ## ## ##", "06 ## ## ## ##"),
        "es": ("6## ### ###", "6## ### ###"),
        "de": ("30 ########", "030 ########"),
        "it": ("3## ### ####", "3## ### ####"),
        "pt": ("9## ### ###", "9## ### ###"),
        "nl": ("6 ########", "06 ########"),
    }[locale]
    if intl:
        return f"+{PHONE_PREFIX[country]} " + fill(rng, national[0])
    return fill(rng, national[1])


def email(rng: random.Random, locale: str, first: str | None = None, last: str | None = None) -> str:
    first = first or rng.choice(FIRST_NAMES[locale])
    last = last or rng.choice(LAST_NAMES[locale])
    local = rng.choice(["{f}.{l}", "{f}{l}", "{f0}{l}", "{f}_{l}{n}"]).format(
        f=ascii_fold(first).lower(), l=ascii_fold(last).lower(), f0=ascii_fold(first)[0].lower(), n=rng.randint(1, 99)
    )
    tld = {"en": "com", "fr": "fr", "es": "es", "de": "de", "it": "it", "pt": "pt", "nl": "nl"}[locale]
    domain = rng.choice(["mail", "example", "post", "inbox", "webmail"])
    return f"{local}@{domain}.{tld}"


def username(rng: random.Random, locale: str) -> str:
    first = ascii_fold(rng.choice(FIRST_NAMES[locale])).lower()
    last = ascii_fold(rng.choice(LAST_NAMES[locale])).lower()
    return rng.choice(["{f}{l}_{n}", "{f0}{l}{n}", "{f}.{l}{n}", "{l}_{f0}{n}"]).format(
        f=first, l=last, f0=first[0], n=rng.randint(1, 999)
    )


def ip_address(rng: random.Random) -> str:
    if rng.random() < 0.8:
        return ".".join(str(n) for n in (rng.randint(11, 223), rng.randint(0, 255), rng.randint(0, 255), rng.randint(1, 254)))
    return ":".join(f"{rng.randint(0x1000, 0xFFFF):x}" for _ in range(8))


_SAFE_PUNCT = "!#$%&*+-=?@^_~"


def password(rng: random.Random) -> str:
    pools = [string.ascii_lowercase, string.ascii_uppercase, string.digits, _SAFE_PUNCT]
    chars = [rng.choice(p) for p in pools]
    chars += [rng.choice("".join(pools)) for _ in range(rng.randint(6, 10))]
    rng.shuffle(chars)
    return "".join(chars)


def _token(rng: random.Random, n: int, alphabet: str = string.ascii_letters + string.digits) -> str:
    while True:
        value = "".join(rng.choice(alphabet) for _ in range(n))
        if any(c.isdigit() for c in value) and any(c.isalpha() for c in value):
            return value


def secret(rng: random.Random) -> str:
    return _token(rng, rng.randint(24, 40), string.ascii_letters + string.digits + "_-")


def api_key(rng: random.Random) -> str:
    kind = rng.randrange(3)
    if kind == 0:
        return f"sk_{rng.choice(['live', 'test'])}_" + _token(rng, 24)
    if kind == 1:
        return "AKIA" + _token(rng, 16, string.ascii_uppercase + string.digits)
    return "AIza" + _token(rng, 35, string.ascii_letters + string.digits + "_-")


def _b64(obj: dict) -> str:
    raw = json.dumps(obj, separators=(",", ":"), sort_keys=True).encode()
    return base64.urlsafe_b64encode(raw).decode().rstrip("=")


def access_token(rng: random.Random) -> str:
    header = _b64({"alg": "HS256", "typ": "JWT"})
    payload = _b64({"sub": str(rng.randint(10000, 99999)), "iat": rng.randint(1_600_000_000, 1_800_000_000)})
    return f"{header}.{payload}.{_token(rng, 43, string.ascii_letters + string.digits + '_-')}"


def recovery_code(rng: random.Random) -> str:
    return "-".join(_token(rng, 5, string.ascii_uppercase + string.digits) for _ in range(rng.randint(2, 3)))


# -- composite units -------------------------------------------------------------


class _Builder:
    def __init__(self) -> None:
        self.parts: list[str] = []
        self.spans: list[tuple[int, int, str]] = []
        self.pos = 0

    def add(self, text: str, *labels: str) -> None:
        for label in labels:
            self.spans.append((self.pos, self.pos + len(text), label))
        self.parts.append(text)
        self.pos += len(text)

    def value(self, whole: tuple[str, ...] = ()) -> Value:
        text = "".join(self.parts)
        spans = [(0, len(text), label) for label in whole] + self.spans
        return Value(text, tuple(spans))


def _name_value(rng: random.Random, locale: str, unit: Unit) -> Value:
    first = rng.choice(FIRST_NAMES[locale])
    b = _Builder()
    if unit.labels == {"person", "first_name"}:
        b.add(first, "first_name")
        return b.value(("person",))
    b.add(first, *(["first_name"] if "first_name" in unit.labels else []))
    if "middle_name" in unit.labels:
        middle = rng.choice([n for n in FIRST_NAMES[locale] if n != first])
        b.add(" ")
        b.add(middle, "middle_name")
    b.add(" ")
    b.add(rng.choice(LAST_NAMES[locale]), *(["last_name"] if "last_name" in unit.labels else []))
    whole = tuple(label for label in ("person", "full_name") if label in unit.labels)
    return b.value(whole)


def _address_value(rng: random.Random, locale: str, unit: Unit) -> Value:
    city, region, postal_fmt = rng.choice(CITIES[locale])
    street = rng.choice(STREETS[locale]).format(n=rng.randint(1, 199))
    postal = fill(rng, postal_fmt)
    b = _Builder()
    b.add(street, "street_address")
    b.add(", ")
    if unit.name == "address_postal":
        if locale == "en":
            b.add(city, "city")
            b.add(" ")
            b.add(postal, "postal_code")
        else:
            b.add(postal, "postal_code")
            b.add(" ")
            b.add(city, "city")
        b.add(", ")
        b.add(rng.choice(COUNTRIES[locale]), "country")
    elif unit.name == "address_region":
        b.add(city, "city")
        b.add(", ")
        b.add(region, "state_or_region")
        b.add(" ")
        b.add(postal, "postal_code")
    else:
        b.add(city, "city")
    return b.value(("address",))


_SIMPLE = {
    "street_address": lambda rng, loc: rng.choice(STREETS[loc]).format(n=rng.randint(1, 199)),
    "city": lambda rng, loc: rng.choice(CITIES[loc])[0],
    "state_or_region": lambda rng, loc: rng.choice(CITIES[loc])[1],
    "postal_code": lambda rng, loc: fill(rng, rng.choice(CITIES[loc])[2]),
    "country": lambda rng, loc: rng.choice(COUNTRIES[loc]),
    "first_name": lambda rng, loc: rng.choice(FIRST_NAMES[loc]),
    "middle_name": lambda rng, loc: rng.choice(FIRST_NAMES[loc]),
    "last_name": lambda rng, loc: rng.choice(LAST_NAMES[loc]),
    "email": email,
    "phone_number": phone_number,
    "national_id_number": _national_id,
    "passport_number": lambda rng, loc: fill(rng, "AA#######"),
    "drivers_license_number": lambda rng, loc: fill(rng, rng.choice(_DRIVER)),
    "license_number": lambda rng, loc: fill(rng, "LIC-######"),
    "tax_number": lambda rng, loc: fill(rng, rng.choice(_TAX_NUMBER[loc])),
    "account_number": lambda rng, loc: account_number(rng),
    "routing_number": lambda rng, loc: routing_number(rng),
    "iban": lambda rng, loc: iban(rng, LOCALE_COUNTRY[loc]),
    "card_number": lambda rng, loc: card_number(rng),
    "card_expiry": lambda rng, loc: f"{rng.randint(1, 12):02d}/{rng.randint(26, 33)}",
    "card_cvv": lambda rng, loc: str(rng.randint(100, 999)),
    "username": username,
    "ip_address": lambda rng, loc: ip_address(rng),
    "account_id": lambda rng, loc: rng.choice(["CUST", "CL", "MBR"]) + fill(rng, "-" + "#" * rng.randint(5, 7)),
    "sensitive_account_id": lambda rng, loc: rng.choice(["ACC", "ADM", "PRV"]) + fill(rng, "-" + "#" * rng.randint(6, 8)),
    "password": lambda rng, loc: password(rng),
    "secret": lambda rng, loc: secret(rng),
    "api_key": lambda rng, loc: api_key(rng),
    "access_token": lambda rng, loc: access_token(rng),
    "recovery_code": lambda rng, loc: recovery_code(rng),
}
for _label in _YEARS:
    _SIMPLE[_label] = (lambda label: lambda rng, loc: date_text(rng, loc, label))(_label)


def fake_unit(unit: Unit, rng: random.Random, locale: str) -> Value:
    """Render one unit; every label of the unit gets at least one span."""
    if unit.field in ("person", "full_name"):
        return _name_value(rng, locale, unit)
    if unit.field == "address":
        return _address_value(rng, locale, unit)
    text = _SIMPLE[unit.field](rng, locale)
    return Value(text, tuple((0, len(text), label) for label in sorted(unit.labels)))
