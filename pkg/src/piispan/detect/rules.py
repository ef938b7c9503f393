"""Pattern rules with optional checksum validation and context keywords."""

from __future__ import annotations

import ipaddress
import math
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

from ..core import Entity, Span
from ..resources import ALL_MONTHS
from .validators import MalformedInputError, aba_routing_check, iban_check, luhn_check


@dataclass(frozen=True)
class ContextKeyword:
    """A keyword, or ``|``-separated synonyms, contributing ``delta`` once."""

    keyword: str
    window: int
    delta: float

    def __post_init__(self) -> None:
        if self.window <= 0:
            raise ValueError(f"context window must be positive, got {self.window}")

    @cached_property
    def regex(self) -> re.Pattern[str]:
        # anchored on the left only, so "exp" also matches "expiry"
        words = sorted((w.strip() for w in self.keyword.split("|") if w.strip()), key=len, reverse=True)
        return re.compile(r"(?<!\w)(?:" + "|".join(map(re.escape, words)) + ")", re.IGNORECASE)


@dataclass(frozen=True)
class DetectorRule:
    label: str
    pattern: str
    validator: str | None = None
    context_keywords: tuple[ContextKeyword, ...] = ()
    base_confidence: float = 0.5
    flags: int = 0
    name: str = ""

    def __post_init__(self) -> None:
        if not 0.0 <= self.base_confidence <= 1.0:
            raise ValueError(f"base_confidence {self.base_confidence} outside [0, 1]")
        boost = sum(k.delta for k in self.context_keywords if k.delta > 0)
        if self.base_confidence + boost > 1.0 + 1e-9:
            raise ValueError(
                f"rule {self.name or self.label}: base {self.base_confidence} + positive deltas {boost} > 1"
            )
        if self.validator is not None and self.validator not in VALIDATORS:
            raise ValueError(f"unknown validator tag {self.validator!r}")
        object.__setattr__(self, "context_keywords", tuple(self.context_keywords))

    @cached_property
    def regex(self) -> re.Pattern[str]:
        return re.compile(self.pattern, self.flags)

    def find(self, text: str) -> list[Entity]:
        """Pattern hits that pass the validator, at base confidence, context applied."""
        check = VALIDATORS[self.validator] if self.validator else None
        hits = []
        for m in self.regex.finditer(text):
            start, end = m.span("value") if "value" in self.regex.groupindex else m.span()
            if start == end:
                continue
            value = text[start:end]
            if check is not None and not check(value):
                continue
            ent = Entity(Span(start, end), self.label, self.base_confidence, value)
            hits.append(apply_context_boost(text, ent, self))
        return hits


def apply_context_boost(text: str, entity: Entity, rule: DetectorRule) -> Entity:
    """Add the delta of every keyword found in the window before the span, clamped to [0, 1].

    Each keyword counts once however often it occurs.
    """
    conf = rule.base_confidence if entity.confidence is None else entity.confidence
    for kw in rule.context_keywords:
        window = text[max(0, entity.start - kw.window) : entity.start]
        if kw.regex.search(window):
            conf += kw.delta
    conf = min(1.0, max(0.0, conf))
    return Entity(entity.span, entity.label, round(conf, 6), entity.surface)


def _safe(fn: Callable[[str], bool]) -> Callable[[str], bool]:
    def wrapped(value: str) -> bool:
        try:
            return fn(value)
        except MalformedInputError:
            return False

    return wrapped


def _is_ip(value: str) -> bool:
    try:
        ipaddress.ip_address(value)
    except ValueError:
        return False
    return True


def shannon_entropy(value: str) -> float:
    counts = Counter(value)
    n = len(value)
    return -sum(c / n * math.log2(c / n) for c in counts.values())


def _looks_secret(value: str) -> bool:
    classes = sum(
        (
            any(c.islower() for c in value),
            any(c.isupper() for c in value),
            any(c.isdigit() for c in value),
            any(not c.isalnum() for c in value),
        )
    )
    return classes >= 2 and shannon_entropy(value) >= 2.5


def _is_handle(value: str) -> bool:
    return any(c.isdigit() or c in "._" for c in value) and not value.endswith(".")


def _has_digit(value: str) -> bool:
    return any(c.isdigit() for c in value)


def _is_date(value: str) -> bool:
    nums = [int(n) for n in re.findall(r"\d+", value)]
    years = [n for n in nums if n >= 1000]
    if not years or not all(1900 <= y <= 2099 for y in years):
        return False
    small = [n for n in nums if n < 1000]
    return all(1 <= n <= 31 for n in small)


VALIDATORS: dict[str, Callable[[str], bool]] = {
    "luhn": _safe(luhn_check),
    "iban": _safe(iban_check),
    "aba": _safe(aba_routing_check),
    "ip": _is_ip,
    "entropy": _looks_secret,
    "handle": _is_handle,
    "has_digit": _has_digit,
    "date": _is_date,
}


def _kw(words: str, window: int, delta: float) -> tuple[ContextKeyword, ...]:
    return (ContextKeyword(words, window, delta),)


# one alternation per concept, covering en/fr/es/de/it/pt/nl
PHONE_WORDS = "phone|call|tel|mobile|cell|téléphone|portable|appeler|teléfono|móvil|llamar|telefon|handy|anrufen|telefono|cellulare|chiamare|telefone|telemóvel|ligar|telefoon|mobiel|bellen"
CARD_WORDS = "card|carte|tarjeta|karte|kreditkarte|carta|cartão|kaart|creditcard|visa|mastercard"
EXPIRY_WORDS = "exp|valid thru|valable|expira|caduc|vence|vencimiento|gültig|ablauf|scadenza|scade|validade|geldig|vervaldatum"
CVV_WORDS = "cvv|cvc|cvv2|security code|code de sécurité|cryptogramme|código de seguridad|prüfnummer|sicherheitscode|codice di sicurezza|código de segurança|beveiligingscode"
ROUTING_WORDS = "routing|aba|rtn|transit|routage|enrutamiento|ruteo|bankleit|instradamento|encaminhamento|routering"
ACCOUNT_WORDS = "account|acct|compte|cuenta|konto|kontonummer|conto|conta|rekening|rekeningnummer"
POSTAL_WORDS = "zip|postal|postcode|post code|code postal|cp|código postal|plz|postleitzahl|cap|codice postale|postcode"
USER_WORDS = "username|user|login|handle|utilisateur|pseudo|identifiant|usuario|benutzer|benutzername|utente|nome utente|utilizador|gebruiker|gebruikersnaam"
PASSWORD_WORDS = "password|passwd|pwd|passcode|mot de passe|contraseña|clave|passwort|kennwort|parola d'accesso|senha|palavra-passe|wachtwoord"
SECRET_WORDS = "secret|client_secret|secret_key|client secret|shared secret|secreto|geheimnis|geheim|segreto|segredo"
APIKEY_WORDS = "api key|api_key|apikey|x-api-key|clé api|clave api|api-schlüssel|chiave api|chave api|api-sleutel"
TOKEN_WORDS = "token|access_token|access token|bearer|jeton|jeton d'accès|token de acceso|zugangstoken|token di accesso|token de acesso|toegangstoken"
RECOVERY_WORDS = "recovery|backup code|code de récupération|récupération|recuperación|wiederherstellung|recupero|recuperação|herstelcode|herstel"
PASSPORT_WORDS = "passport|passeport|pasaporte|reisepass|pass-nr|passaporto|passaporte|paspoort"
NATIONAL_WORDS = "ssn|social security|national id|national insurance|id number|identity number|sécurité sociale|numéro d'identité|carte d'identité|dni|documento nacional|personalausweis|ausweisnummer|codice fiscale|carta d'identità|cartão de cidadão|bsn|burgerservicenummer|identiteitsnummer"
DRIVER_WORDS = "driver's license|driver license|driving licence|driving license|permis de conduire|permis|licencia de conducir|carnet de conducir|führerschein|patente|carta de condução|rijbewijs"
LICENSE_WORDS = "license number|licence number|license no|licence no|numéro de licence|número de licencia|lizenznummer|numero di licenza|número de licença|licentienummer|professional license"
TAX_WORDS = "tax|vat|fiscal|nif|steuer|steuernummer|steuer-id|partita iva|iva|imposto|contribuinte|btw|fiscaal"
ACCOUNT_ID_WORDS = "customer id|member id|client id|id client|numéro client|id de cliente|número de cliente|kundennummer|kunden-id|codice cliente|id cliente|klantnummer|klant-id"
SENSITIVE_ACCOUNT_WORDS = "account id|id de compte|id de cuenta|konto-id|id account|id da conta|account-id|privileged|admin account|compte administrateur"
DOB_WORDS = "date of birth|dob|born|birth|birthday|date de naissance|né le|née le|fecha de nacimiento|nacido|nacida|geburtsdatum|geboren|data di nascita|nato il|nata il|data de nascimento|nascido|nascida|geboortedatum|geboren op"
DOCDATE_WORDS = "dated|issued|issue date|date of issue|signed|invoice date|date d'émission|émis le|fait le|fecha de emisión|emitido|ausgestellt|ausstellungsdatum|data di emissione|emesso il|data de emissão|emitido em|datum van uitgifte|afgegeven"
EXPDATE_WORDS = "expires|expiry|expiration|valid until|date d'expiration|expire le|fecha de caducidad|caduca|vence|ablaufdatum|gültig bis|data di scadenza|scade il|data de validade|válido até|vervaldatum|geldig tot"
TXDATE_WORDS = "transaction|payment|paid|charged|transfer|paiement|virement|transacción|pago|transferencia|zahlung|überweisung|buchung|transazione|pagamento|bonifico|transação|transferência|betaling|overboeking|transactie"
DATE_WORDS = "date|datum|fecha|data"
ADDRESS_WORDS = "address|adresse|dirección|domicilio|indirizzo|morada|endereço|adres|anschrift"
IP_WORDS = "ip|address|from|host|server|adresse|dirección|indirizzo|endereço|adres"

_MONTH_ALT = "|".join(sorted((re.escape(m) for m in ALL_MONTHS), key=len, reverse=True))
DATE_PATTERN = (
    r"(?<![\w/.-])(?P<value>"
    r"\d{4}-\d{2}-\d{2}"
    r"|\d{1,2}[./-]\d{1,2}[./-]\d{4}"
    rf"|\d{{1,2}}(?:\.|º|er)?\s+(?:de\s+)?(?:{_MONTH_ALT})\s+(?:de\s+)?\d{{4}}"
    rf"|(?:{_MONTH_ALT})\s+\d{{1,2}},\s+\d{{4}}"
    r")(?![\w/-])"
)

ID_SHAPE = r"(?<![\w-])(?P<value>(?=[A-Z0-9-]*\d)[A-Z0-9][A-Z0-9-]{4,17}[A-Z0-9])(?![\w-])"


def _date_rule(label: str, words: str, base: float, delta: float, window: int = 40) -> DetectorRule:
    return DetectorRule(label, DATE_PATTERN, "date", _kw(words, window, delta), base, re.IGNORECASE, f"{label}-date")


def builtin_rules() -> tuple[DetectorRule, ...]:
    """The default rule pack.

    Unambiguous shapes (email, checksum-validated numbers, prefixed keys)
    clear the default threshold on their own; ambiguous ones need a context
    keyword.
    """
    return (
        DetectorRule(
            "email",
            r"(?<![\w.+-])(?P<value>[A-Za-z0-9][A-Za-z0-9._%+-]*@[A-Za-z0-9-]+(?:\.[A-Za-z0-9-]+)*\.[A-Za-z]{2,})(?![\w-])",
            base_confidence=0.9,
            name="email",
        ),
        DetectorRule(
            "phone_number",
            r"(?<![\w+])(?P<value>\+\d{1,3}(?:[ .-]?\(?\d{1,4}\)?){2,5}\d?)(?![\w])",
            None,
            _kw(PHONE_WORDS, 40, 0.3),
            0.6,
            name="phone-e164",
        ),
        DetectorRule(
            "phone_number",
            r"(?<![\w+])(?P<value>(?:\(\d{3}\)\s?\d{3}-\d{4}|0\d(?:[ .-]?\d{2}){4}|0\d{1,4}[ /-]\d{3,8}|[69]\d{2} \d{3} \d{3}|3\d{2} \d{3} \d{4}|9\d{2} \d{3} \d{3}))(?![\w])",
            None,
            _kw(PHONE_WORDS, 40, 0.45),
            0.35,
            name="phone-national",
        ),
        DetectorRule(
            "ip_address",
            r"(?<![\w.])(?P<value>(?:\d{1,3}\.){3}\d{1,3})(?![\w.])",
            "ip",
            _kw(IP_WORDS, 20, 0.1),
            0.8,
            name="ipv4",
        ),
        DetectorRule(
            "ip_address",
            r"(?<![\w:])(?P<value>(?:[0-9A-Fa-f]{1,4}:){2,7}[0-9A-Fa-f]{0,4}(?::[0-9A-Fa-f]{1,4})*)(?![\w:])",
            "ip",
            _kw(IP_WORDS, 20, 0.1),
            0.8,
            name="ipv6",
        ),
        DetectorRule(
            "iban",
            r"(?<![A-Za-z0-9])(?P<value>[A-Z]{2}\d{2}(?: ?[A-Z0-9]{4}){2,7}(?: ?[A-Z0-9]{1,3})?)(?![A-Za-z0-9])",
            "iban",
            base_confidence=0.95,
            name="iban",
        ),
        DetectorRule(
            "card_number",
            r"(?<![\d-])(?P<value>\d{4}(?:[ -]?\d{4}){2}(?:[ -]?\d{1,4}){1,2})(?![\d-])",
            "luhn",
            _kw(CARD_WORDS, 30, 0.05),
            0.9,
            name="card-number",
        ),
        DetectorRule(
            "card_expiry",
            r"(?<![\d/])(?P<value>(?:0[1-9]|1[0-2])\s?/\s?(?:\d{4}|\d{2}))(?![\d/])",
            None,
            _kw(EXPIRY_WORDS, 25, 0.4) + _kw(CARD_WORDS, 50, 0.1),
            0.35,
            name="card-expiry",
        ),
        DetectorRule(
            "card_cvv",
            r"(?<![\w/.-])(?P<value>\d{3,4})(?![\w/.-])",
            None,
            _kw(CVV_WORDS, 35, 0.6),
            0.2,
            name="card-cvv",
        ),
        DetectorRule(
            "routing_number",
            r"(?<![\w-])(?P<value>\d{9})(?![\w-])",
            "aba",
            _kw(ROUTING_WORDS, 40, 0.45),
            0.4,
            name="aba-routing",
        ),
        DetectorRule(
            "account_number",
            r"(?<![\w-])(?P<value>\d{8,12})(?![\w-])",
            None,
            _kw(ACCOUNT_WORDS, 35, 0.5) + _kw(ROUTING_WORDS, 20, -0.3),
            0.2,
            name="account-number",
        ),
        DetectorRule(
            "postal_code",
            r"(?<![\w-])(?P<value>\d{5}(?:-\d{4})?|\d{4}-\d{3}|\d{4} ?[A-Z]{2}|[A-Z]{1,2}\d[A-Z\d]? \d[A-Z]{2})(?![\w-])",
            None,
            _kw(POSTAL_WORDS, 35, 0.4) + _kw(ADDRESS_WORDS, 80, 0.2),
            0.3,
            name="postal-code",
        ),
        DetectorRule(
            "username",
            r"(?<![\w@.-])@?(?P<value>[A-Za-z][A-Za-z0-9._-]{2,30}[A-Za-z0-9])(?![\w@-])",
            "handle",
            _kw(USER_WORDS, 35, 0.7),
            0.1,
            name="username",
        ),
        DetectorRule(
            "api_key",
            r"(?<![\w-])(?P<value>(?:sk|pk|rk)_(?:live|test)_[A-Za-z0-9]{16,64}|AKIA[0-9A-Z]{16}|AIza[0-9A-Za-z_-]{35}|ghp_[A-Za-z0-9]{36}|xox[bpa]-[A-Za-z0-9-]{10,72})(?![\w-])",
            None,
            _kw(APIKEY_WORDS, 30, 0.05),
            0.9,
            name="api-key-prefixed",
        ),
        DetectorRule(
            "api_key",
            r"(?<![\w-])(?P<value>[A-Za-z0-9_-]{20,64})(?![\w-])",
            "entropy",
            _kw(APIKEY_WORDS, 30, 0.6),
            0.1,
            name="api-key-generic",
        ),
        DetectorRule(
            "access_token",
            r"(?<![\w-])(?P<value>eyJ[A-Za-z0-9_-]+\.[A-Za-z0-9_-]+\.[A-Za-z0-9_-]+)(?![\w-])",
            None,
            _kw(TOKEN_WORDS, 30, 0.05),
            0.9,
            name="jwt",
        ),
        DetectorRule(
            "access_token",
            r"(?<![\w-])(?P<value>[A-Za-z0-9_.~+/-]{20,200}=*)(?![\w=])",
            "entropy",
            _kw(TOKEN_WORDS, 30, 0.6),
            0.1,
            name="token-generic",
        ),
        DetectorRule(
            "password",
            r"(?<!\S)(?P<value>[^\s\"'`]{6,64}?)(?=[\s.,;]*(?:\s|$))",
            "entropy",
            _kw(PASSWORD_WORDS, 35, 0.7),
            0.0,
            name="password",
        ),
        DetectorRule(
            "secret",
            r"(?<![\w-])(?P<value>[A-Za-z0-9_+/=-]{12,128})(?![\w=-])",
            "entropy",
            _kw(SECRET_WORDS, 35, 0.65),
            0.05,
            name="secret",
        ),
        DetectorRule(
            "recovery_code",
            r"(?<![\w-])(?P<value>[A-Z0-9]{4,5}(?:-[A-Z0-9]{4,5}){1,3})(?![\w-])",
            "has_digit",
            _kw(RECOVERY_WORDS, 40, 0.5),
            0.25,
            name="recovery-code",
        ),
        DetectorRule(
            "passport_number",
            r"(?<![\w-])(?P<value>[A-Z]{1,2}\d{6,8}|\d{9}|[A-Z0-9]{9})(?![\w-])",
            "has_digit",
            _kw(PASSPORT_WORDS, 35, 0.6),
            0.1,
            name="passport",
        ),
        DetectorRule(
            "national_id_number",
            r"(?<![\w-])(?P<value>\d{3}-\d{2}-\d{4})(?![\w-])",
            None,
            _kw(NATIONAL_WORDS, 35, 0.3),
            0.55,
            name="ssn",
        ),
        DetectorRule(
            "national_id_number",
            r"(?<![\w-])(?P<value>\d{8}[A-Z]|[XYZ]\d{7}[A-Z]|[A-Z]{6}\d{2}[A-Z]\d{2}[A-Z]\d{3}[A-Z]|\d{1} ?\d{2} ?\d{2} ?\d{2} ?\d{3} ?\d{3} ?\d{2}|\d{9}|[A-Z0-9]{9}|\d{8} ?\d [A-Z]{2}\d)(?![\w-])",
            "has_digit",
            _kw(NATIONAL_WORDS, 35, 0.6),
            0.1,
            name="national-id",
        ),
        DetectorRule(
            "drivers_license_number",
            ID_SHAPE,
            None,
            _kw(DRIVER_WORDS, 40, 0.65),
            0.05,
            name="drivers-license",
        ),
        DetectorRule(
            "license_number",
            ID_SHAPE,
            None,
            _kw(LICENSE_WORDS, 40, 0.65) + _kw(DRIVER_WORDS, 40, -0.5),
            0.05,
            name="license",
        ),
        DetectorRule(
            "tax_number",
            r"(?<![\w-])(?P<value>(?=[A-Z0-9 ./-]*\d)[A-Z0-9][A-Z0-9 ./-]{5,18}[A-Z0-9])(?![\w-])",
            "has_digit",
            _kw(TAX_WORDS, 35, 0.6),
            0.05,
            name="tax-number",
        ),
        DetectorRule(
            "sensitive_account_id",
            r"(?<![\w-])(?P<value>[A-Z]{2,5}-\d{5,10})(?![\w-])",
            None,
            _kw(SENSITIVE_ACCOUNT_WORDS, 35, 0.45),
            0.3,
            name="sensitive-account-id",
        ),
        DetectorRule(
            "account_id",
            r"(?<![\w-])(?P<value>[A-Z]{2,5}-\d{5,10})(?![\w-])",
            None,
            _kw(ACCOUNT_ID_WORDS, 35, 0.45),
            0.3,
            name="account-id",
        ),
        _date_rule("date_of_birth", DOB_WORDS, 0.15, 0.6),
        _date_rule("document_date", DOCDATE_WORDS, 0.15, 0.6),
        _date_rule("expiration_date", EXPDATE_WORDS, 0.15, 0.6),
        _date_rule("transaction_date", TXDATE_WORDS, 0.15, 0.6),
        _date_rule("sensitive_date", DATE_WORDS, 0.3, 0.3),
    )


@dataclass(frozen=True)
class RulePack:
    rules: tuple[DetectorRule, ...] = field(default_factory=builtin_rules)

    def for_labels(self, labels: set[str]) -> list[DetectorRule]:
        return [r for r in self.rules if r.label in labels]
