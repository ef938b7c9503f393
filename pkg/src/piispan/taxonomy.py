"""Built-in PII label inventory: 42 labels, 7 semantic groups, coarse/fine links."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

GROUPS = (
    "person_identity",
    "contact_location",
    "government_tax",
    "banking_payment",
    "digital_identity",
    "secrets_credentials",
    "sensitive_dates",
)


class UnknownLabelError(KeyError):
    """Raised when a label is not part of a taxonomy."""


class TaxonomyError(ValueError):
    """Raised when a taxonomy definition breaks its structural invariants."""


@dataclass(frozen=True)
class LabelInfo:
    name: str
    group: str
    parent: str | None = None
    description: str | None = None


# (name, group, description) in table order
_LABELS: tuple[tuple[str, str, str], ...] = (
    ("person", "person_identity", "any mention that names an individual person"),
    ("full_name", "person_identity", "a person's complete name"),
    ("first_name", "person_identity", "a given name"),
    ("middle_name", "person_identity", "a middle name"),
    ("last_name", "person_identity", "a family name or surname"),
    ("date_of_birth", "person_identity", "a person's birth date"),
    ("email", "contact_location", "an email address"),
    ("phone_number", "contact_location", "a telephone or mobile number"),
    ("address", "contact_location", "a complete postal address"),
    ("street_address", "contact_location", "street name and house number"),
    ("city", "contact_location", "a city or town name"),
    ("state_or_region", "contact_location", "a state, province or region"),
    ("postal_code", "contact_location", "a postal or ZIP code"),
    ("country", "contact_location", "a country name"),
    ("government_id", "government_tax", "any government-issued identifier"),
    ("national_id_number", "government_tax", "a national identity or social security number"),
    ("passport_number", "government_tax", "a passport number"),
    ("drivers_license_number", "government_tax", "a driver's license number"),
    ("license_number", "government_tax", "a professional or business license number"),
    ("tax_id", "government_tax", "any tax identifier"),
    ("tax_number", "government_tax", "a personal or business tax number"),
    ("bank_account", "banking_payment", "any bank account reference"),
    ("account_number", "banking_payment", "a domestic bank account number"),
    ("routing_number", "banking_payment", "a bank routing (ABA) number"),
    ("iban", "banking_payment", "an international bank account number"),
    ("payment_card", "banking_payment", "any payment card reference"),
    ("card_number", "banking_payment", "a payment card number"),
    ("card_expiry", "banking_payment", "a payment card expiry date"),
    ("card_cvv", "banking_payment", "a card verification code"),
    ("username", "digital_identity", "a login or user handle"),
    ("ip_address", "digital_identity", "an IPv4 or IPv6 address"),
    ("account_id", "digital_identity", "an account or customer identifier"),
    ("sensitive_account_id", "digital_identity", "an identifier of a sensitive account"),
    ("password", "secrets_credentials", "a password or passphrase"),
    ("secret", "secrets_credentials", "a generic secret value"),
    ("api_key", "secrets_credentials", "an API key"),
    ("access_token", "secrets_credentials", "a bearer or session access token"),
    ("recovery_code", "secrets_credentials", "a backup or account recovery code"),
    ("sensitive_date", "sensitive_dates", "any date whose disclosure is sensitive"),
    ("document_date", "sensitive_dates", "the issue or signing date of a document"),
    ("expiration_date", "sensitive_dates", "the expiry date of a document or credential"),
    ("transaction_date", "sensitive_dates", "the date of a financial transaction"),
)

# child -> coarser parent; overridable data
DEFAULT_PARENTS: dict[str, str] = {
    "full_name": "person",
    "first_name": "full_name",
    "middle_name": "full_name",
    "last_name": "full_name",
    "street_address": "address",
    "city": "address",
    "state_or_region": "address",
    "postal_code": "address",
    "country": "address",
    "national_id_number": "government_id",
    "passport_number": "government_id",
    "drivers_license_number": "government_id",
    "license_number": "government_id",
    "tax_number": "tax_id",
    "account_number": "bank_account",
    "routing_number": "bank_account",
    "iban": "bank_account",
    "card_number": "payment_card",
    "card_expiry": "payment_card",
    "card_cvv": "payment_card",
    "sensitive_account_id": "account_id",
    "document_date": "sensitive_date",
    "expiration_date": "sensitive_date",
    "transaction_date": "sensitive_date",
    # single parent only; the label also sits in the person/identity group
    "date_of_birth": "sensitive_date",
}

MAX_PARENT_DEPTH = 2


class Taxonomy:
    """An immutable, ordered collection of :class:`LabelInfo` records."""

    def __init__(self, labels: Iterable[LabelInfo]):
        ordered = tuple(labels)
        by_name: dict[str, LabelInfo] = {}
        for info in ordered:
            if info.name in by_name:
                raise TaxonomyError(f"duplicate label {info.name!r}")
            if info.group not in GROUPS:
                raise TaxonomyError(f"label {info.name!r} has unknown group {info.group!r}")
            by_name[info.name] = info
        self._labels = ordered
        self._by_name = by_name
        for info in ordered:
            self._check_chain(info)

    def _check_chain(self, info: LabelInfo) -> None:
        seen = {info.name}
        depth = 0
        current = info
        while current.parent is not None:
            if current.parent not in self._by_name:
                raise TaxonomyError(
                    f"label {current.name!r} names unknown parent {current.parent!r}"
                )
            if current.parent in seen:
                raise TaxonomyError(f"parent cycle through {current.parent!r}")
            seen.add(current.parent)
            depth += 1
            if depth > MAX_PARENT_DEPTH:
                raise TaxonomyError(f"parent chain of {info.name!r} deeper than {MAX_PARENT_DEPTH}")
            current = self._by_name[current.parent]

    def __len__(self) -> int:
        return len(self._labels)

    def __iter__(self) -> Iterator[LabelInfo]:
        return iter(self._labels)

    def __contains__(self, name: object) -> bool:
        return name in self._by_name

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Taxonomy) and self._labels == other._labels

    def __hash__(self) -> int:
        return hash(self._labels)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(info.name for info in self._labels)

    def lookup(self, name: str) -> LabelInfo:
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownLabelError(name) from None

    def group_of(self, name: str) -> str:
        return self.lookup(name).group

    def by_group(self, group: str) -> tuple[LabelInfo, ...]:
        return tuple(info for info in self._labels if info.group == group)

    def ancestors(self, name: str) -> tuple[str, ...]:
        """Parent chain of ``name``, nearest first."""
        chain = []
        current = self.lookup(name)
        while current.parent is not None:
            chain.append(current.parent)
            current = self._by_name[current.parent]
        return tuple(chain)

    def children(self, name: str) -> tuple[str, ...]:
        return tuple(info.name for info in self._labels if info.parent == name)

    def with_parents(self, parents: dict[str, str | None]) -> Taxonomy:
        """Copy of this taxonomy with the parent links replaced."""
        return Taxonomy(
            LabelInfo(info.name, info.group, parents.get(info.name), info.description)
            for info in self._labels
        )

    def dump(self, path: str | Path) -> None:
        """Write one JSON record per label."""
        with open(path, "w", encoding="utf-8") as fh:
            for info in self._labels:
                record = {
                    "name": info.name,
                    "group": info.group,
                    "parent": info.parent,
                    "description": info.description,
                }
                fh.write(json.dumps(record, ensure_ascii=False) + "\n")

    @classmethod
    def load(cls, path: str | Path) -> Taxonomy:
        labels = []
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                try:
                    record = json.loads(line)
                    labels.append(
                        LabelInfo(
                            name=record["name"],
                            group=record["group"],
                            parent=record.get("parent"),
                            description=record.get("description"),
                        )
                    )
                except (json.JSONDecodeError, KeyError, TypeError) as exc:
                    raise TaxonomyError(f"{path}:{lineno}: bad label record ({exc})") from exc
        return cls(labels)


_BUILTIN: Taxonomy | None = None


def builtin_taxonomy() -> Taxonomy:
    """The 42-label inventory with the default parent table."""
    global _BUILTIN
    if _BUILTIN is None:
        _BUILTIN = Taxonomy(
            LabelInfo(name, group, DEFAULT_PARENTS.get(name), description)
            for name, group, description in _LABELS
        )
    return _BUILTIN
