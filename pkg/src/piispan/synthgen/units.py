"""Value units: one rendered value and the set of labels it is annotated with.

A unit such as ``person_full`` writes one name and annotates it as person,
full_name, first_name and last_name at once.  The planner counts every
label a unit carries, so coarse/fine co-annotation never breaks count bounds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping


@dataclass(frozen=True)
class Unit:
    name: str
    labels: frozenset[str]
    field: str  # label whose localized field name introduces the value


def _u(name: str, field: str, *labels: str) -> Unit:
    return Unit(name, frozenset(labels) | {field}, field)


_SINGLETONS = (
    "full_name", "first_name", "middle_name", "last_name", "date_of_birth",
    "email", "phone_number", "street_address", "city", "state_or_region",
    "postal_code", "country", "national_id_number", "passport_number",
    "drivers_license_number", "license_number", "tax_number", "account_number",
    "routing_number", "iban", "card_number", "card_expiry", "card_cvv",
    "username", "ip_address", "account_id", "sensitive_account_id",
    "password", "secret", "api_key", "access_token", "recovery_code",
    "sensitive_date", "document_date", "expiration_date", "transaction_date",
)

UNITS: tuple[Unit, ...] = (
    _u("person_full", "person", "full_name", "first_name", "last_name"),
    _u("person_first", "person", "first_name"),
    _u("full_name_parts", "full_name", "first_name", "last_name"),
    _u("full_name_middle", "full_name", "first_name", "middle_name", "last_name"),
    _u("address_postal", "address", "street_address", "postal_code", "city", "country"),
    _u("address_region", "address", "street_address", "city", "state_or_region", "postal_code"),
    _u("address_short", "address", "street_address", "city"),
    _u("gov_national", "national_id_number", "government_id"),
    _u("gov_passport", "passport_number", "government_id"),
    _u("gov_driver", "drivers_license_number", "government_id"),
    _u("gov_license", "license_number", "government_id"),
    _u("tax", "tax_number", "tax_id"),
    _u("bank_account_number", "account_number", "bank_account"),
    _u("bank_iban", "iban", "bank_account"),
    _u("bank_routing", "routing_number", "bank_account"),
    _u("card", "card_number", "payment_card"),
    _u("account_sensitive", "sensitive_account_id", "account_id"),
    _u("dob_sensitive", "date_of_birth", "sensitive_date"),
    _u("document_date_sensitive", "document_date", "sensitive_date"),
    _u("expiration_date_sensitive", "expiration_date", "sensitive_date"),
    _u("transaction_date_sensitive", "transaction_date", "sensitive_date"),
) + tuple(_u(label, label) for label in _SINGLETONS)


@lru_cache(maxsize=None)
def units_for(label: str) -> tuple[Unit, ...]:
    return tuple(u for u in UNITS if label in u.labels)


class PlanningError(RuntimeError):
    pass


def plan_units(
    rng: random.Random,
    entity_counts: Mapping[str, tuple[int, int]],
    excluded: frozenset[str],
    depth: Mapping[str, int],
) -> list[Unit]:
    """Choose units so every bounded label lands inside its (min, max) range.

    Labels are visited coarsest first because coarse units also add their
    children; a singleton unit always remains for the finer labels.
    """
    counts: dict[str, int] = {}
    targets = {label: rng.randint(lo, hi) for label, (lo, hi) in sorted(entity_counts.items())}
    order = sorted(targets, key=lambda label: (depth.get(label, 0), label))
    chosen: list[Unit] = []

    def fits(unit: Unit) -> bool:
        if unit.labels & excluded:
            return False
        return all(
            counts.get(label, 0) + 1 <= entity_counts[label][1]
            for label in unit.labels
            if label in entity_counts
        )

    for label in order:
        while counts.get(label, 0) < targets[label]:
            options = [u for u in units_for(label) if fits(u)]
            if not options:
                break
            unit = rng.choice(options)
            chosen.append(unit)
            for lab in unit.labels:
                counts[lab] = counts.get(lab, 0) + 1
        lo = entity_counts[label][0]
        if counts.get(label, 0) < lo:
            raise PlanningError(f"cannot place {lo} x {label} within the other bounds")
    rng.shuffle(chosen)
    return chosen
