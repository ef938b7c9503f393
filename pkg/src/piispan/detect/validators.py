"""Checksum validators for payment cards, IBANs and ABA routing numbers."""

from __future__ import annotations

import re


class MalformedInputError(ValueError):
    """Input does not have the shape a validator requires."""


_SEPARATORS = re.compile(r"[ \-]")
_IBAN_CHARS = re.compile(r"[A-Z0-9]+")


def luhn_check(digits: str) -> bool:
    """True iff the Luhn sum of a 12-19 digit string is 0 mod 10.

    Spaces and hyphens are ignored.
    """
    cleaned = _SEPARATORS.sub("", digits)
    if not cleaned.isascii() or not cleaned.isdigit():
        raise MalformedInputError(f"non-digit characters in {digits!r}")
    if not 12 <= len(cleaned) <= 19:
        raise MalformedInputError(f"card numbers have 12-19 digits, got {len(cleaned)}")
    total = 0
    for i, ch in enumerate(reversed(cleaned)):
        d = ord(ch) - 48
        if i % 2 == 1:
            d = d * 2 - 9 if d > 4 else d * 2
        total += d
    return total % 10 == 0


def luhn_check_digit(partial: str) -> str:
    """Digit that makes ``partial + digit`` pass the Luhn check."""
    total = 0
    for i, ch in enumerate(reversed(partial)):
        d = int(ch)
        if i % 2 == 0:
            d = d * 2 - 9 if d > 4 else d * 2
        total += d
    return str((10 - total % 10) % 10)


def normalize_iban(candidate: str) -> str:
    return candidate.replace(" ", "").upper()


def iban_check(candidate: str) -> bool:
    """True iff the rearranged IBAN, read as an integer, is 1 mod 97.

    Letters map to 10..35 and the value is reduced digit by digit, so no
    big integer is ever built.
    """
    iban = normalize_iban(candidate)
    if not 15 <= len(iban) <= 34:
        raise MalformedInputError(f"IBAN length must be 15-34, got {len(iban)}")
    if not iban.isascii() or not _IBAN_CHARS.fullmatch(iban):
        raise MalformedInputError(f"IBAN may only contain letters and digits: {candidate!r}")
    rearranged = iban[4:] + iban[:4]
    remainder = 0
    for ch in rearranged:
        if ch.isdigit():
            remainder = (remainder * 10 + int(ch)) % 97
        else:
            remainder = (remainder * 100 + ord(ch) - 55) % 97
    return remainder == 1


def iban_check_digits(country: str, bban: str) -> str:
    """Two check digits for ``country`` + ``bban``."""
    rearranged = bban.upper() + country.upper() + "00"
    value = int("".join(str(int(ch, 36)) for ch in rearranged))
    return f"{98 - value % 97:02d}"


_ABA_WEIGHTS = (3, 7, 1, 3, 7, 1, 3, 7, 1)


def aba_routing_check(digits: str) -> bool:
    """True iff the 3-7-1 weighted digit sum of a 9 digit routing number is 0 mod 10."""
    if len(digits) != 9 or not digits.isascii() or not digits.isdigit():
        raise MalformedInputError(f"routing numbers have exactly 9 digits: {digits!r}")
    return sum(w * int(d) for w, d in zip(_ABA_WEIGHTS, digits)) % 10 == 0


def aba_check_digit(first_eight: str) -> str:
    partial = sum(w * int(d) for w, d in zip(_ABA_WEIGHTS, first_eight))
    return str((10 - partial % 10) % 10)
