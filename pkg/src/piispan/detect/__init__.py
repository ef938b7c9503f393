from .engine import (
    BUILTIN,
    DEFAULT_THRESHOLD,
    BackendDescriptor,
    BuiltinDetector,
    DetectionError,
    DetectionRequest,
    RemoteMalformedResponseError,
    RemoteUnreachableError,
    TextTooLongError,
    extract_entities,
    extract_many,
)
from .remote import API_KEY_ENV, RemoteResponseWarning, remote_extract
from .rules import ContextKeyword, DetectorRule, apply_context_boost, builtin_rules
from .validators import MalformedInputError, aba_routing_check, iban_check, luhn_check

__all__ = [
    "API_KEY_ENV",
    "BUILTIN",
    "DEFAULT_THRESHOLD",
    "BackendDescriptor",
    "BuiltinDetector",
    "ContextKeyword",
    "DetectionError",
    "DetectionRequest",
    "DetectorRule",
    "MalformedInputError",
    "RemoteMalformedResponseError",
    "RemoteResponseWarning",
    "RemoteUnreachableError",
    "TextTooLongError",
    "aba_routing_check",
    "apply_context_boost",
    "builtin_rules",
    "extract_entities",
    "extract_many",
    "iban_check",
    "luhn_check",
    "remote_extract",
]
