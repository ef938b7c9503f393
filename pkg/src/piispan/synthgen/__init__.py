"""Constraint-driven synthetic corpus generation."""

from .constraints import (
    DOCUMENT_TYPES,
    REGISTERS,
    TONES,
    ConfigError,
    ConstraintSet,
    DiversityConstraint,
    GeneratorConfig,
    ProgrammaticConstraint,
    derive_seed,
    sample_constraints,
)
from .corpus import Coverage, generate_corpus
from .external import (
    GENERATOR_KEY_ENV,
    ExternalGenerationError,
    GeneratedExample,
    MissingCredentialsError,
    external_generate,
    generate_with_retries,
)
from .prompt import render_prompt
from .templates import UnsupportedCombinationError, generate_template, supported
from .units import UNITS, PlanningError, Unit, plan_units
from .validate import validate_example

__all__ = [
    "DOCUMENT_TYPES",
    "GENERATOR_KEY_ENV",
    "REGISTERS",
    "TONES",
    "UNITS",
    "ConfigError",
    "ConstraintSet",
    "Coverage",
    "DiversityConstraint",
    "ExternalGenerationError",
    "GeneratedExample",
    "GeneratorConfig",
    "MissingCredentialsError",
    "PlanningError",
    "ProgrammaticConstraint",
    "Unit",
    "UnsupportedCombinationError",
    "derive_seed",
    "external_generate",
    "generate_corpus",
    "generate_template",
    "generate_with_retries",
    "plan_units",
    "render_prompt",
    "sample_constraints",
    "supported",
    "validate_example",
]
