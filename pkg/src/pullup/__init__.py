"""pullup: pull duplicated, identically-typed class attributes into existing
or newly created superclasses, with an optional multiple-inheritance pass
that removes all remaining duplication."""

from .analysis import Candidate, common_props, filter_by_properties, prop_type_set
from .engine import EngineOptions, RestructureReport, restructure
from .errors import ModelError
from .generate import Family, GeneratorSpec, element_count, generate_model
from .metrics import (
    MetricsSnapshot,
    duplication_count,
    effectiveness,
    hierarchy_restriction_equal,
    snapshot,
)
from .model import ClassModel, Entity, Origin, PropertyDecl, PropKey, TypeRef
from .modelfile import load_model, save_model
from .rules import (
    RuleApplication,
    RuleKind,
    apply_shared_superclass_rule,
    exploit_multiple_inheritance,
    pull_up_props,
)

__version__ = "0.1.0"

__all__ = [
    "Candidate",
    "ClassModel",
    "EngineOptions",
    "Entity",
    "Family",
    "GeneratorSpec",
    "MetricsSnapshot",
    "ModelError",
    "Origin",
    "PropKey",
    "PropertyDecl",
    "RestructureReport",
    "RuleApplication",
    "RuleKind",
    "TypeRef",
    "apply_shared_superclass_rule",
    "common_props",
    "duplication_count",
    "effectiveness",
    "element_count",
    "exploit_multiple_inheritance",
    "filter_by_properties",
    "generate_model",
    "hierarchy_restriction_equal",
    "load_model",
    "prop_type_set",
    "pull_up_props",
    "restructure",
    "save_model",
    "snapshot",
]
