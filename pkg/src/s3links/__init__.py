"""Colorings of link diagrams by the symmetric group S3."""

from .diagram import Crossing, Diagram, DiagramError, components, linking_number, validate
from .group import ClassLabel, S3Element
from .kernel import BACKEND
from .notation import (FamilySpec, double_twist_diagram, emit_diagram, parse_diagram,
                       parse_family, plat_diagram, torus2_diagram)
from .solver import (classify, component_class_profile, constructive_conway_coloring,
                     determinant, enumerate_colorings, fox_coloring_count, is_valid_coloring)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "ClassLabel", "Crossing", "Diagram", "DiagramError", "FamilySpec", "S3Element",
    "classify", "component_class_profile", "components", "constructive_conway_coloring",
    "determinant", "double_twist_diagram", "emit_diagram", "enumerate_colorings",
    "fox_coloring_count", "is_valid_coloring", "linking_number", "parse_diagram", "parse_family",
    "plat_diagram", "torus2_diagram", "validate",
]
