"""Three-coloring for P10-free graphs whose induced odd cycles all have length seven."""

from .errors import (
    ContractViolation,
    ExtensionError,
    GenerationFailure,
    InputError,
    OracleRefusal,
    P10C7Error,
    StructuralDiagnostic,
)
from .graph import CycleC7, Graph, build_graph, induced_subgraph
from .membership import MembershipReport, check_membership

__all__ = [
    "ContractViolation",
    "CycleC7",
    "ExtensionError",
    "GenerationFailure",
    "Graph",
    "InputError",
    "MembershipReport",
    "OracleRefusal",
    "P10C7Error",
    "StructuralDiagnostic",
    "build_graph",
    "check_membership",
    "induced_subgraph",
]
