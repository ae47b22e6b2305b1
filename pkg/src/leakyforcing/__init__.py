"""Leaky zero forcing: exact solvers, fort duality, closed forms and audits."""

from __future__ import annotations

from .closed_forms import (
    CaseReport, family_value, structural_value, tree_value, unicyclic_Z1, unicyclic_Z2,
    unicyclic_Zl,
)
from .errors import (
    CaseMismatchError, DomainError, GraphParseError, LeakyForcingError, NotCoveredError,
    NotFoundError, NotUnicyclicError, ResourceError, SelfLoopError,
)
from .families import FamilySpec, generalized_petersen, generate, parse_family
from .forcing import closure, feasible_forcers, is_leaky_forcing_set, replay
from .forts import Fort, enumerate_minimal_forts, is_fort, min_fort_hitting_set
from .graph import (
    CycleDecomposition, Graph, enumerate_connected_graphs, parse_graph, serialize_graph,
    unique_cycle,
)
from .solver import SolveResult, leaky_forcing_number, mandatory_vertices, monotonicity_audit

__version__ = "0.1.0"
