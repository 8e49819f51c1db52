"""Disconnected Cut: exact solvers for structured graph classes with
checkable certificates."""

from .circular_arc import ArcModel, recognize_arcs, solve_circular_arc, validate_arc_model
from .config import Budgets
from .errors import DiscutError, InternalError, InvalidInput, OutOfScope, PreconditionViolation
from .generators import GeneratorSpec, generate
from .graph import Graph, build_graph, complement
from .hfree import dispatch_hfree
from .line_graph import line_graph_of, reconstruct_root, solve_line_graph
from .oracle import check_partition, oracle_disconnected_cut
from .pipeline import c4_compaction_clawfree, c4_contractibility_clawfree, solve_auto, solve_claw_free
from .reductions import ReductionTrace, lift_certificate
from .verdict import Answer, DisconnectedPartition, Verdict

__version__ = "0.1.0"

__all__ = [
    "Answer",
    "ArcModel",
    "Budgets",
    "DisconnectedPartition",
    "DiscutError",
    "GeneratorSpec",
    "Graph",
    "InternalError",
    "InvalidInput",
    "OutOfScope",
    "PreconditionViolation",
    "ReductionTrace",
    "Verdict",
    "build_graph",
    "c4_compaction_clawfree",
    "c4_contractibility_clawfree",
    "check_partition",
    "complement",
    "dispatch_hfree",
    "generate",
    "lift_certificate",
    "line_graph_of",
    "oracle_disconnected_cut",
    "reconstruct_root",
    "recognize_arcs",
    "solve_auto",
    "solve_circular_arc",
    "solve_claw_free",
    "solve_line_graph",
    "validate_arc_model",
]
