"""luckylab: exact solvers, gadget constructions and verification harnesses
for additive (lucky) graph labelings."""

__version__ = "0.1.0"

from .graph import Graph, build_graph
from .labeling import Labeling, ListAssignment, Violation, make_lists
from .formula import Cnf3Formula, make_formula
from .solver import SearchBudget, SolveReport

__all__ = [
    "Cnf3Formula",
    "Graph",
    "Labeling",
    "ListAssignment",
    "SearchBudget",
    "SolveReport",
    "Violation",
    "build_graph",
    "make_formula",
    "make_lists",
    "__version__",
]
