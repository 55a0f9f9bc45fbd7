"""Propositional abduction over Post's lattice: solving, counting,
enumeration and complexity classification by clone."""

from .classifier import Verdict, classify_counting, classify_decision
from .clones import CloneId, clone_id, clone_leq, find_representation
from .counting import CountResult, count
from .formula import BoolFun, KnowledgeBase, parse_sexpr, to_sexpr
from .generators import GenSpec, gen_random, generate
from .model import Explanation, Instance, Manifestation, Mode, make_instance, parse_instance
from .solvers import Algorithm, SolveResult, enumerate_explanations, solve

__version__ = "0.1.0"

__all__ = [
    "Algorithm", "BoolFun", "CloneId", "CountResult", "Explanation", "GenSpec", "Instance",
    "KnowledgeBase", "Manifestation", "Mode", "SolveResult", "Verdict", "classify_counting",
    "classify_decision", "clone_id", "clone_leq", "count", "enumerate_explanations",
    "find_representation", "gen_random", "generate", "make_instance", "parse_instance",
    "parse_sexpr", "solve", "to_sexpr",
]
