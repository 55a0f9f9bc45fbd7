"""Counting full explanations (symmetric) and positive explanations."""

from __future__ import annotations

from dataclasses import dataclass

from . import oracle
from .affine import AffineModel, decide_full
from .clones import CloneId, clone_leq
from .model import Instance, Mode
from .solvers import literal_kb, monotone_entails, monotone_sat, instance_clone

E, N, L, M = (CloneId(n) for n in ("E", "N", "L", "M"))

CLOSED = "closed-form"
BRUTE = "brute-force"


@dataclass(frozen=True)
class CountResult:
    value: int
    method: str


def count_brute_force(p: Instance, kind: str = "full") -> CountResult:
    """Oracle count; ``kind`` is full, positive-all or positive-minimal."""
    if kind == "full":
        q = p if not p.positive else p.with_mode(Mode.SYMMETRIC)
        return CountResult(len(oracle.brute_force_explanations(q, full_only=True)), BRUTE)
    if kind not in ("positive-all", "positive-minimal"):
        raise ValueError(f"unknown count kind {kind!r}")
    q = p if p.positive else p.with_mode(Mode.POSITIVE)
    es = oracle.brute_force_explanations(q)
    if kind == "positive-all":
        return CountResult(len(es), BRUTE)
    minimal = [e for e in es if not any(f != e and f.issubset(e) for f in es)]
    return CountResult(len(minimal), BRUTE)


def count_full_explanations(p: Instance) -> CountResult:
    if p.positive:
        raise ValueError("full-explanation counting is for symmetric instances")
    if p.class_tag != "PQ":
        return count_brute_force(p, "full")
    c = instance_clone(p)
    kind = "E" if clone_leq(c, E) else "N" if clone_leq(c, N) else None
    if kind is not None:
        lits = literal_kb(p, kind)
        (q, _), = p.manifestation.literals
        if lits is None or (q, True) not in lits:
            return CountResult(0, CLOSED)
        # forced hypotheses are pinned, the rest are free
        forced = {v for v, _ in lits}
        return CountResult(1 << len(p.hypotheses - forced), CLOSED)
    if clone_leq(c, L):
        return CountResult(decide_full(AffineModel.of(p), p.hyp_order).count, CLOSED)
    return count_brute_force(p, "full")


def count_positive_explanations(p: Instance, minimal_only: bool = False) -> CountResult:
    if not p.positive:
        raise ValueError("positive counting needs a positive-mode instance")
    kind = "positive-minimal" if minimal_only else "positive-all"
    if p.class_tag != "PQ" or not clone_leq(instance_clone(p), M):
        return count_brute_force(p, kind)
    a = {v: True for v in p.hypotheses}
    if monotone_sat(p, a) and monotone_entails(p, a):
        return CountResult(1 if minimal_only else 1 << len(a), CLOSED)
    return CountResult(0, CLOSED)


def count(p: Instance, minimal_only: bool = False) -> CountResult:
    if p.positive:
        return count_positive_explanations(p, minimal_only)
    return count_full_explanations(p)
