"""Brute-force reference for explanations, using truth tables only.

Nothing here touches the SAT engine, so it can referee every solver.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .model import Explanation, Instance
from .tables import formula_table, var_columns

MAX_HYPOTHESES = 12
MAX_VARS = 20


class OracleLimitError(ValueError):
    pass


def check_limits(p: Instance) -> None:
    if len(p.hypotheses) > MAX_HYPOTHESES:
        raise OracleLimitError(
            f"oracle limited to {MAX_HYPOTHESES} hypotheses, got {len(p.hypotheses)}"
        )
    n = len(p.all_vars())
    if n > MAX_VARS:
        raise OracleLimitError(f"oracle limited to {MAX_VARS} variables, got {n}")


@dataclass(frozen=True)
class Fibers:
    """Per full assignment of the hypotheses: is the knowledge base satisfiable
    there, and does it have a model violating the manifestation."""

    order: tuple[str, ...]
    consistent: int  # bitmask over the 2^|A| hypothesis assignments
    violating: int
    cols: dict
    mask: int


def fibers(p: Instance) -> Fibers:
    check_limits(p)
    order = p.hyp_order
    rest = sorted(p.all_vars() - p.hypotheses)
    names = list(order) + rest
    cols, mask = var_columns(names)
    memo: dict = {}
    g = mask
    for f in p.kb.formulas:
        g &= formula_table(f, cols, mask, memo)
    m = p.manifestation
    if m.formula is not None:
        phi = formula_table(m.formula, cols, mask, memo)
    else:
        parts = [cols[v] if s else ~cols[v] & mask for v, s in m.literals]
        if m.kind == "term":
            phi = mask
            for t in parts:
                phi &= t
        else:
            phi = 0
            for t in parts:
                phi |= t
    bad = g & ~phi & mask
    width = 1 << len(rest)
    block = (1 << width) - 1
    consistent = violating = 0
    for a in range(1 << len(order)):
        # assignment a of the hypotheses owns bits [a*width, (a+1)*width)
        if (g >> (a * width)) & block:
            consistent |= 1 << a
        if (bad >> (a * width)) & block:
            violating |= 1 << a
    acols, amask = var_columns(order)
    return Fibers(tuple(order), consistent, violating, acols, amask)


def candidate_mask(fb: Fibers, e: Explanation) -> int:
    m = fb.mask
    for v, s in e.literals:
        m &= fb.cols[v] if s else ~fb.cols[v] & fb.mask
    return m


def is_explanation_tt(fb: Fibers, e: Explanation) -> bool:
    m = candidate_mask(fb, e)
    return bool(m & fb.consistent) and not (m & fb.violating)


def tt_verify(p: Instance, e: Explanation) -> bool:
    """Truth-table check of a single candidate."""
    return is_explanation_tt(fibers(p), e)


def candidates(p: Instance, full_only: bool = False):
    """Every candidate the mode admits, in lexicographic order."""
    order = p.hyp_order
    if p.positive:
        if full_only:
            yield Explanation((v, True) for v in order)
            return
        choices = [(None, (v, True)) for v in order]
    elif full_only:
        choices = [((v, True), (v, False)) for v in order]
    else:
        choices = [(None, (v, True), (v, False)) for v in order]
    for combo in itertools.product(*choices):
        yield Explanation(l for l in combo if l is not None)


def brute_force_explanations(p: Instance, full_only: bool = False) -> frozenset[Explanation]:
    fb = fibers(p)
    return frozenset(e for e in candidates(p, full_only) if is_explanation_tt(fb, e))


def sorted_explanations(p: Instance, es) -> list[Explanation]:
    order = p.hyp_order
    return sorted(es, key=lambda e: e.sort_key(order))


def has_explanation(p: Instance) -> bool:
    """Oracle decision: any explanation exists iff a full (or, positive, A) one does."""
    fb = fibers(p)
    if p.positive:
        return any(is_explanation_tt(fb, e) for e in candidates(p))
    # a full explanation is a single assignment with a consistent fiber and no violation
    return bool(fb.consistent & ~fb.violating & fb.mask)
