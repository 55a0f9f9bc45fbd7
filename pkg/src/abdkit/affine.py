"""GF(2) linear algebra for affine knowledge bases.

Each affine formula becomes one equation ``sum(vars) = rhs``.  Solution
spaces are projected onto the hypotheses by Gaussian elimination with the
non-hypothesis variables placed on the high bits, so pivots eliminate them
first.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .clones import function_properties
from .formula import Apply, BoolFun, Formula, FormulaError, Var
from .model import Instance, Lit, Manifestation

Row = tuple[int, int]  # (variable bitmask, right-hand side)


class NotAffineError(FormulaError):
    pass


@functools.lru_cache(maxsize=None)
def affine_form(fn: BoolFun) -> tuple[int, tuple[int, ...]]:
    """``(c, S)`` with ``fn(x) = c xor sum(x[i] for i in S)``."""
    if not function_properties(fn).affine:
        raise NotAffineError(f"{fn.name} is not affine")
    n = fn.arity
    c = fn.table[0]
    return c, tuple(i for i in range(n) if fn.table[1 << (n - 1 - i)] != c)


def formula_affine(f: Formula) -> tuple[int, frozenset[str]]:
    """Constant and odd-occurrence variable set of an affine formula."""
    memo: dict[Formula, tuple[int, frozenset[str]]] = {}

    def go(node: Formula):
        if isinstance(node, Var):
            return 0, frozenset((node.name,))
        hit = memo.get(node)
        if hit is not None:
            return hit
        assert isinstance(node, Apply)
        c, idx = affine_form(node.fn)
        vs: frozenset[str] = frozenset()
        for i in idx:
            cc, cv = go(node.args[i])
            c ^= cc
            vs = vs ^ cv
        memo[node] = (c, vs)
        return memo[node]

    return go(f)


def echelon(rows: Iterable[Row]) -> dict[int, Row] | None:
    """Pivot bit -> row, pivot being the row's highest bit; None if inconsistent."""
    pivots: dict[int, Row] = {}
    for m, b in rows:
        m, b = reduce_row(pivots, m, b)
        if m:
            pivots[m.bit_length() - 1] = (m, b)
        elif b:
            return None
    return pivots


def reduce_row(pivots: dict[int, Row], m: int, b: int) -> Row:
    while m:
        p = m.bit_length() - 1
        hit = pivots.get(p)
        if hit is None:
            break
        m ^= hit[0]
        b ^= hit[1]
    return m, b


def low_rows(pivots: dict[int, Row], k: int) -> list[Row]:
    """Rows involving only the ``k`` lowest bits: the projection's equations."""
    return [r for p, r in pivots.items() if p < k]


def solve_point(pivots: dict[int, Row]) -> int:
    """A solution with every free variable 0."""
    x = 0
    for p in sorted(pivots):
        m, b = pivots[p]
        rest = m & ~(1 << p) & x
        if b ^ (bin(rest).count("1") & 1):
            x |= 1 << p
    return x


@dataclass
class AffineModel:
    """Γ as equations, plus the manifestation's negation when it is affine."""

    gamma: list[tuple[int, frozenset[str]]]  # formula value constant, var set
    manifestation: Manifestation
    names: frozenset[str]

    @classmethod
    def of(cls, p: Instance) -> "AffineModel":
        return cls([formula_affine(f) for f in p.kb.formulas], p.manifestation, p.all_vars())


class _Frame:
    """Bit layout with the kept variables on the low bits."""

    def __init__(self, keep: Sequence[str], names: Iterable[str]):
        others = sorted(set(names) - set(keep))
        self.keep = list(keep)
        self.bit = {v: i for i, v in enumerate(self.keep)}
        for v in others:
            self.bit[v] = len(self.bit)
        self.k = len(self.keep)

    def row(self, c: int, vs: Iterable[str], value: int = 1) -> Row:
        m = 0
        for v in vs:
            m |= 1 << self.bit[v]
        return m, value ^ c

    def lit_row(self, lit: Lit) -> Row:
        v, s = lit
        return 1 << self.bit[v], 1 if s else 0

    def decode(self, x: int) -> dict[str, bool]:
        return {v: bool((x >> self.bit[v]) & 1) for v in self.keep}


def _negation_rows(fr: _Frame, man: Manifestation) -> list[Row] | None:
    """Equations for ``not phi``; None when ``not phi`` is not an equation set."""
    if man.kind in ("literal", "clause"):
        return [fr.lit_row((v, not s)) for v, s in man.literals]
    if man.kind == "formula":
        c, vs = formula_affine(man.formula)
        return [fr.row(c, vs, 0)]
    return None


def _dim(pivots: dict[int, Row] | None, k: int) -> int:
    """Dimension of the projection onto the low ``k`` bits, -1 when empty."""
    if pivots is None:
        return -1
    return k - len(low_rows(pivots, k))


@dataclass
class AffineAnswer:
    exists: bool
    witness: dict[str, bool] | None
    count: int  # full explanations over the kept hypotheses


def decide_full(
    model: AffineModel, hyps: Sequence[str], assumed: Sequence[Lit] = ()
) -> AffineAnswer:
    """Full explanations over ``hyps`` for Γ plus the ``assumed`` literals."""
    fr = _Frame(hyps, model.names | {v for v, _ in assumed})
    base = [fr.row(c, vs) for c, vs in model.gamma] + [fr.lit_row(l) for l in assumed]
    pi = echelon(base)
    if pi is None:
        return AffineAnswer(False, None, 0)
    prows = low_rows(pi, fr.k)
    d1 = fr.k - len(prows)
    man = model.manifestation
    neg = _negation_rows(fr, man)
    if neg is not None:
        bad = [echelon(base + neg)]
    else:
        bad = [echelon(base + [fr.lit_row((v, not s))]) for v, s in man.literals]
    # each violating projection is empty, all of P, or a coset of codimension
    # one; in the last case its distinguishing equation, flipped, cuts out
    # the complement inside P
    good_rows = list(prows)
    for v in bad:
        if v is None:
            continue
        if _dim(v, fr.k) == d1:
            return AffineAnswer(False, None, 0)
        if neg is not None:
            # a single violating set V inside P: count is |P| - |V|
            d0 = _dim(v, fr.k)
            ppv = echelon(prows)
            for m, b in low_rows(v, fr.k):
                rm, rb = reduce_row(ppv, m, b)
                if rm:
                    sel = echelon(prows + [(rm, rb ^ 1)])
                    assert sel is not None
                    pt = solve_point(sel)
                    return AffineAnswer(True, fr.decode(pt), (1 << d1) - (1 << d0))
            raise AssertionError("violating projection not separated")
        assert _dim(v, fr.k) == d1 - 1
        ppv = echelon(prows)
        for m, b in low_rows(v, fr.k):
            rm, rb = reduce_row(ppv, m, b)
            if rm:
                good_rows.append((rm, rb ^ 1))
                break
        else:
            raise AssertionError("violating projection not separated")
    sel = echelon(good_rows)
    if sel is None:
        return AffineAnswer(False, None, 0)
    d = fr.k - len(sel)
    return AffineAnswer(True, fr.decode(solve_point(sel)), 1 << d)


def check_explanation(model: AffineModel, lits: Iterable[Lit]) -> bool:
    """Linear-algebra verification of an arbitrary literal set."""
    lits = list(lits)
    fr = _Frame([], model.names | {v for v, _ in lits})
    base = [fr.row(c, vs) for c, vs in model.gamma] + [fr.lit_row(l) for l in lits]
    if echelon(base) is None:
        return False
    neg = _negation_rows(fr, model.manifestation)
    if neg is not None:
        return echelon(base + neg) is None
    return all(
        echelon(base + [fr.lit_row((v, not s))]) is None
        for v, s in model.manifestation.literals
    )
