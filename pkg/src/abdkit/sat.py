"""Satisfiability and entailment for knowledge bases.

Formulas are translated row by row: every connective node gets an auxiliary
variable and one clause per truth-table row.  The search is a plain DPLL
with two watched literals, branching on the lowest unassigned index with
``false`` first and chronological backtracking, so models are reproducible.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .formula import Apply, Formula, KnowledgeBase, Var, evaluate, formula_vars
from .tables import formula_table, var_columns

BRUTE_MAX_VARS = 20

Lit = tuple[str, bool]


@dataclass
class CnfProblem:
    nvars: int
    clauses: list[list[int]]
    var_index: dict[str, int]
    roots: tuple[int, ...] = ()  # literals of formulas encoded but not asserted

    def literal(self, lit: Lit) -> int:
        v, s = lit
        i = self.var_index[v]
        return i if s else -i


def _encode(asserted: Sequence[Formula], floating: Sequence[Formula], names: Iterable[str]) -> CnfProblem:
    var_index: dict[str, int] = {}
    for v in sorted(names):
        var_index[v] = len(var_index) + 1
    nvars = len(var_index)
    clauses: list[list[int]] = []
    node_lit: dict[Formula, int] = {}

    def lit_of(node: Formula) -> int:
        nonlocal nvars
        if isinstance(node, Var):
            return var_index[node.name]
        hit = node_lit.get(node)
        if hit is not None:
            return hit
        assert isinstance(node, Apply)
        kids = [lit_of(c) for c in node.args]
        nvars += 1
        aux = nvars
        node_lit[node] = aux
        k = node.fn.arity
        for row, val in enumerate(node.fn.table):
            clause = []
            for i, c in enumerate(kids):
                clause.append(-c if (row >> (k - 1 - i)) & 1 else c)
            clause.append(aux if val else -aux)
            lits = set(clause)
            if any(-l in lits for l in lits):
                continue
            clauses.append(sorted(lits, key=lambda x: (abs(x), x)))
        return aux

    for f in asserted:
        clauses.append([lit_of(f)])
    roots = tuple(lit_of(f) for f in floating)
    return CnfProblem(nvars, clauses, var_index, roots)


@functools.lru_cache(maxsize=256)
def encode_kb(kb: KnowledgeBase, extra: tuple[Formula, ...] = ()) -> CnfProblem:
    names = set(kb.vars())
    for f in extra:
        names |= formula_vars(f)
    return _encode(kb.formulas, extra, names)


def dpll(nvars: int, clauses: Sequence[Sequence[int]], assumptions: Sequence[int] = ()) -> list[bool] | None:
    """A model as a list indexed by variable (index 0 unused), or None."""
    value = [0] * (nvars + 1)  # 0 unassigned, 1 true, -1 false
    trail: list[int] = []
    watches: dict[int, list[list[int]]] = {}
    pending: list[int] = []
    for c in clauses:
        if not c:
            return None
        if len(c) == 1:
            pending.append(c[0])
            continue
        cl = list(c)
        watches.setdefault(cl[0], []).append(cl)
        watches.setdefault(cl[1], []).append(cl)
    pending.extend(assumptions)

    def val(lit: int) -> int:
        v = value[abs(lit)]
        return v if lit > 0 else -v

    def assign(lit: int) -> bool:
        cur = val(lit)
        if cur == 1:
            return True
        if cur == -1:
            return False
        value[abs(lit)] = 1 if lit > 0 else -1
        trail.append(lit)
        return True

    def propagate(start: int) -> bool:
        i = start
        while i < len(trail):
            lit = trail[i]
            i += 1
            false_lit = -lit
            wl = watches.get(false_lit)
            if not wl:
                continue
            keep = []
            conflict = False
            j = 0
            while j < len(wl):
                cl = wl[j]
                j += 1
                if conflict:
                    keep.append(cl)
                    continue
                if cl[0] == false_lit:
                    cl[0], cl[1] = cl[1], cl[0]
                if val(cl[0]) == 1:
                    keep.append(cl)
                    continue
                moved = False
                for k in range(2, len(cl)):
                    if val(cl[k]) != -1:
                        cl[1], cl[k] = cl[k], cl[1]
                        watches.setdefault(cl[1], []).append(cl)
                        moved = True
                        break
                if moved:
                    continue
                keep.append(cl)
                if val(cl[0]) == -1:
                    conflict = True
                else:
                    assign(cl[0])
            watches[false_lit] = keep
            if conflict:
                return False
        return True

    for lit in pending:
        if not assign(lit):
            return None
    if not propagate(0):
        return None
    # decisions: (trail length before, variable, flipped?)
    stack: list[tuple[int, int, bool]] = []
    qhead = len(trail)
    next_var = 1
    while True:
        while next_var <= nvars and value[next_var] != 0:
            next_var += 1
        if next_var > nvars:
            return [False] + [value[i] == 1 for i in range(1, nvars + 1)]
        stack.append((len(trail), next_var, False))
        assign(-next_var)
        ok = propagate(qhead)
        while not ok:
            while stack and stack[-1][2]:
                stack.pop()
            if not stack:
                return None
            pos, var, _ = stack.pop()
            for lit in trail[pos:]:
                value[abs(lit)] = 0
            del trail[pos:]
            stack.append((pos, var, True))
            assign(var)
            ok = propagate(pos)
            next_var = min(next_var, var)
        qhead = len(trail)
        if stack:
            next_var = min(next_var, stack[-1][1])


class SatResult(NamedTuple):
    sat: bool
    model: dict[str, bool] | None

    def __bool__(self):
        return self.sat


def _solve(prob: CnfProblem, assumptions: Sequence[int]) -> list[bool] | None:
    return dpll(prob.nvars, prob.clauses, assumptions)


def _extra_lits(prob: CnfProblem, extra: Iterable[Lit]) -> list[int] | None:
    """Assumption literals; None if ``extra`` is contradictory on a variable
    outside the problem (such variables are otherwise unconstrained)."""
    out = []
    outside: dict[str, bool] = {}
    for v, s in extra:
        if v in prob.var_index:
            out.append(prob.literal((v, s)))
        elif outside.setdefault(v, s) != s:
            return None
    return out


def satisfiable(kb: KnowledgeBase, extra: Iterable[Lit] = ()) -> SatResult:
    extra = list(extra)
    prob = encode_kb(kb)
    assumptions = _extra_lits(prob, extra)
    if assumptions is None:
        return SatResult(False, None)
    model = _solve(prob, assumptions)
    if model is None:
        return SatResult(False, None)
    witness = {v: model[i] for v, i in prob.var_index.items()}
    for v, s in extra:
        witness.setdefault(v, s)
    assert kb.holds(witness), "DPLL witness fails evaluation"
    assert all(witness[v] == s for v, s in extra)
    return SatResult(True, witness)


def entails(kb: KnowledgeBase, extra: Iterable[Lit], manifestation) -> bool:
    """``kb & extra & not manifestation`` is unsatisfiable."""
    extra = list(extra)
    kind = manifestation.kind
    if kind in ("literal", "clause"):
        negs = [(v, not s) for v, s in manifestation.literals]
        return not satisfiable(kb, extra + negs)
    if kind == "term":
        return all(not satisfiable(kb, extra + [(v, not s)]) for v, s in manifestation.literals)
    phi = manifestation.formula
    prob = encode_kb(kb, (phi,))
    assumptions = _extra_lits(prob, extra)
    if assumptions is None:
        return True
    model = _solve(prob, assumptions + [-prob.roots[0]])
    if model is not None:
        witness = {v: model[i] for v, i in prob.var_index.items()}
        assert kb.holds(witness) and not evaluate(phi, witness)
    return model is None


def brute_sat(kb: KnowledgeBase, extra: Iterable[Lit] = ()) -> bool:
    """Exhaustive truth-table satisfiability (independent of the DPLL path)."""
    extra = list(extra)
    names = sorted(kb.vars() | {v for v, _ in extra})
    if len(names) > BRUTE_MAX_VARS:
        raise ValueError(f"brute_sat limited to {BRUTE_MAX_VARS} variables, got {len(names)}")
    cols, mask = var_columns(names)
    acc = mask
    memo: dict = {}
    for f in kb.formulas:
        acc &= formula_table(f, cols, mask, memo)
    for v, s in extra:
        acc &= cols[v] if s else ~cols[v] & mask
    return acc != 0
