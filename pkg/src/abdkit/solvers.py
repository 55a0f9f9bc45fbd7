"""Decision procedures for abduction, one per tractability region, plus the
generic search they are checked against."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import oracle, sat
from .affine import AffineModel, check_explanation, decide_full
from .clones import CloneId, clone_id, clone_leq
from .formula import Formula, evaluate, formula_vars
from .model import (
    NEGATIVE_CLASSES,
    TERM_CLASSES,
    Explanation,
    Instance,
    Lit,
    Manifestation,
    verify_explanation,
)

E, N, V, L, M, R1, I2 = (CloneId(n) for n in ("E", "N", "V", "L", "M", "R1", "I2"))

HAS = "has-explanation"
NONE = "no-explanation"


class Algorithm(str, enum.Enum):
    AUTO = "auto"
    GENERIC = "generic"
    MONOTONE = "monotone"
    AFFINE = "affine"
    SYNTACTIC = "syntactic"
    BRUTE = "brute"


class AlgorithmMismatch(ValueError):
    """A forced algorithm does not apply to the instance's clone or mode."""


@dataclass(frozen=True)
class SolveResult:
    status: str
    witness: Explanation | None
    algorithm: str

    def __post_init__(self):
        assert (self.status == HAS) == (self.witness is not None)

    @property
    def has_explanation(self) -> bool:
        return self.status == HAS

    def __bool__(self):
        return self.has_explanation


def _yes(e: Explanation, algo: str) -> SolveResult:
    return SolveResult(HAS, e, algo)


def _no(algo: str) -> SolveResult:
    return SolveResult(NONE, None, algo)


def instance_clone(p: Instance) -> CloneId:
    fs = p.functions
    return clone_id(fs) if fs else I2


def _syntactic_kind(c: CloneId) -> str | None:
    if clone_leq(c, E):
        return "E"
    if clone_leq(c, N):
        return "N"
    if clone_leq(c, V):
        return "V"
    return None


# -- syntactic (E, N, V) ---------------------------------------------------------

def _full(vs, value: int, **over) -> dict[str, int]:
    a = {v: value for v in vs}
    a.update(over)
    return a


def conj_form(f: Formula) -> frozenset[Lit] | None:
    """Literal set equivalent to a conjunction-shaped formula; None = false."""
    vs = sorted(formula_vars(f))
    if not evaluate(f, _full(vs, 1)):
        return None
    return frozenset((x, True) for x in vs if not evaluate(f, _full(vs, 1, **{x: 0})))


def unary_form(f: Formula) -> frozenset[Lit] | None:
    """Literal set (at most one) for a formula with one essential variable."""
    vs = sorted(formula_vars(f))
    base = evaluate(f, _full(vs, 0))
    for x in vs:
        flipped = evaluate(f, _full(vs, 0, **{x: 1}))
        if flipped != base:
            return frozenset({(x, bool(flipped))})
    return frozenset() if base else None


def clause_form(f: Formula) -> frozenset[str] | None | bool:
    """Positive clause for a disjunction-shaped formula: True = tautology,
    None = false, else the set of its variables."""
    vs = sorted(formula_vars(f))
    if evaluate(f, _full(vs, 0)):
        return True
    out = frozenset(x for x in vs if evaluate(f, _full(vs, 0, **{x: 1})))
    return out if out else None


def literal_kb(p: Instance, kind: str) -> frozenset[Lit] | None:
    norm = conj_form if kind == "E" else unary_form
    lits: set[Lit] = set()
    for f in p.kb.formulas:
        r = norm(f)
        if r is None:
            return None
        lits |= r
    if any((v, not s) in lits for v, s in lits):
        return None
    return frozenset(lits)


def _literal_entails(lits: frozenset[Lit], man: Manifestation, kind: str) -> bool:
    """Does the literal set entail the manifestation (whose variables it may
    leave free)?"""
    if man.kind == "formula":
        r = (conj_form if kind == "E" else unary_form)(man.formula)
        if r is None:
            return False
        return r <= lits
    if man.kind == "term":
        return all(l in lits for l in man.literals)
    names = [v for v, _ in man.literals]
    if len(set(names)) < len(names):
        return True
    return any(l in lits for l in man.literals)


def _exists_literal_kb(p: Instance, kind: str, assumed: Sequence[Lit]) -> bool:
    lits = literal_kb(p, kind)
    if lits is None:
        return False
    if any((v, not s) in lits for v, s in assumed):
        return False
    return _literal_entails(lits, p.manifestation, kind)


def _positive_target(man: Manifestation) -> frozenset[str] | bool:
    """Variables of the positive clause the manifestation behaves as under
    monotone knowledge; True = always entailed, False = never (when
    consistent)."""
    if man.kind == "formula":
        c = clause_form(man.formula)
        if c is True:
            return True
        return False if c is None else c
    names = [v for v, _ in man.literals]
    if man.kind in ("literal", "clause"):
        if len(set(names)) < len(names):
            return True
        pos = frozenset(v for v, s in man.literals if s)
        return pos if pos else False
    raise ValueError("terms have no single positive-clause form")


def _v_exists(
    p: Instance, remaining: Sequence[str], assumed: Sequence[Lit]
) -> Explanation | None:
    """Full explanation over ``remaining`` for a V-clone Γ plus ``assumed``."""
    a = dict(assumed)
    clauses: list[frozenset[str]] = []
    for f in p.kb.formulas:
        c = clause_form(f)
        if c is True:
            continue
        if c is None:
            return None
        if any(a.get(x) is True for x in c):
            continue
        c = frozenset(x for x in c if x not in a)
        if not c:
            return None
        clauses.append(c)
    target = _positive_target(p.manifestation)
    if target is False:
        return None
    rem = set(remaining)

    def witness(zero: frozenset[str]) -> Explanation:
        lits = list(assumed) + [(x, x not in zero) for x in remaining]
        return Explanation(lits)

    if target is True:
        return witness(frozenset())
    seen = set()
    for c in clauses:
        if c in seen or not c & target:
            continue
        seen.add(c)
        zero = c - target
        if not zero <= rem:
            continue
        if any(d <= zero for d in clauses):
            continue
        return witness(zero)
    return None


def solve_syntactic(p: Instance) -> SolveResult:
    """Normal-form procedures for clones inside E, N or V (symmetric mode)."""
    if p.positive:
        raise AlgorithmMismatch("syntactic procedures decide symmetric instances")
    kind = _syntactic_kind(instance_clone(p))
    if kind is None:
        raise AlgorithmMismatch(f"clone {instance_clone(p)} is not inside E, N or V")
    if kind == "V" and p.class_tag in TERM_CLASSES:
        r = solve_generic(p)
        return SolveResult(r.status, r.witness, "generic")
    if kind == "V":
        w = _v_exists(p, p.hyp_order, ())
        return _yes(w, "syntactic") if w is not None else _no("syntactic")
    if _exists_literal_kb(p, kind, ()):
        return _yes(Explanation(), "syntactic")
    return _no("syntactic")


# -- affine ------------------------------------------------------------------------

def solve_affine(p: Instance) -> SolveResult:
    if not clone_leq(instance_clone(p), L):
        raise AlgorithmMismatch(f"clone {instance_clone(p)} is not affine")
    model = AffineModel.of(p)
    if p.positive:
        for e in _subsets(p.hyp_order):
            if check_explanation(model, e.literals):
                return _yes(e, "affine")
        return _no("affine")
    ans = decide_full(model, p.hyp_order)
    if not ans.exists:
        return _no("affine")
    return _yes(Explanation(ans.witness.items()), "affine")


# -- monotone ------------------------------------------------------------------------

def _max_point(p: Instance, fixed: dict[str, bool], zero: frozenset[str] = frozenset()) -> dict:
    a = {v: True for v in p.kb.vars()}
    a.update(fixed)
    for v in zero:
        a[v] = False
    return a


def monotone_sat(p: Instance, e: dict[str, bool]) -> bool:
    return p.kb.holds(_max_point(p, e))


def monotone_entails(p: Instance, e: dict[str, bool]) -> bool:
    """Entailment of the manifestation by monotone Γ plus ``e``, assuming
    Γ plus ``e`` is satisfiable."""
    m = p.manifestation
    if m.kind == "formula":
        return sat.entails(p.kb, sorted(e.items()), m)
    if m.kind == "term":
        return all(
            s and not p.kb.holds(_max_point(p, e, frozenset({v}))) for v, s in m.literals
        )
    target = _positive_target(m)
    if target is True or target is False:
        return target
    return not p.kb.holds(_max_point(p, e, target))


def solve_monotone(p: Instance) -> SolveResult:
    c = instance_clone(p)
    if not clone_leq(c, M):
        raise AlgorithmMismatch(f"clone {c} is not monotone")
    if p.positive:
        raise AlgorithmMismatch("solve_monotone decides symmetric instances; use solve_positive")
    if p.class_tag in NEGATIVE_CLASSES:
        return _no("trivial")
    order = p.hyp_order

    # Positive literals never move the maximal model, so the search runs over
    # the set of hypotheses fixed false, each subset visited once.  Consistency
    # only shrinks and entailment only grows as that set grows.
    def go(start: int, e: dict[str, bool]) -> Explanation | None:
        if not monotone_sat(p, e):
            return None
        if monotone_entails(p, e):
            return Explanation({**{v: True for v in order}, **e}.items())
        for j in range(start, len(order)):
            e[order[j]] = False
            r = go(j + 1, e)
            del e[order[j]]
            if r is not None:
                return r
        return None

    w = go(0, {})
    return _yes(w, "monotone") if w is not None else _no("monotone")


# -- generic --------------------------------------------------------------------------

def _subsets(order: Sequence[str]) -> Iterator[Explanation]:
    """Positive candidates in lexicographic order (absent before present)."""
    for combo in itertools.product((False, True), repeat=len(order)):
        yield Explanation((v, True) for v, on in zip(order, combo) if on)


def solve_generic(p: Instance) -> SolveResult:
    """Guess-and-check search; complete for every clone and mode."""
    if p.positive:
        for e in _subsets(p.hyp_order):
            if verify_explanation(p, e):
                return _yes(e, "generic")
        return _no("generic")
    order = p.hyp_order

    def go(i: int, e: list[Lit]) -> Explanation | None:
        res = sat.satisfiable(p.kb, e)
        if not res:
            return None
        if sat.entails(p.kb, e, p.manifestation):
            full = dict(e)
            for v in order[i:]:
                full[v] = res.model[v]
            return Explanation(full.items())
        if i == len(order):
            return None
        for sign in (True, False):
            r = go(i + 1, e + [(order[i], sign)])
            if r is not None:
                return r
        return None

    w = go(0, [])
    return _yes(w, "generic") if w is not None else _no("generic")


# -- positive --------------------------------------------------------------------------

def _check_all_of_a(p: Instance, monotone: bool) -> bool:
    e = {v: True for v in p.hyp_order}
    if monotone:
        return monotone_sat(p, e) and monotone_entails(p, e)
    return verify_explanation(p, Explanation(e.items()))


def solve_positive(p: Instance) -> SolveResult:
    if not p.positive:
        raise AlgorithmMismatch("solve_positive needs a positive-mode instance")
    c = instance_clone(p)
    mono = clone_leq(c, M)
    if mono or clone_leq(c, R1):
        if p.class_tag in NEGATIVE_CLASSES:
            return _no("trivial")
        if _check_all_of_a(p, mono):
            return _yes(Explanation((v, True) for v in p.hyp_order), "all-hypotheses")
        return _no("all-hypotheses")
    if clone_leq(c, L):
        return solve_affine(p)
    return solve_generic(p)


# -- brute force and dispatch ----------------------------------------------------------

def solve_brute(p: Instance) -> SolveResult:
    es = oracle.brute_force_explanations(p, full_only=not p.positive)
    if not es:
        return _no("brute")
    return _yes(oracle.sorted_explanations(p, es)[0], "brute")


def auto_algorithm(p: Instance) -> str:
    """Name of the procedure auto-dispatch picks."""
    c = instance_clone(p)
    if p.positive:
        if clone_leq(c, M) or clone_leq(c, R1):
            return "trivial" if p.class_tag in NEGATIVE_CLASSES else "all-hypotheses"
        return "affine" if clone_leq(c, L) else "generic"
    kind = _syntactic_kind(c)
    if kind in ("E", "N") or (kind == "V" and p.class_tag not in TERM_CLASSES):
        return "syntactic"
    if clone_leq(c, L):
        return "affine"
    if clone_leq(c, M):
        return "trivial" if p.class_tag in NEGATIVE_CLASSES else "monotone"
    return "generic"


def solve(p: Instance, algorithm: Algorithm | str = Algorithm.AUTO) -> SolveResult:
    algo = Algorithm(algorithm)
    if algo is Algorithm.AUTO:
        if p.positive:
            r = solve_positive(p)
        else:
            pick = auto_algorithm(p)
            r = {
                "syntactic": solve_syntactic,
                "affine": solve_affine,
                "trivial": solve_monotone,
                "monotone": solve_monotone,
                "generic": solve_generic,
            }[pick](p)
    elif algo is Algorithm.GENERIC:
        r = solve_generic(p)
    elif algo is Algorithm.BRUTE:
        r = solve_brute(p)
    elif algo is Algorithm.AFFINE:
        r = solve_affine(p)
    elif algo is Algorithm.SYNTACTIC:
        r = solve_syntactic(p)
    elif p.positive:
        if not clone_leq(instance_clone(p), M):
            raise AlgorithmMismatch(f"clone {instance_clone(p)} is not monotone")
        r = solve_positive(p)
        r = SolveResult(r.status, r.witness, "monotone")
    else:
        r = solve_monotone(p)
    if r.witness is not None:
        assert verify_explanation(p, r.witness), f"{r.algorithm} produced a bad witness"
        assert r.witness.vars() <= p.hypotheses
    return r


# -- enumeration -------------------------------------------------------------------------

ENUM_MAX_HYPOTHESES = oracle.MAX_HYPOTHESES


def _descent_oracle(p: Instance):
    """Existence of a full explanation over the remaining hypotheses, for Γ
    strengthened by the assumed literals; None if the clone admits none."""
    c = instance_clone(p)
    kind = _syntactic_kind(c)
    if kind in ("E", "N"):
        return lambda assumed, remaining: _exists_literal_kb(p, kind, assumed)
    if clone_leq(c, L):
        model = AffineModel.of(p)
        return lambda assumed, remaining: decide_full(model, remaining, assumed).exists
    if kind == "V" and p.class_tag not in TERM_CLASSES:
        return lambda assumed, remaining: _v_exists(p, remaining, assumed) is not None
    return None


def enumerate_explanations(p: Instance) -> Iterator[Explanation]:
    """All explanations, lexicographically (per sorted hypothesis: absent,
    positive, negative)."""
    order = p.hyp_order
    exists = None if p.positive else _descent_oracle(p)
    if exists is None:
        if len(order) > ENUM_MAX_HYPOTHESES:
            raise oracle.OracleLimitError(
                f"exhaustive enumeration limited to {ENUM_MAX_HYPOTHESES} hypotheses"
            )
        cands = _subsets(order) if p.positive else oracle.candidates(p)
        for e in cands:
            if verify_explanation(p, e):
                yield e
        return

    def rec(i: int, assumed: list[Lit]) -> Iterator[Explanation]:
        if i == len(order):
            yield Explanation(assumed)
            return
        v = order[i]
        for choice in (None, True, False):
            nxt = assumed if choice is None else assumed + [(v, choice)]
            if exists(nxt, order[i + 1:]):
                yield from rec(i + 1, nxt)

    if exists([], order):
        yield from rec(0, [])
