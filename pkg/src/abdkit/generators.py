"""Instance generators: reductions from classic problems plus seeded random
instances.  Each generator returns the instance and metadata describing the
relation it guarantees, with the source-side answer computed by brute force."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from . import library as lib
from .clones import rewrite_over
from .formula import Apply, BoolFun, Formula, FormulaError, Var, parse_function
from .model import (
    Instance,
    Lit,
    Manifestation,
    Mode,
    eliminate_true_constant,
    make_instance,
)

KINDS = (
    "two_in_three",
    "three_sat_term",
    "qsat2",
    "linear_system",
    "pos2sat_count",
    "pi1_count",
    "unsat_3cnf_pos",
    "taut_3dnf_pos",
    "random",
)

DEFAULT_TARGETS = {
    "two_in_three": (lib.OR, lib.AND),
    "three_sat_term": (lib.OR,),
    "qsat2": (lib.OR_AND,),
    "linear_system": (lib.XOR3,),
    "pos2sat_count": (lib.OR,),
    "pi1_count": (lib.OR, lib.NOT),
    "unsat_3cnf_pos": (lib.IMP,),
    "taut_3dnf_pos": (lib.OR_AND,),
}


class GeneratorError(ValueError):
    pass


@dataclass(frozen=True)
class GenSpec:
    kind: str
    payload: Any
    target: tuple[BoolFun, ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise GeneratorError(f"unknown generator kind {self.kind!r}")


@dataclass
class Generated:
    instance: Instance
    metadata: dict = field(default_factory=dict)


# -- payload objects -----------------------------------------------------------------

Clause = tuple[Lit, ...]


@dataclass(frozen=True)
class Sigma2:
    """exists xs forall ys: disjunction of terms."""

    exists: tuple[str, ...]
    forall: tuple[str, ...]
    terms: tuple[Clause, ...]


@dataclass(frozen=True)
class Pi1:
    """psi(xs) = forall ys: disjunction of terms."""

    free: tuple[str, ...]
    forall: tuple[str, ...]
    terms: tuple[Clause, ...]


Equation = tuple[tuple[str, ...], int]


# -- source-side brute force ---------------------------------------------------------------

def _assignments(names: Sequence[str]):
    for bits in itertools.product((False, True), repeat=len(names)):
        yield dict(zip(names, bits))


def _vars_of_clauses(cs: Iterable[Clause]) -> list[str]:
    return sorted({v for c in cs for v, _ in c})


def _clause_true(c: Clause, a) -> bool:
    return any(a[v] == s for v, s in c)


def _term_true(t: Clause, a) -> bool:
    return all(a[v] == s for v, s in t)


def cnf_satisfiable(cnf: Sequence[Clause]) -> bool:
    names = _vars_of_clauses(cnf)
    return any(all(_clause_true(c, a) for c in cnf) for a in _assignments(names))


def cnf_model_count(cnf: Sequence[Clause], names: Sequence[str]) -> int:
    return sum(all(_clause_true(c, a) for c in cnf) for a in _assignments(names))


def dnf_tautology(dnf: Sequence[Clause]) -> bool:
    names = _vars_of_clauses(dnf)
    return all(any(_term_true(t, a) for t in dnf) for a in _assignments(names))


def two_in_three_satisfiable(clauses: Sequence[tuple[str, str, str]]) -> bool:
    names = sorted({v for c in clauses for v in c})
    return any(all(sum(a[v] for v in c) == 2 for c in clauses) for a in _assignments(names))


def sigma2_true(s: Sigma2) -> bool:
    for ax in _assignments(s.exists):
        if all(
            any(_term_true(t, {**ax, **ay}) for t in s.terms) for ay in _assignments(s.forall)
        ):
            return True
    return False


def pi1_model_count(s: Pi1) -> int:
    total = 0
    for ax in _assignments(s.free):
        if all(any(_term_true(t, {**ax, **ay}) for t in s.terms) for ay in _assignments(s.forall)):
            total += 1
    return total


def linear_system_solvable(eqs: Sequence[Equation]) -> bool:
    names = sorted({v for vs, _ in eqs for v in vs})
    return any(
        all(sum(a[v] for v in vs) % 2 == c for vs, c in eqs) for a in _assignments(names)
    )


# -- construction helpers ----------------------------------------------------------------------

class Namer:
    """Fresh names: the proof's name behind an underscore, bumped on collision."""

    def __init__(self, taken: Iterable[str]):
        self.taken = set(taken)

    def __call__(self, base: str) -> str:
        name = "_" + base
        k = 0
        while name in self.taken:
            k += 1
            name = f"_{base}_{k}"
        self.taken.add(name)
        return name


def balanced(fn: BoolFun, leaves: Sequence[Formula]) -> Formula:
    """Logarithmic-depth tree of a binary associative connective."""
    if not leaves:
        raise GeneratorError(f"empty {fn.name}-tree")
    if len(leaves) == 1:
        return leaves[0]
    mid = (len(leaves) + 1) // 2
    return Apply(fn, (balanced(fn, leaves[:mid]), balanced(fn, leaves[mid:])))


def disj(names: Sequence[str]) -> Formula:
    return balanced(lib.OR, [Var(v) for v in names])


def conj(names: Sequence[str]) -> Formula:
    return balanced(lib.AND, [Var(v) for v in names])


def _odd_split(n: int) -> tuple[int, int, int]:
    """Three odd parts summing to the odd ``n >= 3``, as even as possible."""
    a = n // 3
    if a % 2 == 0:
        a -= 1
    rest = n - a
    b = rest // 2
    if b % 2 == 0:
        b -= 1
    return a, b, rest - b


def xor3_tree(leaves: Sequence[Formula]) -> Formula:
    """Ternary parity tree of logarithmic depth over an odd number of leaves."""
    if len(leaves) % 2 == 0:
        raise GeneratorError("ternary parity trees need an odd number of leaves")
    if len(leaves) == 1:
        return leaves[0]
    a, b, c = _odd_split(len(leaves))
    assert a % 2 and b % 2 and c % 2 and c >= 1, (len(leaves), a, b, c)
    return Apply(
        lib.XOR3,
        (xor3_tree(leaves[:a]), xor3_tree(leaves[a:a + b]), xor3_tree(leaves[a + b:])),
    )


def _targets(spec: GenSpec) -> tuple[BoolFun, ...]:
    return spec.target or DEFAULT_TARGETS[spec.kind]


def _realize(formulas: Iterable[Formula], target: Sequence[BoolFun]) -> list[Formula]:
    try:
        return [rewrite_over(f, target) for f in formulas]
    except FormulaError as exc:
        raise GeneratorError(str(exc)) from None


def _check_clauses(cs, width: int | None = None, positive: bool = False):
    for c in cs:
        if not c:
            raise GeneratorError("empty clause in payload")
        if width is not None and len(c) != width:
            raise GeneratorError(f"clause {c} does not have {width} literals")
        if positive and not all(s for _, s in c):
            raise GeneratorError(f"clause {c} is not positive")


# -- the reductions ------------------------------------------------------------------------------

def gen_two_in_three(clauses: Sequence[tuple[str, str, str]], target) -> Generated:
    clauses = [tuple(c) for c in clauses]
    if not clauses:
        raise GeneratorError("two_in_three needs at least one clause")
    for c in clauses:
        if len(c) != 3 or len(set(c)) != 3:
            raise GeneratorError(f"two_in_three clause {c} needs 3 distinct variables")
    names = sorted({v for c in clauses for v in c})
    fresh = Namer(names)
    qs = [fresh(f"q{i + 1}") for i in range(len(clauses))]
    q = fresh("q")
    gamma: list[Formula] = []
    for c in clauses:
        gamma.append(disj(c))
    for (a, b, c), qi in zip(clauses, qs):
        gamma += [disj([a, b, qi]), disj([a, c, qi]), disj([b, c, qi])]
    big = [conj(c) for c in clauses] + [Var(v) for v in qs] + [Var(q)]
    gamma.append(balanced(lib.OR, big))
    p = make_instance(_realize(gamma, target), target, names + qs, Manifestation.literal(q))
    return Generated(p, {
        "relation": "solvable iff some assignment makes exactly two variables of every clause true",
        "expected_solvable": two_in_three_satisfiable(clauses),
    })


def gen_three_sat_term(cnf: Sequence[Clause], target) -> Generated:
    _check_clauses(cnf)
    names = _vars_of_clauses(cnf)
    fresh = Namer(names)
    prime = {x: fresh(x + "p") for x in names}
    qs = {x: fresh("q" + x) for x in names}
    gamma = [disj([v if s else prime[v] for v, s in c]) for c in cnf]
    for x in names:
        gamma += [disj([x, prime[x]]), disj([x, qs[x]]), disj([prime[x], qs[x]])]
    hyps = names + [prime[x] for x in names]
    man = Manifestation.term([(qs[x], True) for x in names])
    p = make_instance(_realize(gamma, target), target, hyps, man)
    return Generated(p, {
        "relation": "solvable iff the CNF is satisfiable",
        "expected_solvable": cnf_satisfiable(cnf),
    })


def _negated_primed(terms: Sequence[Clause], prime: dict[str, str]) -> list[list[str]]:
    """Clauses of the negation of a DNF, negative literals renamed to primes."""
    return [[prime[v] if s else v for v, s in t] for t in terms]


def gen_qsat2(s: Sigma2, target) -> Generated:
    if not s.terms:
        raise GeneratorError("qsat2 needs at least one term")
    _check_clauses(s.terms)
    allowed = set(s.exists) | set(s.forall)
    if {v for t in s.terms for v, _ in t} - allowed:
        raise GeneratorError("term variable is not quantified")
    fresh = Namer(allowed)
    prime = {v: fresh(v + "p") for v in list(s.exists) + list(s.forall)}
    q = fresh("q")
    ts = {x: fresh("t" + x) for x in s.exists}
    fs = {x: fresh("f" + x) for x in s.exists}
    gamma: list[Formula] = []
    for c in _negated_primed(s.terms, prime):
        gamma.append(disj(c + [q]))
    for v in list(s.exists) + list(s.forall):
        gamma.append(disj([v, prime[v]]))
    for x in s.exists:
        gamma += [disj([fs[x], x]), disj([ts[x], prime[x]]), disj([fs[x], ts[x]])]
    pieces = [
        Apply(lib.OR_AND, (Var(q), Var(v), Var(prime[v])))
        for v in list(s.exists) + list(s.forall)
    ]
    psi = balanced(lib.OR, pieces) if pieces else Var(q)
    psi, = _realize([psi], target)
    hyps = [ts[x] for x in s.exists] + [fs[x] for x in s.exists]
    p = make_instance(_realize(gamma, target), target, hyps, Manifestation.of_formula(psi))
    return Generated(p, {
        "relation": "solvable iff the quantified sentence is true",
        "expected_solvable": sigma2_true(s),
    })


def gen_linear_system(eqs: Sequence[Equation], target) -> Generated:
    names = sorted({v for vs, _ in eqs for v in vs})
    if not eqs:
        raise GeneratorError("linear_system needs at least one equation")
    fresh = Namer(names)
    q = fresh("q")
    top = Apply(lib.TOP, ())
    gamma = []
    for vs, c in eqs:
        leaves: list[Formula] = [Var(v) for v in vs]
        if c % 2 == 0:
            leaves.append(top)
        # value at the all-ones point is the leaf-count parity
        if len(leaves) % 2 == 0:
            leaves.append(Var(q))
        gamma.append(xor3_tree(leaves))
    if not any(q in _leaf_names(f) for f in gamma):
        gamma.append(xor3_tree([Var(q), Var(q), top]))
    funs = list(target) + ([lib.TOP] if lib.TOP not in target else [])
    gamma = _realize(gamma, funs)
    p = make_instance(gamma, funs, [], Manifestation.literal(q))
    if lib.TOP not in target:
        p = eliminate_true_constant(p)
    return Generated(p, {
        "relation": "solvable iff the system has no solution",
        "expected_solvable": not linear_system_solvable(eqs),
    })


def _leaf_names(f: Formula) -> set[str]:
    from .formula import formula_vars

    return set(formula_vars(f))


def gen_pos2sat_count(cnf: Sequence[Clause], target) -> Generated:
    _check_clauses(cnf, 2, positive=True)
    names = _vars_of_clauses(cnf)
    fresh = Namer(names)
    q = fresh("q")
    gamma = [disj([a for a, _ in c] + [q]) for c in cnf]
    p = make_instance(_realize(gamma, target), target, names, Manifestation.literal(q))
    n = len(names)
    return Generated(p, {
        "relation": "model count of the 2-CNF = 2^n - full explanation count",
        "n": n,
        "model_count": cnf_model_count(cnf, names),
    })


def gen_pi1_count(s: Pi1, target) -> Generated:
    if not s.terms:
        raise GeneratorError("pi1_count needs at least one term")
    _check_clauses(s.terms)
    fresh = Namer(set(s.free) | set(s.forall))
    prime = {x: fresh(x + "p") for x in s.free}
    r = {x: fresh("r" + x) for x in s.free}
    t = fresh("t")
    q = fresh("q")

    def clause(lits: Sequence[Lit]) -> Formula:
        return balanced(lib.OR, [Var(v) if sgn else Apply(lib.NOT, (Var(v),)) for v, sgn in lits])

    gamma = []
    for x in s.free:
        gamma += [
            clause([(x, False), (r[x], True)]),
            clause([(prime[x], False), (r[x], True)]),
            clause([(x, False), (prime[x], False)]),
        ]
    for term in s.terms:
        gamma.append(clause([(v, not sgn) for v, sgn in term] + [(t, True)]))
    gamma.append(clause([(r[x], False) for x in s.free] + [(t, False), (q, True)]))
    hyps = list(s.free) + [prime[x] for x in s.free]
    p = make_instance(_realize(gamma, target), target, hyps, Manifestation.literal(q))
    return Generated(p, {
        "relation": "model count of the universal sentence = full explanation count",
        "model_count": pi1_model_count(s),
    })


def gen_unsat_3cnf_pos(cnf: Sequence[Clause], target) -> Generated:
    _check_clauses(cnf)
    names = _vars_of_clauses(cnf)
    fresh = Namer(names)
    q = fresh("q")
    falsum = Var(q)  # the 0-constant, already renamed to q

    def neg(l: Lit) -> Formula:
        v, s = l
        return Apply(lib.IMP, (Var(v), falsum)) if s else Var(v)

    def clause(c: Sequence[Lit]) -> Formula:
        if len(c) == 1:
            v, s = c[0]
            return Var(v) if s else Apply(lib.IMP, (Var(v), falsum))
        return Apply(lib.IMP, (neg(c[0]), clause(c[1:])))

    gamma = [clause(c) for c in cnf]
    if not any(q in _leaf_names(f) for f in gamma):
        gamma.append(Apply(lib.IMP, (Var(q), Var(q))))
    p = make_instance(_realize(gamma, target), target, [], Manifestation.literal(q), Mode.POSITIVE)
    return Generated(p, {
        "relation": "solvable iff the CNF is unsatisfiable",
        "expected_solvable": not cnf_satisfiable(cnf),
    })


def gen_taut_3dnf_pos(dnf: Sequence[Clause], target) -> Generated:
    if not dnf:
        raise GeneratorError("taut_3dnf_pos needs at least one term")
    _check_clauses(dnf)
    names = _vars_of_clauses(dnf)
    fresh = Namer(names)
    prime = {x: fresh(x + "p") for x in names}
    q = fresh("q")
    gamma = [disj(c + [q]) for c in _negated_primed(dnf, prime)]
    gamma += [disj([x, prime[x]]) for x in names]
    pieces = [Apply(lib.OR_AND, (Var(q), Var(x), Var(prime[x]))) for x in names]
    psi, = _realize([balanced(lib.OR, pieces)], target)
    p = make_instance(
        _realize(gamma, target), target, [], Manifestation.of_formula(psi), Mode.POSITIVE
    )
    return Generated(p, {
        "relation": "solvable iff the DNF is a tautology",
        "expected_solvable": dnf_tautology(dnf),
    })


# -- random instances ------------------------------------------------------------------------------

PROFILES: dict[str, list[tuple[BoolFun, ...]]] = {
    "E": [(lib.AND,), (lib.AND, lib.TOP), (lib.AND, lib.BOT), (lib.AND, lib.TOP, lib.BOT)],
    "N": [(lib.NOT,), (lib.NOT, lib.TOP), (lib.NOT, lib.BOT, lib.TOP), (lib.ID, lib.NOT)],
    "V": [(lib.OR,), (lib.OR, lib.TOP), (lib.OR, lib.BOT), (lib.OR, lib.TOP, lib.BOT)],
    "affine": [
        (lib.XOR,), (lib.XNOR,), (lib.XOR3,), (lib.XNOR3,), (lib.XOR, lib.TOP),
        (lib.XOR, lib.NOT), (lib.XNOR3, lib.NOT),
    ],
    "monotone": [
        (lib.OR, lib.AND), (lib.MAJ3,), (lib.OR_AND,), (lib.AND_OR,),
        (lib.OR, lib.AND, lib.TOP), (lib.OR, lib.AND, lib.BOT), (lib.OR_AND, lib.TOP),
        (lib.AND_OR, lib.BOT), (lib.OR, lib.AND, lib.TOP, lib.BOT),
    ],
    "R1": [
        (lib.IMP,), (lib.OR, lib.XNOR), (lib.OR_AND_NOT,), (lib.MAJ_N,),
        (lib.dual_threshold_h(2), lib.IMP), (lib.OR, lib.AND_XNOR),
    ],
    "BF": [
        (lib.AND, lib.NOT), (lib.NAND,), (lib.NIMP,), (lib.MAJ_NN,), (lib.AND, lib.XOR),
        (lib.AND_OR_NOT,), (lib.OR, lib.NOT, lib.TOP),
    ],
}
PROFILES["mixed"] = [b for key in ("E", "N", "V", "affine", "monotone", "R1", "BF") for b in PROFILES[key]]

ALL_CLASSES = ("PQ", "NQ", "PC", "NC", "C", "PT", "NT", "T", "F")


@dataclass(frozen=True)
class RandomProfile:
    region: str = "mixed"
    max_vars: int = 6
    max_hyps: int = 3
    max_formulas: int = 4
    max_depth: int = 3
    classes: tuple[str, ...] = ALL_CLASSES
    modes: tuple[str, ...] = ("symmetric", "positive")

    def __post_init__(self):
        if self.region not in PROFILES:
            raise GeneratorError(f"unknown random profile {self.region!r}")


def random_formula(rng: random.Random, funs: Sequence[BoolFun], names: Sequence[str], depth: int) -> Formula:
    consts = [f for f in funs if f.arity == 0]
    ops = [f for f in funs if f.arity > 0]
    if depth <= 0 or not ops or rng.random() < 0.15:
        if consts and rng.random() < 0.1:
            return Apply(rng.choice(consts), ())
        return Var(rng.choice(names))
    g = rng.choice(ops)
    return Apply(g, [random_formula(rng, funs, names, depth - 1) for _ in range(g.arity)])


def _random_lits(rng: random.Random, names: Sequence[str], k: int, sign: bool | None) -> list[Lit]:
    chosen = rng.sample(list(names), min(k, len(names)))
    return [(v, rng.random() < 0.5 if sign is None else sign) for v in sorted(chosen)]


def _random_manifestation(rng, cls, funs, names) -> Manifestation | None:
    if cls == "F":
        return Manifestation.of_formula(random_formula(rng, funs, names, 2))
    kind = {"Q": "literal", "C": "clause", "T": "term"}[cls[-1]]
    k = 1 if kind == "literal" else rng.randint(1, 3)
    if len(cls) == 2:
        lits = _random_lits(rng, names, k, cls[0] == "P")
    else:
        if len(names) < 2:
            return None
        lits = _random_lits(rng, names, max(2, k), None)
        signs = {s for _, s in lits}
        if len(signs) == 1:
            v, s = lits[0]
            lits[0] = (v, not s)
    m = Manifestation(kind, tuple(lits))
    return m if m.class_tag == cls else None


def gen_random(seed: int, profile: RandomProfile | str = "mixed") -> Instance:
    if isinstance(profile, str):
        profile = RandomProfile(profile)
    rng = random.Random(f"abdkit:{seed}:{profile}")
    while True:
        funs = rng.choice(PROFILES[profile.region])
        n = rng.randint(min(3, profile.max_vars), profile.max_vars)
        names = [f"x{i + 1}" for i in range(n)]
        gamma = [
            random_formula(rng, funs, names, rng.randint(1, profile.max_depth))
            for _ in range(rng.randint(1, profile.max_formulas))
        ]
        occurring = sorted({v for f in gamma for v in _leaf_names(f)})
        if len(occurring) < 2:
            continue
        # hypothesis-free instances are rare on purpose: they exercise little
        low = 0 if rng.random() < 0.1 else 1
        k = rng.randint(low, min(profile.max_hyps, len(occurring) - 1))
        hyps = sorted(rng.sample(occurring, k))
        rest = [v for v in occurring if v not in hyps]
        cls = rng.choice(profile.classes)
        man = _random_manifestation(rng, cls, funs, rest)
        if man is None or not man.vars() <= set(rest):
            continue
        mode = Mode(rng.choice(profile.modes))
        return make_instance(gamma, funs, hyps, man, mode)


# -- dispatch --------------------------------------------------------------------------------------

def generate(spec: GenSpec) -> Generated:
    if spec.kind == "random":
        payload = spec.payload
        if isinstance(payload, dict):
            seed = payload.get("seed", 0)
            prof = payload.get("profile", "mixed")
        else:
            seed, prof = payload, "mixed"
        p = gen_random(int(seed), prof)
        return Generated(p, {"relation": "none", "seed": seed, "profile": str(prof)})
    target = _targets(spec)
    builder = {
        "two_in_three": gen_two_in_three,
        "three_sat_term": gen_three_sat_term,
        "qsat2": gen_qsat2,
        "linear_system": gen_linear_system,
        "pos2sat_count": gen_pos2sat_count,
        "pi1_count": gen_pi1_count,
        "unsat_3cnf_pos": gen_unsat_3cnf_pos,
        "taut_3dnf_pos": gen_taut_3dnf_pos,
    }[spec.kind]
    return builder(spec.payload, tuple(target))


# -- payload text format ------------------------------------------------------------------------------

def _parse_lits(tokens: Sequence[str]) -> Clause:
    out = []
    for tok in tokens:
        neg = tok.startswith("-")
        name = tok[1:] if neg else tok
        if not name:
            raise GeneratorError(f"bad literal {tok!r}")
        out.append((name, not neg))
    return tuple(out)


def parse_genspec(text: str) -> GenSpec:
    """Line format: ``kind K``, ``target f ...`` or ``fun name arity bits``,
    ``c``/``t`` literal lines (``-`` negates), ``eq x y = 1``,
    ``exists``/``forall`` variable lines, ``seed N``, ``profile P``."""
    kind = None
    funs: dict[str, BoolFun] = {}
    target: list[BoolFun] = []
    clauses: list[Clause] = []
    terms: list[Clause] = []
    eqs: list[Equation] = []
    exists: list[str] = []
    forall: list[str] = []
    seed = 0
    profile = "mixed"
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        try:
            if head == "kind":
                kind = rest[0]
            elif head == "target":
                for name in rest:
                    target.append(funs[name] if name in funs else lib.lookup(name))
            elif head == "fun":
                name, arity, bits = rest
                f = parse_function(name, int(arity), bits, funs)
                funs[name] = f
                target.append(f)
            elif head == "c":
                clauses.append(_parse_lits(rest))
            elif head == "t":
                terms.append(_parse_lits(rest))
            elif head == "eq":
                if len(rest) < 2 or rest[-2] != "=" or rest[-1] not in ("0", "1"):
                    raise GeneratorError("expected: eq <vars> = 0|1")
                eqs.append((tuple(rest[:-2]), int(rest[-1])))
            elif head == "exists":
                exists += rest
            elif head == "forall":
                forall += rest
            elif head == "seed":
                seed = int(rest[0])
            elif head == "profile":
                profile = rest[0]
            else:
                raise GeneratorError(f"unknown directive {head!r}")
        except (GeneratorError, FormulaError, KeyError, ValueError, IndexError) as exc:
            raise GeneratorError(f"line {no}: {exc}") from None
    if kind is None:
        raise GeneratorError("missing kind directive")
    if kind == "two_in_three":
        payload: Any = []
        for c in clauses:
            if not all(s for _, s in c):
                raise GeneratorError("two_in_three clauses must be positive")
            payload.append(tuple(v for v, _ in c))
    elif kind in ("three_sat_term", "pos2sat_count", "unsat_3cnf_pos"):
        payload = clauses
    elif kind == "taut_3dnf_pos":
        payload = terms
    elif kind == "qsat2":
        payload = Sigma2(tuple(exists), tuple(forall), tuple(terms))
    elif kind == "pi1_count":
        payload = Pi1(tuple(exists), tuple(forall), tuple(terms))
    elif kind == "linear_system":
        payload = eqs
    elif kind == "random":
        payload = {"seed": seed, "profile": profile}
    else:
        raise GeneratorError(f"unknown generator kind {kind!r}")
    return GenSpec(kind, payload, tuple(target))
