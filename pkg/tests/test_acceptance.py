"""Acceptance criteria 1-10, one test each, reporting a pass/fail line."""

from __future__ import annotations

import itertools
import random
import time

import pytest

from abdkit import library as lib
from abdkit import oracle
from abdkit.classifier import classify_counting, classify_decision, verdict_rank
from abdkit.clones import C, all_clones, base_of, clone_id, clone_leq
from abdkit.counting import count, count_brute_force
from abdkit.generators import GenSpec, Sigma2, generate
from abdkit.model import (
    MANIFESTATION_CLASSES,
    Explanation,
    InstanceError,
    Mode,
    eliminate_false_constant,
    eliminate_true_constant,
    verify_explanation,
)
from abdkit.solvers import (
    enumerate_explanations,
    instance_clone,
    solve,
    solve_affine,
    solve_generic,
    solve_monotone,
    solve_syntactic,
)
from support import REGIONS, random_instances

pytestmark = pytest.mark.acceptance


def test_criterion_1_clone_fidelity(report):
    t0 = time.perf_counter()
    clones = all_clones(max_degree=3)
    wrong = [str(c) for c in clones if clone_id(base_of(c)) != c]
    dt = time.perf_counter() - t0
    ok = not wrong and len(clones) >= 45 and dt < 5
    report(1, ok, f"{len(clones)} clones, {len(wrong)} mismatches, {dt:.2f}s")
    assert ok, wrong


def test_criterion_2_oracle_equivalence(report):
    t0 = time.perf_counter()
    n, bad = 0, []
    for p in random_instances(1400, start=100_000):
        r = solve(p)
        n += 1
        if bool(r) != oracle.has_explanation(p):
            bad.append(p)
        elif r.witness is not None and not oracle.tt_verify(p, r.witness):
            bad.append(p)
    dt = time.perf_counter() - t0
    ok = not bad and n >= 1000 and dt < 120
    report(2, ok, f"{n} instances, {len(bad)} disagreements, {dt:.1f}s")
    assert ok


PATHS = [
    ("affine", solve_affine, ("affine",), ("symmetric", "positive")),
    ("monotone", solve_monotone, ("monotone",), ("symmetric",)),
    ("syntactic", solve_syntactic, ("E", "N", "V"), ("symmetric",)),
]


def test_criterion_3_path_agreement(report):
    t0 = time.perf_counter()
    details, ok = [], True
    for name, fn, regions, modes in PATHS:
        bad = 0
        for p in random_instances(360, regions, start=200_000, modes=modes):
            if bool(fn(p)) != bool(solve_generic(p)):
                bad += 1
        details.append(f"{name} 360/{bad} bad")
        ok &= bad == 0
    dt = time.perf_counter() - t0
    ok &= dt < 120
    report(3, ok, ", ".join(details) + f", {dt:.1f}s")
    assert ok


def test_criterion_4_all_hypotheses_law(report):
    n, bad = 0, 0
    for p in random_instances(400, ("monotone", "R1"), start=300_000, modes=("positive",)):
        c = instance_clone(p)
        assert clone_leq(c, C("M")) or clone_leq(c, C("R1"))
        whole = verify_explanation(p, Explanation((h, True) for h in p.hypotheses))
        n += 1
        if oracle.has_explanation(p) != whole or bool(solve(p)) != whole:
            bad += 1
    ok = bad == 0 and n >= 300
    report(4, ok, f"{n} positive instances, {bad} violations")
    assert ok


def test_criterion_5_counting_equalities(report):
    stats = {}
    ok = True
    for label, regions, mode in [
        ("affine", ("affine",), "symmetric"),
        ("E/N", ("E", "N"), "symmetric"),
    ]:
        bad = closed = 0
        for p in random_instances(
            520, regions, start=400_000, classes=("PQ",), modes=(mode,)
        ):
            r = count(p)
            closed += r.method == "closed-form"
            bad += r.value != count_brute_force(p, "full").value
        stats[label] = (bad, closed)
        ok &= bad == 0 and closed == 520
    bad = closed = 0
    for p in random_instances(
        520, ("monotone",), start=500_000, classes=("PQ",), modes=("positive",)
    ):
        k = len(p.hypotheses)
        every, minimal = count(p), count(p, minimal_only=True)
        closed += every.method == minimal.method == "closed-form"
        laws = every.value in (0, 1 << k) and minimal.value in (0, 1)
        exact = (
            every.value == count_brute_force(p, "positive-all").value
            and minimal.value == count_brute_force(p, "positive-minimal").value
        )
        bad += not (laws and exact)
    stats["monotone-positive"] = (bad, closed)
    ok &= bad == 0 and closed == 520
    report(5, ok, ", ".join(f"{k} 520/{b} bad/{c} closed" for k, (b, c) in stats.items()))
    assert ok


def test_criterion_6_pos2sat_relation(report):
    rng = random.Random(6)
    bad = 0
    for _ in range(200):
        n = rng.randint(2, 8)
        xs = [f"x{i}" for i in range(1, n + 1)]
        cnf = [tuple((v, True) for v in rng.sample(xs, 2)) for _ in range(rng.randint(1, 10))]
        g = generate(GenSpec("pos2sat_count", cnf))
        got = count(g.instance).value
        bad += g.metadata["model_count"] != (1 << g.metadata["n"]) - got
    report(6, bad == 0, f"200 positive 2-CNFs, {bad} violations")
    assert bad == 0


def _solvable(p) -> bool:
    s = bool(solve(p))
    if len(p.hypotheses) <= oracle.MAX_HYPOTHESES and len(p.all_vars()) <= oracle.MAX_VARS:
        assert s == oracle.has_explanation(p)
    return s


def _random_cnf(rng, nvars, nclauses, width=3):
    xs = [f"x{i}" for i in range(1, nvars + 1)]
    return [
        tuple((v, rng.random() < 0.5) for v in rng.sample(xs, min(width, nvars)))
        for _ in range(nclauses)
    ]


def _signed_sets(names, width):
    for vs in itertools.combinations(names, width):
        for signs in itertools.product((True, False), repeat=width):
            yield tuple(zip(vs, signs))


def reduction_cases():
    """(kind, payload) pairs: exhaustive where the space is small, sampled beyond."""
    rng = random.Random(7)
    # every positive 3-clause CNF on five variables
    triples = list(itertools.combinations([f"x{i}" for i in range(1, 6)], 3))
    for k in range(1, len(triples) + 1):
        for cs in itertools.combinations(triples, k):
            yield "two_in_three", list(cs)
    for _ in range(300):
        yield "three_sat_term", _random_cnf(rng, rng.randint(1, 5), rng.randint(1, 6))
    # Sigma2 sentences: exhaustive with two quantified variables, sampled at 2+2
    for n_e, n_a in [(2, 0), (1, 1), (0, 2), (1, 0), (0, 1)]:
        xs = tuple(f"x{i}" for i in range(1, n_e + 1))
        ys = tuple(f"y{i}" for i in range(1, n_a + 1))
        pool = [t for w in (1, 2) for t in _signed_sets(xs + ys, w)]
        for k in (1, 2, 3):
            for terms in itertools.combinations(pool, k):
                yield "qsat2", Sigma2(xs, ys, terms)
    for n_e, n_a in [(2, 2), (2, 1), (1, 2)]:
        xs = tuple(f"x{i}" for i in range(1, n_e + 1))
        ys = tuple(f"y{i}" for i in range(1, n_a + 1))
        pool = [t for w in (1, 2, 3) for t in _signed_sets(xs + ys, w)]
        for _ in range(250):
            yield "qsat2", Sigma2(xs, ys, tuple(rng.sample(pool, rng.randint(1, 3))))
    # every set of full 3-clauses over three variables, as CNF and as DNF
    full = list(_signed_sets(["x1", "x2", "x3"], 3))
    for k in range(1, len(full) + 1):
        for cs in itertools.combinations(full, k):
            yield "unsat_3cnf_pos", list(cs)
            yield "taut_3dnf_pos", list(cs)
    for _ in range(200):
        cnf = _random_cnf(rng, rng.randint(1, 4), rng.randint(1, 8))
        yield "unsat_3cnf_pos", cnf
        yield "taut_3dnf_pos", cnf
    # every system of up to three equations over three variables
    eqs = [
        (vs, c)
        for w in range(0, 4)
        for vs in itertools.combinations(["x1", "x2", "x3"], w)
        for c in (0, 1)
    ]
    for k in (1, 2, 3):
        for system in itertools.combinations(eqs, k):
            yield "linear_system", list(system)


def test_criterion_7_reduction_correctness(report):
    t0 = time.perf_counter()
    seen: dict[str, list[int]] = {}
    for kind, payload in reduction_cases():
        g = generate(GenSpec(kind, payload))
        tally = seen.setdefault(kind, [0, 0])
        tally[0] += 1
        tally[1] += _solvable(g.instance) != g.metadata["expected_solvable"]
    dt = time.perf_counter() - t0
    ok = all(b == 0 for _, b in seen.values()) and len(seen) == 6 and dt < 180
    report(7, ok, ", ".join(f"{k} {n}/{b} bad" for k, (n, b) in seen.items()) + f", {dt:.1f}s")
    assert ok


# (clone, mode, class) -> (membership, complete), read off the published tables
DECISION_TABLE = [
    ("E2", "symmetric", "NQ", "L", False),
    ("L", "symmetric", "NC", "P", False),
    ("M", "symmetric", "NT", "L", False),
    ("BF", "symmetric", "NQ", "Sigma2P", True),
    ("V0", "symmetric", "PQ", "L", False),
    ("L0", "symmetric", "C", "P", False),
    ("M2", "symmetric", "PQ", "NP", True),
    ("S00^3", "symmetric", "PC", "NP", True),
    ("S02^2", "symmetric", "Q", "Sigma2P", True),
    ("V", "symmetric", "PT", "NP", True),
    ("E", "symmetric", "T", "L", False),
    ("L3", "symmetric", "PT", "P", False),
    ("D2", "symmetric", "T", "NP", True),
    ("N", "symmetric", "F", "L", False),
    ("V2", "symmetric", "F", "L", False),
    ("L1", "symmetric", "F", "P", False),
    ("M", "symmetric", "F", "Sigma2P", True),
    ("D1", "symmetric", "F", "Sigma2P", True),
    ("V2", "positive", "NQ", "L", False),
    ("L0", "positive", "NC", "P", False),
    ("L3", "positive", "NT", "NP", True),
    ("L1", "positive", "NT", "L", False),
    ("S01^2", "positive", "NT", "L", False),
    ("R1", "positive", "NQ", "L", False),
    ("L2", "positive", "PQ", "P", False),
    ("M", "positive", "PQ", "L", False),
    ("S02^2", "positive", "C", "coNP", True),
    ("D", "positive", "PQ", "Sigma2P", True),
    ("S1", "positive", "Q", "Sigma2P", True),
    ("L0", "positive", "PT", "NP", True),
    ("L1", "positive", "T", "P", False),
    ("D2", "positive", "PT", "L", False),
    ("R1", "positive", "T", "coNP", True),
    ("L", "positive", "F", "NP", False),
    ("M2", "positive", "F", "coNP", True),
    ("D1", "positive", "F", "coNP", True),
    ("BF", "positive", "F", "Sigma2P", True),
    ("E", "positive", "F", "L", False),
]

# (clone, mode, variant) -> (membership, complete), from the counting results
COUNTING_TABLE = [
    ("S02^2", "symmetric", "full", "#coNP", True),
    ("D1", "symmetric", "full", "#coNP", True),
    ("V2", "symmetric", "full", "#P", True),
    ("S10^2", "symmetric", "full", "#P", True),
    ("D2", "symmetric", "full", "#P", True),
    ("L2", "symmetric", "full", "FP", False),
    ("S12^3", "positive", "positive-all", "#coNP", True),
    ("L", "positive", "positive-minimal", "#P", False),
    ("M2", "positive", "positive-all", "FP", False),
    ("V2", "positive", "positive-minimal", "FP", False),
]


def test_criterion_8_classifier_fidelity(report):
    wrong = []
    for c, mode, cls, member, complete in DECISION_TABLE:
        v = classify_decision(C(c), mode, cls)
        if (v.membership, v.complete) != (member, complete):
            wrong.append((c, mode, cls, str(v)))
    for c, mode, variant, member, complete in COUNTING_TABLE:
        v = classify_counting(C(c), mode, variant)
        if (v.membership, v.complete) != (member, complete):
            wrong.append((c, mode, variant, str(v)))
    clones = all_clones(max_degree=3)
    pairs = [(a, b) for a in clones for b in clones if clone_leq(a, b)]
    breaks = 0
    for mode in Mode:
        for cls in MANIFESTATION_CLASSES:
            rank = {c: verdict_rank(classify_decision(c, mode, cls)) for c in clones}
            breaks += sum(rank[a] > rank[b] for a, b in pairs)
        variants = ("full",) if mode is Mode.SYMMETRIC else ("positive-all", "positive-minimal")
        for variant in variants:
            rank = {c: verdict_rank(classify_counting(c, mode, variant)) for c in clones}
            breaks += sum(rank[a] > rank[b] for a, b in pairs)
    ok = not wrong and breaks == 0
    report(
        8,
        ok,
        f"{len(DECISION_TABLE)} table entries, {len(COUNTING_TABLE)} counting entries, "
        f"{len(wrong)} wrong, {breaks} monotonicity breaks over {len(pairs)} lattice pairs",
    )
    assert ok, wrong


def _with_constant(const, want: int):
    """Symmetric random instances whose connectives include ``const``."""
    seed = 600_000 if const is lib.TOP else 700_000
    got = 0
    while got < want:
        seed += 1
        for p in random_instances(1, (REGIONS[seed % len(REGIONS)],), start=seed,
                                  modes=("symmetric",)):
            if const in p.functions:
                got += 1
                yield p


def test_criterion_9_constant_elimination(report):
    bad_top = 0
    for p in _with_constant(lib.TOP, 300):
        q = eliminate_true_constant(p)
        assert lib.TOP not in q.functions
        bad_top += count_brute_force(p, "full").value != count_brute_force(q, "full").value
    bad_bot = tried = 0
    for p in _with_constant(lib.BOT, 2000):
        try:
            q = eliminate_false_constant(p)
        except InstanceError:
            continue
        assert lib.BOT not in q.functions
        tried += 1
        bad_bot += oracle.has_explanation(p) != oracle.has_explanation(q)
        if tried == 300:
            break
    ok = bad_top == 0 and bad_bot == 0 and tried >= 300
    report(9, ok, f"top: 300/{bad_top} bad, bottom: {tried}/{bad_bot} bad")
    assert ok


def test_criterion_10_enumeration(report):
    bad = 0
    for p in random_instances(350, start=800_000):
        es = list(enumerate_explanations(p))
        keys = [e.sort_key(p.hyp_order) for e in es]
        increasing = all(a < b for a, b in zip(keys, keys[1:]))
        bad += not (increasing and set(es) == oracle.brute_force_explanations(p))
    report(10, bad == 0, f"350 instances, {bad} violations")
    assert bad == 0
