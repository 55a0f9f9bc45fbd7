import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abdkit import library as lib
from abdkit import oracle
from abdkit.generators import GenSpec, RandomProfile, gen_random, generate
from abdkit.model import NEGATIVE_CLASSES, Explanation, Manifestation, verify_explanation
from abdkit.solvers import (
    AlgorithmMismatch,
    auto_algorithm,
    enumerate_explanations,
    solve,
    solve_affine,
    solve_generic,
    solve_monotone,
    solve_positive,
    solve_syntactic,
)
from support import REGIONS, inst

Q = Manifestation.literal("q")


def lits(*names):
    return Explanation([(n.lstrip("!"), not n.startswith("!")) for n in names])


def test_solve_examples():
    r = solve(inst(["(or x q)"], [lib.OR], ["x"], Q))
    assert r.has_explanation and r.witness == lits("!x") and r.algorithm == "syntactic"
    r = solve(inst(["(and x q)"], [lib.AND], ["x"], Q))
    assert r.has_explanation and r.witness == lits()
    assert not solve(inst(["(or x q)"], [lib.OR], ["x"], Q, "positive"))


def test_syntactic_examples():
    r = solve_syntactic(inst(["(not x)", "q"], [lib.NOT], ["x"], Q))
    assert r.has_explanation and r.witness == lits()
    assert not solve_syntactic(inst(["(or q x)", "(or x x)"], [lib.OR], ["x"], Q))
    assert solve_syntactic(inst(["(or q x)"], [lib.OR], ["x"], Q)).witness == lits("!x")


def test_affine_examples():
    xor = [lib.XOR]
    r = solve_affine(inst(["(xor x y)", "(xor y q)"], xor, ["x"], Q))
    assert r.witness == lits("x")
    assert solve_affine(inst(["(xor x q)"], xor, ["x"], Q)).witness == lits("!x")
    assert not solve_affine(inst(["(xor3 x y q)"], [lib.XOR3], ["x"], Q))


def test_monotone_examples():
    r = solve_monotone(inst(["(or x q)", "(or y q)"], [lib.OR], ["x", "y"], Q))
    assert r.has_explanation and ("x", False) in r.witness
    assert solve_monotone(inst(["(and x q)"], [lib.AND], ["x"], Q))
    assert solve_monotone(inst(["(or x y)", "(or q q)"], [lib.OR], ["x", "y"], Q))


def test_generic_examples():
    g = generate(GenSpec("two_in_three", [("x1", "x2", "x3")]))
    assert solve_generic(g.instance)
    assert solve_generic(inst(["q"], [], [], Q)).witness == lits()
    assert not solve_generic(inst(["(not q)"], [lib.NOT], [], Q))


def test_positive_examples():
    assert solve_positive(inst(["(and x q)"], [lib.AND], ["x"], Q, "positive"))
    assert not solve_positive(inst(["(or x q)"], [lib.OR], ["x"], Q, "positive"))
    assert not solve_positive(inst(["(xor x q)"], [lib.XOR], ["x"], Q, "positive"))


def test_forced_algorithm_outside_region():
    p = inst(["(or x q)"], [lib.OR], ["x"], Q)
    with pytest.raises(AlgorithmMismatch):
        solve(p, "affine")
    with pytest.raises(AlgorithmMismatch):
        solve(inst(["(or x (not q))"], [lib.OR, lib.NOT], ["x"], Q), "monotone")
    with pytest.raises(AlgorithmMismatch):
        solve(p.with_mode("positive"), "syntactic")


def test_enumeration_examples():
    assert list(enumerate_explanations(inst(["(or x q)"], [lib.OR], ["x"], Q))) == [lits("!x")]
    assert list(enumerate_explanations(inst(["(and x q)"], [lib.AND], ["x"], Q))) == [
        lits(),
        lits("x"),
    ]
    assert list(enumerate_explanations(inst(["(not q)"], [lib.NOT], [], Q))) == []


def test_oracle_examples():
    p = inst(["(or x q)"], [lib.OR], ["x"], Q)
    assert oracle.brute_force_explanations(p, True) == {lits("!x")}
    p = inst(["(xor x q)"], [lib.XOR], ["x"], Q)
    assert oracle.brute_force_explanations(p, True) == {lits("!x")}
    assert oracle.brute_force_explanations(inst(["q"], [], [], Q)) == {lits()}


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**7), st.sampled_from(REGIONS))
def test_auto_matches_oracle_and_witness_verifies(seed, region):
    p = gen_random(seed, RandomProfile(region, max_vars=8, max_hyps=4))
    r = solve(p)
    assert bool(r) == oracle.has_explanation(p)
    assert (r.witness is not None) == r.has_explanation
    if r.witness is not None:
        assert verify_explanation(p, r.witness) and oracle.tt_verify(p, r.witness)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**7), st.sampled_from(sorted(NEGATIVE_CLASSES)))
def test_monotone_negative_manifestations_are_trivial(seed, cls):
    p = gen_random(seed, RandomProfile("monotone", classes=(cls,), modes=("symmetric",)))
    assert auto_algorithm(p) == "trivial"
    assert not solve(p) and not oracle.has_explanation(p)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**7), st.sampled_from(["monotone", "R1"]))
def test_all_hypotheses_decide_positive_mode(seed, region):
    p = gen_random(seed, RandomProfile(region, modes=("positive",)))
    whole = Explanation((h, True) for h in p.hypotheses)
    assert bool(solve_positive(p)) == verify_explanation(p, whole)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**7), st.sampled_from(REGIONS))
def test_enumeration_is_sorted_and_complete(seed, region):
    p = gen_random(seed, RandomProfile(region, max_vars=8, max_hyps=4))
    es = list(enumerate_explanations(p))
    keys = [e.sort_key(p.hyp_order) for e in es]
    assert keys == sorted(set(keys))
    assert set(es) == oracle.brute_force_explanations(p)


def test_enumeration_is_lazy_for_descent_regions():
    # thirty hypotheses with a disjunctive knowledge base: far beyond the
    # exhaustive path, served by the per-literal descent
    names = [f"x{i:02d}" for i in range(30)]
    tree = "q"
    for n in names:
        tree = f"(or {n} {tree})"
    p = inst([tree], [lib.OR], names, Q)
    first = next(iter(enumerate_explanations(p)))
    assert first == Explanation((n, False) for n in names)
