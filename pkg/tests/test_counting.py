import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abdkit import library as lib
from abdkit import oracle
from abdkit.counting import count, count_brute_force, count_full_explanations, count_positive_explanations
from abdkit.generators import GenSpec, Pi1, RandomProfile, gen_random, generate
from abdkit.model import Explanation, Manifestation, eliminate_true_constant, verify_explanation
from support import inst

Q = Manifestation.literal("q")


def test_full_count_examples():
    assert count_full_explanations(inst(["(xor x q)"], [lib.XOR], ["x"], Q)).value == 1
    r = count_full_explanations(inst(["(not x)", "q"], [lib.NOT], ["x"], Q))
    assert r.value == 1 and r.method == "closed-form"
    assert count_full_explanations(inst(["(or x1 (or x2 q))"], [lib.OR], ["x1", "x2"], Q)).value == 1


def test_positive_count_examples():
    p = inst(["(and x q)"], [lib.AND], ["x"], Q, "positive")
    assert count_positive_explanations(p).value == 2
    assert count_positive_explanations(p, minimal_only=True).value == 1
    p = inst(["(or x q)"], [lib.OR], ["x"], Q, "positive")
    assert count_positive_explanations(p).value == 0 == count_positive_explanations(p, True).value
    p = inst(["q"], [], [], Q, "positive")
    assert count(p).value == 1 == count(p, minimal_only=True).value


def test_brute_force_examples():
    assert count_brute_force(inst(["(xor x q)"], [lib.XOR], ["x"], Q)).value == 1
    g = generate(GenSpec("two_in_three", [("x1", "x2", "x3")]))
    n = count_brute_force(g.instance).value
    assert n == len(oracle.brute_force_explanations(g.instance, True)) and n > 0
    assert count_brute_force(inst(["(not q)"], [lib.NOT], [], Q)).value == 0
    with pytest.raises(ValueError):
        count_brute_force(inst(["q"], [], [], Q), "sometimes")


def test_mode_guards():
    with pytest.raises(ValueError):
        count_full_explanations(inst(["q"], [], [], Q, "positive"))
    with pytest.raises(ValueError):
        count_positive_explanations(inst(["q"], [], [], Q))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**7), st.sampled_from(["E", "N", "affine"]))
def test_closed_forms_match_brute_force(seed, region):
    p = gen_random(seed, RandomProfile(region, classes=("PQ",), modes=("symmetric",)))
    r = count(p)
    assert r.method == "closed-form"
    assert r.value == count_brute_force(p).value <= 1 << len(p.hypotheses)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**7))
def test_monotone_positive_subset_law(seed):
    p = gen_random(seed, RandomProfile("monotone", classes=("PQ",), modes=("positive",)))
    hyps = p.hyp_order
    whole = verify_explanation(p, Explanation((h, True) for h in hyps))
    subsets = [
        verify_explanation(p, Explanation((h, True) for h in combo))
        for k in range(len(hyps) + 1)
        for combo in itertools.combinations(hyps, k)
    ]
    assert whole == all(subsets)
    assert count(p).value in (0, 1 << len(hyps))
    assert count(p, minimal_only=True).value in (0, 1)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**7))
def test_true_constant_elimination_preserves_counts(seed):
    p = gen_random(seed, RandomProfile("mixed", classes=("PQ",), modes=("symmetric",)))
    assert count(p).value == count(eliminate_true_constant(p)).value


def test_universal_sentence_parsimony():
    rng = random.Random(9)
    for _ in range(150):
        xs = tuple(f"x{i}" for i in range(1, rng.randint(1, 3) + 1))
        ys = tuple(f"y{i}" for i in range(1, rng.randint(0, 2) + 1))
        pool = xs + ys
        terms = tuple(
            tuple((v, rng.random() < 0.5) for v in rng.sample(pool, rng.randint(1, min(3, len(pool)))))
            for _ in range(rng.randint(1, 3))
        )
        g = generate(GenSpec("pi1_count", Pi1(xs, ys, terms)))
        assert count(g.instance).value == g.metadata["model_count"]
