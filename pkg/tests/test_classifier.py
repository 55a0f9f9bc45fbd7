import json

import pytest

from abdkit.classifier import Verdict, classify_counting, classify_decision, verdict_rank
from abdkit.clones import C, all_clones
from abdkit.model import MANIFESTATION_CLASSES, Mode

CLONES = all_clones(max_degree=3)


def test_decision_examples():
    assert str(classify_decision(C("BF"), "symmetric", "PQ")) == "Sigma2P-complete"
    assert str(classify_decision(C("V2"), "symmetric", "PT")) == "NP-complete"
    assert str(classify_decision(C("S02"), "positive", "PQ")) == "coNP-complete"
    assert classify_decision(C("D2"), "positive", "PQ") == Verdict("L")
    v = classify_decision(C("L2"), "symmetric", "PQ")
    assert (v.membership, v.hardness, v.complete) == ("P", "ParityL", False)
    assert str(v) == "in P, ParityL-hard"


def test_counting_examples():
    assert str(classify_counting(C("BF"), "symmetric", "full")) == "#coNP-complete"
    assert str(classify_counting(C("V2"), "symmetric", "full")) == "#P-complete"
    assert classify_counting(C("D2"), "positive", "positive-all") == Verdict("FP")


def test_counting_guards():
    with pytest.raises(ValueError):
        classify_counting(C("V2"), "symmetric", "full", cls="PT")
    with pytest.raises(ValueError):
        classify_counting(C("V2"), "symmetric", "positive-all")
    with pytest.raises(ValueError):
        classify_counting(C("V2"), "positive", "sometimes")
    with pytest.raises(ValueError):
        classify_decision(C("V2"), "symmetric", "XX")


def test_totality_and_completeness_convention():
    for c in CLONES:
        for mode in Mode:
            for cls in MANIFESTATION_CLASSES:
                v = classify_decision(c, mode, cls)
                assert not v.complete or v.membership == v.hardness
                assert verdict_rank(v) >= 0


def test_json_schema():
    v = classify_decision(C("L0"), "positive", "F")
    assert set(json.loads(v.to_json())) == {"membership", "hardness", "complete", "note"}
    assert str(v) == "in NP, ParityL-hard (open)"


def test_verdict_rejects_inconsistent_completeness():
    with pytest.raises(AssertionError):
        Verdict("NP", "P", True)
