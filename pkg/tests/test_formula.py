import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abdkit import library as lib
from abdkit.formula import (
    MAX_ARITY,
    Apply,
    BoolFun,
    FormulaError,
    KnowledgeBase,
    UnboundVariable,
    Var,
    compile_conjunction,
    evaluate,
    formula_vars,
    parse_function,
    parse_sexpr,
    substitute,
    to_sexpr,
    vars_of,
)
from strategies import NAMES, POOL, formulas

H = parse_function("h", 2, "0010")
FUNS = {f.name: f for f in POOL} | {"h": H}


def P(text):
    return parse_sexpr(text, FUNS)


def test_parse_function_and():
    f = parse_function("and", 2, "0001")
    assert [f(a, b) for a, b in itertools.product((0, 1), repeat=2)] == [0, 0, 0, 1]


def test_parse_function_h_is_x_and_not_y():
    assert [H(1, 0), H(1, 1), H(0, 0), H(0, 1)] == [1, 0, 0, 0]


def test_parse_function_constant():
    top = parse_function("top", 0, "1")
    assert top.arity == 0 and top() == 1


@pytest.mark.parametrize(
    "arity,bits",
    [(2, "001"), (1, "0a"), (0, ""), (MAX_ARITY + 1, "0" * (1 << (MAX_ARITY + 1)))],
)
def test_parse_function_rejects(arity, bits):
    with pytest.raises(FormulaError):
        parse_function("g", arity, bits)


def test_parse_function_duplicate_name():
    with pytest.raises(FormulaError):
        parse_function("and", 2, "0001", {"and": lib.AND})


def test_apply_checks_arity():
    with pytest.raises(FormulaError):
        Apply(lib.AND, (Var("x"),))


def test_h_represents_and():
    f = P("(h x (h x y))")
    for x, y in itertools.product((0, 1), repeat=2):
        assert evaluate(f, {"x": x, "y": y}) == (x & y)


def test_evaluate_projection_and_unbound():
    assert evaluate(Var("x"), {"x": 0}) == 0
    with pytest.raises(UnboundVariable):
        evaluate(P("(and x y)"), {"x": 1})


def test_substitute_examples():
    bot = Apply(lib.BOT, ())
    assert substitute(P("(or x q)"), Var("q"), bot) == Apply(lib.OR, (Var("x"), bot))
    assert substitute(P("(or q (or q x))"), Var("q"), Var("t")) == P("(or t (or t x))")
    assert substitute(Var("x"), Var("y"), Var("z")) == Var("x")


def test_vars_examples():
    assert vars_of([P("(and x y)")]) == {"x", "y"}
    assert vars_of([P("(top)")]) == frozenset()
    assert vars_of([P("(or x q)"), P("(not x)")]) == {"x", "q"}


def test_sexpr_errors():
    for bad in ["", "(and x", "(and x y z)", "(nope x)", ")", "(and x y) z"]:
        with pytest.raises(FormulaError):
            P(bad)


def test_knowledge_base_function_checks():
    with pytest.raises(FormulaError):
        KnowledgeBase([P("(and x y)")], [lib.OR])
    with pytest.raises(FormulaError):
        KnowledgeBase([], [lib.AND, BoolFun("and", 2, (0, 1, 1, 1))])
    kb = KnowledgeBase([P("(and x y)"), P("(and x y)")], [lib.AND])
    assert len(kb) == 1 and kb.vars() == {"x", "y"}


@settings(max_examples=150, deadline=None)
@given(formulas(), st.sampled_from(NAMES), st.sampled_from([lib.TOP, lib.BOT]))
def test_substitution_law(f, v, c):
    g = substitute(f, Var(v), Apply(c, ()))
    for bits in itertools.product((0, 1), repeat=len(NAMES)):
        a = dict(zip(NAMES, bits))
        assert evaluate(g, a) == evaluate(f, {**a, v: c.table[0]})


@settings(max_examples=200, deadline=None)
@given(formulas())
def test_sexpr_round_trip(f):
    text = to_sexpr(f)
    assert parse_sexpr(text, FUNS) == f
    assert to_sexpr(parse_sexpr(text, FUNS)) == text


@settings(max_examples=100, deadline=None)
@given(st.lists(formulas(max_leaves=8), min_size=0, max_size=4))
def test_compiled_conjunction_matches_evaluate(fs):
    check = compile_conjunction(fs)
    for bits in itertools.product((0, 1), repeat=len(NAMES)):
        a = dict(zip(NAMES, bits))
        assert check(a) == all(evaluate(f, a) for f in fs)


@settings(max_examples=50, deadline=None)
@given(formulas())
def test_formula_vars_are_leaves(f):
    assert formula_vars(f) <= set(NAMES)
