"""Bit-parallel truth tables: bit ``j`` of a table is the value under the
``j``-th assignment, first variable as the most significant digit."""

from __future__ import annotations

from typing import Sequence

from .formula import Apply, BoolFun, Formula, UnboundVariable, Var


def var_columns(names: Sequence[str]) -> tuple[dict[str, int], int]:
    n = len(names)
    size = 1 << n
    mask = (1 << size) - 1
    cols = {}
    for i, name in enumerate(names):
        b = 1 << (n - 1 - i)
        block = ((1 << b) - 1) << b  # b zeros then b ones, period 2b
        reps = size // (2 * b)
        period = 2 * b
        cols[name] = block * (((1 << (period * reps)) - 1) // ((1 << period) - 1))
    return cols, mask


def apply_table(g: BoolFun, children: Sequence[int], mask: int) -> int:
    out = 0
    a = g.arity
    for row, val in enumerate(g.table):
        if not val:
            continue
        term = mask
        for i, t in enumerate(children):
            term &= t if (row >> (a - 1 - i)) & 1 else ~t & mask
            if not term:
                break
        out |= term
    return out


def formula_table(
    f: Formula, cols: dict[str, int], mask: int, memo: dict | None = None
) -> int:
    memo = {} if memo is None else memo

    def go(node: Formula) -> int:
        if isinstance(node, Var):
            try:
                return cols[node.name]
            except KeyError:
                raise UnboundVariable(node.name) from None
        hit = memo.get(node)
        if hit is None:
            assert isinstance(node, Apply)
            hit = apply_table(node.fn, [go(c) for c in node.args], mask)
            memo[node] = hit
        return hit

    return go(f)
