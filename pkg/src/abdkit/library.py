"""Commonly used connectives as :class:`BoolFun` values."""

from __future__ import annotations

import itertools
from typing import Callable

from .formula import BoolFun


def from_callable(name: str, arity: int, fn: Callable[..., object]) -> BoolFun:
    table = [
        1 if fn(*bits) else 0 for bits in itertools.product((0, 1), repeat=arity)
    ]
    return BoolFun(name, arity, table)


def dual(f: BoolFun, name: str | None = None) -> BoolFun:
    """``not f(not a1, ..., not an)``."""
    mask = (1 << f.arity) - 1
    table = [1 - f.table[mask ^ i] for i in range(1 << f.arity)]
    return BoolFun(name or f"dual_{f.name}", f.arity, table)


def threshold_h(n: int) -> BoolFun:
    """The (n+1)-ary function that is 1 iff at least n arguments are 1."""
    return from_callable(f"h{n}", n + 1, lambda *xs: sum(xs) >= n)


def dual_threshold_h(n: int) -> BoolFun:
    return dual(threshold_h(n), f"hd{n}")


TOP = BoolFun("top", 0, (1,))
BOT = BoolFun("bot", 0, (0,))
ID = from_callable("id", 1, lambda x: x)
NOT = from_callable("not", 1, lambda x: not x)
AND = from_callable("and", 2, lambda x, y: x and y)
OR = from_callable("or", 2, lambda x, y: x or y)
NAND = from_callable("nand", 2, lambda x, y: not (x and y))
NOR = from_callable("nor", 2, lambda x, y: not (x or y))
XOR = from_callable("xor", 2, lambda x, y: x ^ y)
XNOR = from_callable("xnor", 2, lambda x, y: not (x ^ y))
IMP = from_callable("imp", 2, lambda x, y: (not x) or y)
NIMP = from_callable("nimp", 2, lambda x, y: x and not y)
XOR3 = from_callable("xor3", 3, lambda x, y, z: x ^ y ^ z)
XNOR3 = from_callable("xnor3", 3, lambda x, y, z: not (x ^ y ^ z))
MAJ3 = from_callable("maj3", 3, lambda x, y, z: x + y + z >= 2)
OR_AND = from_callable("or_and", 3, lambda x, y, z: x or (y and z))
AND_OR = from_callable("and_or", 3, lambda x, y, z: x and (y or z))
OR_AND_NOT = from_callable("or_and_not", 3, lambda x, y, z: x or (y and not z))
AND_OR_NOT = from_callable("and_or_not", 3, lambda x, y, z: x and (y or not z))
AND_XNOR = from_callable("and_xnor", 3, lambda x, y, z: x and not (y ^ z))
# (x & ~y) | (x & ~z) | (~y & ~z) and (x & y) | (x & ~z) | (y & ~z)
MAJ_NN = from_callable("maj_nn", 3, lambda x, y, z: x + (1 - y) + (1 - z) >= 2)
MAJ_N = from_callable("maj_n", 3, lambda x, y, z: x + y + (1 - z) >= 2)

STANDARD = {
    f.name: f
    for f in (
        TOP, BOT, ID, NOT, AND, OR, NAND, NOR, XOR, XNOR, IMP, NIMP, XOR3,
        XNOR3, MAJ3, OR_AND, AND_OR, OR_AND_NOT, AND_OR_NOT, AND_XNOR,
        MAJ_NN, MAJ_N,
    )
}


def lookup(name: str) -> BoolFun:
    """Standard connective by name; ``hN`` / ``hdN`` build threshold functions."""
    if name in STANDARD:
        return STANDARD[name]
    if name.startswith("hd") and name[2:].isdigit():
        return dual_threshold_h(int(name[2:]))
    if name.startswith("h") and name[1:].isdigit():
        return threshold_h(int(name[1:]))
    raise KeyError(name)
