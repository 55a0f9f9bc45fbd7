"""Post's lattice: truth-table properties, clone membership and inclusion,
clone identification, Table-1 bases and B-representation synthesis."""

from __future__ import annotations

import functools
import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterable

from . import library as lib
from .formula import MAX_ARITY, Apply, BoolFun, Formula, FormulaError, Var, substitute_vars

INF = math.inf


@dataclass(frozen=True)
class PropertySignature:
    reproduces0: bool
    reproduces1: bool
    monotone: bool
    self_dual: bool
    affine: bool
    sep0_level: float  # int, or INF
    sep1_level: float
    is_disjunction_form: bool
    is_conjunction_form: bool
    is_unary_form: bool
    is_projection_or_constant: bool


def _coord_bit(arity: int, i: int) -> int:
    # argument i (0 = first) is digit (arity-1-i) of the row index
    return 1 << (arity - 1 - i)


def _sep_level(f: BoolFun, c: int) -> float:
    """Largest k such that every <=k rows of f^-1(c) share a c-coordinate."""
    n = f.arity
    full = (1 << n) - 1
    rows = [i for i in range(1 << n) if f.table[i] == c]
    if not rows:
        return INF
    # coordinates where a row differs from c; a subfamily has no common
    # c-coordinate iff these sets cover every coordinate
    miss = sorted({(~r & full) if c == 1 else r for r in rows})
    union = 0
    for m in miss:
        union |= m
    if union != full:
        return INF
    if full == 0:
        return 0
    frontier = {0}
    steps = 0
    while True:
        steps += 1
        nxt = {s | m for s in frontier for m in miss}
        if full in nxt:
            return steps - 1
        frontier = nxt


def _essential_vars(f: BoolFun) -> list[int]:
    out = []
    for i in range(f.arity):
        b = _coord_bit(f.arity, i)
        if any(f.table[r] != f.table[r | b] for r in range(1 << f.arity) if not r & b):
            out.append(i)
    return out


@functools.lru_cache(maxsize=None)
def function_properties(f: BoolFun) -> PropertySignature:
    n = f.arity
    t = f.table
    full = (1 << n) - 1
    r0 = t[0] == 0
    r1 = t[full] == 1
    mono = all(
        t[r] <= t[r | _coord_bit(n, i)]
        for r in range(1 << n)
        for i in range(n)
    )
    sd = all(t[r] != t[full ^ r] for r in range(1 << n))
    c = t[0]
    lin = [i for i in range(n) if t[_coord_bit(n, i)] != c]
    lin_mask = 0
    for i in lin:
        lin_mask |= _coord_bit(n, i)
    aff = all(t[r] == (c ^ (bin(r & lin_mask).count("1") & 1)) for r in range(1 << n))

    const = len(set(t)) == 1
    ones = [i for i in range(n) if t[_coord_bit(n, i)] == 1]
    ones_mask = sum(_coord_bit(n, i) for i in ones)
    disj = (const and t[0] == 1) or all(
        t[r] == (1 if r & ones_mask else 0) for r in range(1 << n)
    )
    zeros = [i for i in range(n) if t[full ^ _coord_bit(n, i)] == 0]
    zeros_mask = sum(_coord_bit(n, i) for i in zeros)
    conj = (const and t[0] == 0) or all(
        t[r] == (1 if (r & zeros_mask) == zeros_mask else 0) for r in range(1 << n)
    )
    ess = _essential_vars(f)
    unary = len(ess) <= 1
    proj_or_const = const or (len(ess) == 1 and t[_coord_bit(n, ess[0])] == 1 and t[0] == 0)
    return PropertySignature(
        reproduces0=r0,
        reproduces1=r1,
        monotone=mono,
        self_dual=sd,
        affine=aff,
        sep0_level=_sep_level(f, 0),
        sep1_level=_sep_level(f, 1),
        is_disjunction_form=disj,
        is_conjunction_form=conj,
        is_unary_form=unary,
        is_projection_or_constant=proj_or_const,
    )


def dual(f: BoolFun) -> BoolFun:
    return lib.dual(f)


# -- clone identifiers ----------------------------------------------------------

FIXED_CLONES = (
    "BF", "R0", "R1", "R2", "M", "M0", "M1", "M2",
    "S0", "S1", "S02", "S01", "S00", "S12", "S11", "S10",
    "D", "D1", "D2", "L", "L0", "L1", "L2", "L3",
    "V", "V0", "V1", "V2", "E", "E0", "E1", "E2", "N", "N2", "I", "I0", "I1", "I2",
)
CHAIN_FAMILIES = ("S0", "S02", "S01", "S00", "S1", "S12", "S11", "S10")
# extra defining constraints of each S-family beyond the separation degree
_CHAIN_EXTRA = {
    "S0": frozenset(), "S02": frozenset({"R2"}), "S01": frozenset({"M"}),
    "S00": frozenset({"R2", "M"}),
    "S1": frozenset(), "S12": frozenset({"R2"}), "S11": frozenset({"M"}),
    "S10": frozenset({"R2", "M"}),
}
MAX_DEGREE = MAX_ARITY - 1

_NAME_RE = re.compile(r"([A-Z][A-Z0-9]*?)(?:\^(\d+))?\Z")


@dataclass(frozen=True, order=True)
class CloneId:
    name: str
    degree: int | None = None  # finite degree of an S-chain member; None = limit

    def __post_init__(self):
        if self.name not in FIXED_CLONES:
            raise ValueError(f"unknown clone {self.name!r}")
        if self.degree is not None:
            if self.name not in CHAIN_FAMILIES:
                raise ValueError(f"clone {self.name} takes no degree")
            if self.degree < 2:
                raise ValueError("S-chain degree must be >= 2")

    def __str__(self):
        return self.name if self.degree is None else f"{self.name}^{self.degree}"

    @property
    def is_chain(self) -> bool:
        return self.name in CHAIN_FAMILIES

    @property
    def side(self) -> int:
        return 0 if self.name.startswith("S0") else 1

    @classmethod
    def parse(cls, text: str) -> "CloneId":
        m = _NAME_RE.match(text.strip())
        if not m:
            raise ValueError(f"bad clone name {text!r}")
        deg = int(m.group(2)) if m.group(2) else None
        return cls(m.group(1), deg)


def C(text: str) -> CloneId:
    return CloneId.parse(text)


def all_clones(max_degree: int = 3) -> list[CloneId]:
    out = [CloneId(n) for n in FIXED_CLONES]
    for fam in CHAIN_FAMILIES:
        out.extend(CloneId(fam, d) for d in range(2, max_degree + 1))
    return out


# -- membership -------------------------------------------------------------------

def _member_sig(p: PropertySignature, c: CloneId) -> bool:
    n = c.name
    r2 = p.reproduces0 and p.reproduces1
    if n in CHAIN_FAMILIES:
        level = p.sep0_level if c.side == 0 else p.sep1_level
        need = INF if c.degree is None else c.degree
        if level < need:
            return False
        extra = _CHAIN_EXTRA[n]
        if "R2" in extra and not r2:
            return False
        if "M" in extra and not p.monotone:
            return False
        return True
    if n == "BF":
        return True
    if n in ("R0", "R1", "R2"):
        return {"R0": p.reproduces0, "R1": p.reproduces1, "R2": r2}[n]
    base, suffix = n[0], n[1:]
    rep = {"": True, "0": p.reproduces0, "1": p.reproduces1, "2": r2}
    if base == "M":
        return p.monotone and rep[suffix]
    if base == "D":
        extra = {"": True, "1": r2, "2": p.monotone}[suffix]
        return p.self_dual and extra
    if base == "L":
        extra = {"": True, "0": p.reproduces0, "1": p.reproduces1, "2": r2,
                 "3": p.self_dual}[suffix]
        return p.affine and extra
    if base == "V":
        return p.is_disjunction_form and rep[suffix]
    if base == "E":
        return p.is_conjunction_form and rep[suffix]
    if base == "N":
        # N2 = [not]: projections and negated projections, i.e. N and D
        return p.is_unary_form and (suffix == "" or p.self_dual)
    if base == "I":
        return p.is_projection_or_constant and rep[suffix]
    raise AssertionError(n)


def clone_member(f: BoolFun, c: CloneId) -> bool:
    return _member_sig(function_properties(f), c)


# -- inclusion -------------------------------------------------------------------

# covering pairs between fixed clones, plus the inclusions that Post's
# lattice routes through the S-chains (parent of chain >= anchor below it)
_FIXED_COVERS = {
    "BF": ("R0", "R1", "M", "D", "L"),
    "R0": ("R2", "M0", "L0"),
    "R1": ("R2", "M1", "L1"),
    "R2": ("M2", "D1"),
    "M": ("M0", "M1", "V", "E"),
    "M0": ("M2", "V0"),
    "M1": ("M2", "E1"),
    "M2": (),
    "D": ("D1", "L3"),
    "D1": ("D2", "L2"),
    "D2": ("I2",),
    "L": ("L0", "L1", "L3", "N"),
    "L0": ("L2", "I0"),
    "L1": ("L2", "I1"),
    "L3": ("L2", "N2"),
    "L2": ("I2",),
    "V": ("V0", "V1", "I"),
    "V0": ("V2", "I0"),
    "V1": ("V2", "I1"),
    "V2": ("I2",),
    "E": ("E0", "E1", "I"),
    "E0": ("E2", "I0"),
    "E1": ("E2", "I1"),
    "E2": ("I2",),
    "N": ("N2", "I"),
    "N2": ("I2",),
    "I": ("I0", "I1"),
    "I0": ("I2",),
    "I1": ("I2",),
    "I2": (),
}
# smallest fixed clone above each S-family
_CHAIN_PARENT = {
    "S0": "R1", "S02": "R2", "S01": "M1", "S00": "M2",
    "S1": "R0", "S12": "R2", "S11": "M0", "S10": "M2",
}
# largest fixed clones below the limit clone of each S-family
_CHAIN_ANCHORS = {
    "S0": ("V1",), "S02": ("V2",), "S01": ("V1",), "S00": ("V2",),
    "S1": ("E0",), "S12": ("E2",), "S11": ("E0",), "S10": ("E2",),
}


def _fixed_edges() -> dict[str, set[str]]:
    edges = {k: set(v) for k, v in _FIXED_COVERS.items()}
    for fam, parent in _CHAIN_PARENT.items():
        edges[parent].update(_CHAIN_ANCHORS[fam])
    edges["M2"].add("D2")  # through S00^2 and S10^2
    return edges


@functools.lru_cache(maxsize=None)
def _fixed_below(name: str) -> frozenset[str]:
    edges = _fixed_edges()
    seen = {name}
    stack = [name]
    while stack:
        for lower in edges[stack.pop()]:
            if lower not in seen:
                seen.add(lower)
                stack.append(lower)
    return frozenset(seen)


def _fixed_leq(a: str, b: str) -> bool:
    return a in _fixed_below(b)


def _deg(c: CloneId) -> float:
    return INF if c.degree is None else c.degree


def clone_leq(c1: CloneId, c2: CloneId) -> bool:
    """``c1`` is a subset of ``c2`` in Post's lattice."""
    if c1 == c2:
        return True
    if c1.is_chain and c2.is_chain:
        if c1.side != c2.side:
            return False
        return _CHAIN_EXTRA[c2.name] <= _CHAIN_EXTRA[c1.name] and _deg(c1) >= _deg(c2)
    if c1.is_chain:
        return _fixed_leq(_CHAIN_PARENT[c1.name], c2.name)
    if c2.is_chain:
        if any(_fixed_leq(c1.name, a) for a in _CHAIN_ANCHORS[c2.name]):
            return True
        return c1.name == "D2" and c2.degree == 2
    return _fixed_leq(c1.name, c2.name)


# -- identification ---------------------------------------------------------------

def candidate_clones(functions: Iterable[BoolFun]) -> list[CloneId]:
    levels = [2]
    for f in functions:
        p = function_properties(f)
        for lv in (p.sep0_level, p.sep1_level):
            if lv != INF:
                levels.append(int(lv))
    top = max(levels)
    out = [CloneId(n) for n in FIXED_CLONES]
    for fam in CHAIN_FAMILIES:
        out.extend(CloneId(fam, d) for d in range(2, top + 1))
    return out


@functools.lru_cache(maxsize=4096)
def _clone_id_cached(functions: frozenset[BoolFun]) -> CloneId:
    cands = candidate_clones(functions)
    members = [c for c in cands if all(clone_member(f, c) for f in functions)]
    minimal = [
        c for c in members if not any(d != c and clone_leq(d, c) for d in members)
    ]
    if len(minimal) != 1:
        raise AssertionError(
            f"no unique minimal clone for {sorted(f.name for f in functions)}: "
            f"{[str(c) for c in minimal]}"
        )
    return minimal[0]


def clone_id(functions: Iterable[BoolFun]) -> CloneId:
    """The clone generated by ``functions``."""
    fs = frozenset(functions)
    if not fs:
        raise ValueError("clone_id needs at least one function")
    return _clone_id_cached(fs)


def in_clone_of(f: BoolFun, functions: Iterable[BoolFun]) -> bool:
    """``f`` belongs to the clone generated by ``functions``."""
    fs = list(functions)
    if not fs:
        return clone_member(f, CloneId("I2"))
    return clone_member(f, clone_id(fs))


# -- bases ------------------------------------------------------------------------

def base_of(c: CloneId) -> frozenset[BoolFun]:
    """The finite base listed for ``c`` in Post's classification."""
    n = c.name
    if c.degree is not None:
        if c.degree + 1 > MAX_ARITY:
            raise ValueError(f"degree {c.degree} needs arity {c.degree + 1} > {MAX_ARITY}")
        h = lib.threshold_h(c.degree)
        hd = lib.dual_threshold_h(c.degree)
        chain = {
            "S0": (lib.IMP, hd), "S1": (lib.NIMP, h),
            "S02": (lib.OR_AND_NOT, hd), "S12": (lib.AND_OR_NOT, h),
            "S01": (hd, lib.TOP), "S11": (h, lib.BOT),
            "S00": (lib.OR_AND, hd), "S10": (lib.AND_OR, h),
        }
        return frozenset(chain[n])
    table = {
        "BF": (lib.AND, lib.NOT),
        "R0": (lib.AND, lib.XOR),
        "R1": (lib.OR, lib.XNOR),
        "R2": (lib.OR, lib.AND_XNOR),
        "M": (lib.OR, lib.AND, lib.BOT, lib.TOP),
        "M1": (lib.OR, lib.AND, lib.TOP),
        "M0": (lib.OR, lib.AND, lib.BOT),
        "M2": (lib.OR, lib.AND),
        "S0": (lib.IMP,),
        "S1": (lib.NIMP,),
        "S02": (lib.OR_AND_NOT,),
        "S01": (lib.OR_AND, lib.TOP),
        "S00": (lib.OR_AND,),
        "S12": (lib.AND_OR_NOT,),
        "S11": (lib.AND_OR, lib.BOT),
        "S10": (lib.AND_OR,),
        "D": (lib.MAJ_NN,),
        "D1": (lib.MAJ_N,),
        "D2": (lib.MAJ3,),
        "L": (lib.XOR, lib.TOP),
        "L0": (lib.XOR,),
        "L1": (lib.XNOR,),
        "L2": (lib.XOR3,),
        "L3": (lib.XNOR3,),
        "V": (lib.OR, lib.BOT, lib.TOP),
        "V0": (lib.OR, lib.BOT),
        "V1": (lib.OR, lib.TOP),
        "V2": (lib.OR,),
        "E": (lib.AND, lib.BOT, lib.TOP),
        "E0": (lib.AND, lib.BOT),
        "E1": (lib.AND, lib.TOP),
        "E2": (lib.AND,),
        "N": (lib.NOT, lib.BOT, lib.TOP),
        "N2": (lib.NOT,),
        "I": (lib.ID, lib.BOT, lib.TOP),
        "I0": (lib.ID, lib.BOT),
        "I1": (lib.ID, lib.TOP),
        "I2": (lib.ID,),
    }
    return frozenset(table[n])


# -- B-representations -------------------------------------------------------------

def _var_columns(k: int) -> list[int]:
    cols = []
    for i in range(k):
        col = 0
        for row in range(1 << k):
            if (row >> (k - 1 - i)) & 1:
                col |= 1 << row
        cols.append(col)
    return cols


def table_int(f: BoolFun) -> int:
    return sum(b << i for i, b in enumerate(f.table))


def _apply_tables(g: BoolFun, children: tuple[int, ...], mask: int) -> int:
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


def _compositions(total: int, parts: int):
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@functools.lru_cache(maxsize=1024)
def _find_representation(fs: tuple[BoolFun, ...], target: BoolFun, budget: int):
    k = target.arity
    mask = (1 << (1 << k)) - 1
    goal = table_int(target)
    formula_of: dict[int, Formula] = {}
    by_size: dict[int, list[int]] = {}
    level_one = by_size.setdefault(1, [])
    cols = _var_columns(k)
    for i, col in enumerate(cols):
        if col not in formula_of:
            formula_of[col] = Var(f"x{i + 1}")
            level_one.append(col)
    for g in fs:
        if g.arity == 0:
            t = mask if g.table[0] else 0
            if t not in formula_of:
                formula_of[t] = Apply(g, ())
                level_one.append(t)
    if goal in formula_of:
        return formula_of[goal]
    max_arity = max((g.arity for g in fs), default=0)
    last_new = 1 if level_one else 0
    s = 1
    while s < budget:
        s += 1
        if max_arity == 0 or s > 1 + max_arity * last_new:
            return None  # closed under B: nothing new can appear
        found = by_size.setdefault(s, [])
        for g in fs:
            if g.arity == 0:
                continue
            for sizes in _compositions(s - 1, g.arity):
                pools = [by_size.get(z, ()) for z in sizes]
                if not all(pools):
                    continue
                for combo in itertools.product(*pools):
                    t = _apply_tables(g, combo, mask)
                    if t in formula_of:
                        continue
                    formula_of[t] = Apply(g, tuple(formula_of[c] for c in combo))
                    found.append(t)
                    if t == goal:
                        return formula_of[t]
        if found:
            last_new = s
    return None


def find_representation(
    functions: Iterable[BoolFun], target: BoolFun, budget: int = 16
) -> Formula | None:
    """Smallest B-formula over ``x1..xk`` computing ``target``, or None.

    Search is by increasing node count up to ``budget``; returned formulas
    are checked against the target truth table.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    fs = tuple(sorted(set(functions), key=lambda f: (f.name, f.arity, f.table)))
    if fs and not in_clone_of(target, fs):
        return None
    out = _find_representation(fs, target, budget)
    if out is not None:
        assert formula_table(out, target.arity) == table_int(target)
    return out


def formula_table(f: Formula, k: int) -> int:
    """Truth table (as an int) of ``f`` over variables ``x1..xk``."""
    mask = (1 << (1 << k)) - 1
    cols = _var_columns(k)
    memo: dict[Formula, int] = {}

    def go(node: Formula) -> int:
        if isinstance(node, Var):
            m = re.fullmatch(r"x(\d+)", node.name)
            if not m or not 1 <= int(m.group(1)) <= k:
                raise FormulaError(f"unexpected variable {node.name}")
            return cols[int(m.group(1)) - 1]
        hit = memo.get(node)
        if hit is None:
            hit = _apply_tables(node.fn, tuple(go(c) for c in node.args), mask)
            memo[node] = hit
        return hit

    return go(f)


def instantiate(rep: Formula, args: Iterable[Formula]) -> Formula:
    """Plug ``args`` into the placeholders ``x1..xk`` of a representation."""
    return substitute_vars(rep, {f"x{i + 1}": a for i, a in enumerate(args)})


class RepresentationError(FormulaError):
    pass


def rewrite_over(f: Formula, functions: Iterable[BoolFun], budget: int = 16) -> Formula:
    """Replace every connective of ``f`` not in ``functions`` by a representation."""
    fs = frozenset(functions)
    reps: dict[BoolFun, Formula] = {}
    memo: dict[Formula, Formula] = {}

    def rep_for(g: BoolFun) -> Formula:
        if g not in reps:
            r = find_representation(fs, g, budget)
            if r is None:
                names = sorted(x.name for x in fs)
                raise RepresentationError(f"cannot represent {g.name} over {names}")
            reps[g] = r
        return reps[g]

    def go(node: Formula) -> Formula:
        if isinstance(node, Var):
            return node
        hit = memo.get(node)
        if hit is not None:
            return hit
        args = tuple(go(c) for c in node.args)
        if node.fn in fs:
            out = Apply(node.fn, args)
        else:
            out = instantiate(rep_for(node.fn), args)
        memo[node] = out
        return out

    return go(f)
