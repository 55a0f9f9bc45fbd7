"""Boolean functions, B-formulae and knowledge bases.

A :class:`BoolFun` is a named truth table.  Bit ``i`` of the table is the
value of the function on the binary digits of ``i``, most significant digit
first, so ``BoolFun("h", 2, (0, 0, 1, 0))`` is ``x and not y``.

Formulas are trees of :class:`Var` leaves and :class:`Apply` nodes.  Both
are immutable and hash structurally; the hash is cached because solvers key
dictionaries on sub-formulas.
"""

from __future__ import annotations

import re
from typing import Callable, Iterable, Iterator, Mapping, Sequence

MAX_ARITY = 8

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

Assignment = Mapping[str, bool]


class FormulaError(ValueError):
    """Malformed function, formula or knowledge base."""


class UnboundVariable(FormulaError, KeyError):
    pass


def is_identifier(name: str) -> bool:
    return bool(_IDENT.match(name))


class BoolFun:
    __slots__ = ("name", "arity", "table", "_hash")

    def __init__(self, name: str, arity: int, table: Sequence[int]):
        if not is_identifier(name):
            raise FormulaError(f"bad function name {name!r}")
        if arity < 0 or arity > MAX_ARITY:
            raise FormulaError(f"arity {arity} outside 0..{MAX_ARITY}")
        table = tuple(1 if b else 0 for b in table)
        if len(table) != 1 << arity:
            raise FormulaError(
                f"function {name}: table has {len(table)} bits, expected {1 << arity}"
            )
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "_hash", hash((name, arity, table)))

    def __setattr__(self, key, value):
        raise AttributeError("BoolFun is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, BoolFun)
            and self.name == other.name
            and self.arity == other.arity
            and self.table == other.table
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"BoolFun({self.name!r}, {self.arity}, {self.bits!r})"

    @property
    def bits(self) -> str:
        return "".join(map(str, self.table))

    def __call__(self, *args) -> int:
        if len(args) != self.arity:
            raise FormulaError(f"{self.name} expects {self.arity} arguments")
        index = 0
        for a in args:
            index = (index << 1) | (1 if a else 0)
        return self.table[index]

    def renamed(self, name: str) -> "BoolFun":
        return BoolFun(name, self.arity, self.table)

    def same_function(self, other: "BoolFun") -> bool:
        """Equal truth tables, names ignored."""
        return self.arity == other.arity and self.table == other.table


def parse_function(
    name: str,
    arity: int,
    bits: str,
    declared: Mapping[str, BoolFun] | None = None,
) -> BoolFun:
    """Build a function from a ``0``/``1`` string in the fixed bit order.

    ``declared`` is the set of names already in scope; redeclaring one is
    an error.
    """
    if declared is not None and name in declared:
        raise FormulaError(f"duplicate function name {name!r}")
    if arity > MAX_ARITY:
        raise FormulaError(f"arity {arity} exceeds cap {MAX_ARITY}")
    if not bits or set(bits) - {"0", "1"}:
        raise FormulaError(f"function {name}: bits must be 0/1 characters")
    if len(bits) != 1 << arity:
        raise FormulaError(
            f"function {name}: {len(bits)} bits given, 2^{arity} = {1 << arity} needed"
        )
    return BoolFun(name, arity, [int(c) for c in bits])


class Formula:
    __slots__ = ()

    def evaluate(self, a: Assignment) -> int:
        return evaluate(self, a)

    def __str__(self):
        return to_sexpr(self)


class Var(Formula):
    __slots__ = ("name", "_hash")

    def __init__(self, name: str):
        if not is_identifier(name):
            raise FormulaError(f"bad variable name {name!r}")
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "_hash", hash(("var", name)))

    def __setattr__(self, key, value):
        raise AttributeError("Var is immutable")

    def __eq__(self, other):
        return isinstance(other, Var) and other.name == self.name

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Var({self.name!r})"


class Apply(Formula):
    __slots__ = ("fn", "args", "_hash")

    def __init__(self, fn: BoolFun, args: Iterable[Formula] = ()):
        args = tuple(args)
        if len(args) != fn.arity:
            raise FormulaError(
                f"{fn.name} has arity {fn.arity} but got {len(args)} arguments"
            )
        for a in args:
            if not isinstance(a, Formula):
                raise FormulaError(f"argument {a!r} is not a formula")
        object.__setattr__(self, "fn", fn)
        object.__setattr__(self, "args", args)
        object.__setattr__(self, "_hash", hash((fn, args)))

    def __setattr__(self, key, value):
        raise AttributeError("Apply is immutable")

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, Apply)
            and self._hash == other._hash
            and self.fn == other.fn
            and self.args == other.args
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Apply({self.fn.name}, {list(self.args)!r})"


def const(fn: BoolFun) -> Apply:
    if fn.arity != 0:
        raise FormulaError(f"{fn.name} is not a constant")
    return Apply(fn, ())


def evaluate(f: Formula, a: Assignment) -> int:
    """Value of ``f`` under ``a`` (0 or 1)."""
    if isinstance(f, Var):
        try:
            return 1 if a[f.name] else 0
        except KeyError:
            raise UnboundVariable(f.name) from None
    index = 0
    for child in f.args:
        index = (index << 1) | evaluate(child, a)
    return f.fn.table[index]


def iter_nodes(f: Formula) -> Iterator[Formula]:
    stack = [f]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, Apply):
            stack.extend(reversed(node.args))


def formula_vars(f: Formula) -> frozenset[str]:
    return frozenset(n.name for n in iter_nodes(f) if isinstance(n, Var))


def functions_used(f: Formula) -> frozenset[BoolFun]:
    return frozenset(n.fn for n in iter_nodes(f) if isinstance(n, Apply))


def size(f: Formula) -> int:
    return sum(1 for _ in iter_nodes(f))


def substitute(f: Formula, target: Formula, replacement: Formula) -> Formula:
    """``f`` with every occurrence of the leaf ``target`` replaced."""
    if not (isinstance(target, Var) or (isinstance(target, Apply) and not target.args)):
        raise FormulaError("substitution target must be a variable or constant")
    memo: dict[Formula, Formula] = {}

    def go(node: Formula) -> Formula:
        if node == target:
            return replacement
        if isinstance(node, Var) or not node.args:
            return node
        hit = memo.get(node)
        if hit is not None:
            return hit
        new_args = tuple(go(c) for c in node.args)
        out = node if new_args == node.args else Apply(node.fn, new_args)
        memo[node] = out
        return out

    return go(f)


def substitute_vars(f: Formula, mapping: Mapping[str, Formula]) -> Formula:
    """Simultaneous substitution of variables by formulas."""
    memo: dict[Formula, Formula] = {}

    def go(node: Formula) -> Formula:
        if isinstance(node, Var):
            return mapping.get(node.name, node)
        if not node.args:
            return node
        hit = memo.get(node)
        if hit is not None:
            return hit
        out = Apply(node.fn, tuple(go(c) for c in node.args))
        memo[node] = out
        return out

    return go(f)


def compile_conjunction(formulas: Sequence[Formula]) -> Callable[[Assignment], bool]:
    """Straight-line evaluator for the conjunction of ``formulas``.

    Shared subformulas are computed once; agrees with ``evaluate``.
    """
    lines = ["def check(a):"]
    tables: dict[str, tuple[int, ...]] = {}
    slot: dict[Formula, str] = {}
    names: dict[str, str] = {}

    def emit(node: Formula) -> str:
        hit = slot.get(node)
        if hit is not None:
            return hit
        if isinstance(node, Var):
            ref = names.setdefault(node.name, f"v{len(names)}")
            lines.append(f"    {ref} = 1 if a[{node.name!r}] else 0")
        else:
            assert isinstance(node, Apply)
            args = [emit(c) for c in node.args]
            t = f"T{len(tables)}"
            tables[t] = node.fn.table
            index = " | ".join(f"({x} << {len(args) - 1 - i})" for i, x in enumerate(args)) or "0"
            ref = f"n{len(slot)}"
            lines.append(f"    {ref} = {t}[{index}]")
        slot[node] = ref
        return ref

    roots = [emit(f) for f in formulas]
    lines.append("    return bool(" + (" and ".join(roots) or "1") + ")")
    scope: dict = dict(tables)
    exec("\n".join(lines), scope)  # noqa: S102 - generated from our own node types
    raw = scope["check"]

    def check(a: Assignment) -> bool:
        try:
            return raw(a)
        except KeyError as exc:
            raise UnboundVariable(exc.args[0]) from None

    return check


class KnowledgeBase:
    """An ordered, duplicate-free set of formulas over a declared function set.

    Semantically the conjunction of its formulas.
    """

    __slots__ = ("formulas", "functions", "_vars", "_check")

    def __init__(self, formulas: Iterable[Formula], functions: Iterable[BoolFun]):
        funs: dict[str, BoolFun] = {}
        for fn in functions:
            if fn.name in funs and funs[fn.name] != fn:
                raise FormulaError(f"function name {fn.name!r} declared twice")
            funs[fn.name] = fn
        seen: dict[Formula, None] = {}
        for f in formulas:
            for fn in functions_used(f):
                if funs.get(fn.name) != fn:
                    raise FormulaError(f"formula uses undeclared function {fn.name!r}")
            seen.setdefault(f, None)
        object.__setattr__(self, "formulas", tuple(seen))
        object.__setattr__(self, "functions", dict(sorted(funs.items())))
        vs: set[str] = set()
        for f in self.formulas:
            vs |= formula_vars(f)
        object.__setattr__(self, "_vars", frozenset(vs))
        object.__setattr__(self, "_check", None)

    def __setattr__(self, key, value):
        raise AttributeError("KnowledgeBase is immutable")

    def __iter__(self):
        return iter(self.formulas)

    def __len__(self):
        return len(self.formulas)

    def __eq__(self, other):
        return (
            isinstance(other, KnowledgeBase)
            and self.formulas == other.formulas
            and self.functions == other.functions
        )

    def __hash__(self):
        return hash((self.formulas, tuple(self.functions.values())))

    def __repr__(self):
        body = ", ".join(to_sexpr(f) for f in self.formulas)
        return f"KnowledgeBase([{body}])"

    @property
    def function_set(self) -> frozenset[BoolFun]:
        return frozenset(self.functions.values())

    def vars(self) -> frozenset[str]:
        return self._vars

    def with_formulas(self, formulas: Iterable[Formula]) -> "KnowledgeBase":
        return KnowledgeBase(formulas, self.functions.values())

    def holds(self, a: Assignment) -> bool:
        if self._check is None:
            object.__setattr__(self, "_check", compile_conjunction(self.formulas))
        return self._check(a)


def vars_of(x: "KnowledgeBase | Formula | Iterable[Formula]") -> frozenset[str]:
    if isinstance(x, KnowledgeBase):
        return x.vars()
    if isinstance(x, Formula):
        return formula_vars(x)
    out: set[str] = set()
    for f in x:
        out |= formula_vars(f)
    return frozenset(out)


# -- s-expressions -----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\()|(\))|([^\s()]+))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise FormulaError(f"cannot tokenize {text[pos:]!r}")
        tokens.append(m.group(1) or m.group(2) or m.group(3))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tokens


def parse_sexpr(text: str, functions: Mapping[str, BoolFun]) -> Formula:
    """Parse ``(fname arg ...)`` syntax; bare identifiers are variables."""
    tokens = _tokenize(text)
    if not tokens:
        raise FormulaError("empty formula")
    pos = 0

    def parse() -> Formula:
        nonlocal pos
        if pos >= len(tokens):
            raise FormulaError("unexpected end of formula")
        tok = tokens[pos]
        pos += 1
        if tok == ")":
            raise FormulaError("unexpected ')'")
        if tok != "(":
            if not is_identifier(tok):
                raise FormulaError(f"bad variable name {tok!r}")
            return Var(tok)
        if pos >= len(tokens):
            raise FormulaError("unexpected end of formula")
        name = tokens[pos]
        pos += 1
        if name in "()":
            raise FormulaError("expected a function name after '('")
        fn = functions.get(name)
        if fn is None:
            raise FormulaError(f"unknown function {name!r}")
        args = []
        while True:
            if pos >= len(tokens):
                raise FormulaError(f"unclosed application of {name}")
            if tokens[pos] == ")":
                pos += 1
                break
            args.append(parse())
        return Apply(fn, args)

    out = parse()
    if pos != len(tokens):
        raise FormulaError(f"trailing input after formula: {' '.join(tokens[pos:])}")
    return out


def to_sexpr(f: Formula) -> str:
    if isinstance(f, Var):
        return f.name
    if not f.args:
        return f"({f.fn.name})"
    return "(" + f.fn.name + " " + " ".join(to_sexpr(a) for a in f.args) + ")"
