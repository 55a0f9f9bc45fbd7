"""Abduction instances, manifestations and explanations.

Also hosts the two constant-elimination transforms and the line-oriented
instance file format.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .formula import (
    Apply,
    BoolFun,
    Formula,
    FormulaError,
    KnowledgeBase,
    Var,
    formula_vars,
    functions_used,
    is_identifier,
    parse_function,
    parse_sexpr,
    substitute,
    to_sexpr,
)

Lit = tuple[str, bool]  # (variable, positive?)


class InstanceError(ValueError):
    """An instance violates the problem definition."""


class Mode(str, enum.Enum):
    SYMMETRIC = "symmetric"
    POSITIVE = "positive"


def lit_str(lit: Lit) -> str:
    return lit[0] if lit[1] else "!" + lit[0]


def parse_lit(text: str) -> Lit:
    neg = text.startswith("!")
    name = text[1:] if neg else text
    if not is_identifier(name):
        raise InstanceError(f"bad literal {text!r}")
    return (name, not neg)


MANIFESTATION_CLASSES = ("PQ", "NQ", "Q", "PC", "NC", "C", "PT", "NT", "T", "F")
NEGATIVE_CLASSES = frozenset({"NQ", "NC", "NT"})
TERM_CLASSES = frozenset({"PT", "NT", "T"})


@dataclass(frozen=True)
class Manifestation:
    kind: str  # literal | clause | term | formula
    literals: tuple[Lit, ...] = ()
    formula: Formula | None = None

    def __post_init__(self):
        if self.kind == "formula":
            if self.formula is None or self.literals:
                raise InstanceError("formula manifestation needs exactly a formula")
            return
        if self.kind not in ("literal", "clause", "term"):
            raise InstanceError(f"unknown manifestation kind {self.kind!r}")
        if self.formula is not None or not self.literals:
            raise InstanceError(f"{self.kind} manifestation needs literals")
        if self.kind == "literal" and len(self.literals) != 1:
            raise InstanceError("literal manifestation takes one literal")
        if len(set(self.literals)) != len(self.literals):
            raise InstanceError("duplicate literal in manifestation")

    @classmethod
    def literal(cls, lit: Lit | str) -> "Manifestation":
        return cls("literal", (parse_lit(lit) if isinstance(lit, str) else lit,))

    @classmethod
    def clause(cls, lits: Iterable[Lit | str]) -> "Manifestation":
        return cls("clause", tuple(parse_lit(l) if isinstance(l, str) else l for l in lits))

    @classmethod
    def term(cls, lits: Iterable[Lit | str]) -> "Manifestation":
        return cls("term", tuple(parse_lit(l) if isinstance(l, str) else l for l in lits))

    @classmethod
    def of_formula(cls, f: Formula) -> "Manifestation":
        return cls("formula", formula=f)

    @property
    def class_tag(self) -> str:
        if self.kind == "formula":
            return "F"
        signs = {s for _, s in self.literals}
        prefix = "P" if signs == {True} else "N" if signs == {False} else ""
        return prefix + {"literal": "Q", "clause": "C", "term": "T"}[self.kind]

    def vars(self) -> frozenset[str]:
        if self.formula is not None:
            return formula_vars(self.formula)
        return frozenset(v for v, _ in self.literals)

    def holds(self, a) -> bool:
        if self.formula is not None:
            return bool(self.formula.evaluate(a))
        vals = [bool(a[v]) == s for v, s in self.literals]
        return all(vals) if self.kind == "term" else any(vals)

    def __str__(self):
        if self.formula is not None:
            return "formula " + to_sexpr(self.formula)
        return self.kind + " " + " ".join(lit_str(l) for l in self.literals)


class Explanation:
    """A consistent set of literals over the hypotheses."""

    __slots__ = ("literals",)

    def __init__(self, literals: Iterable[Lit] = ()):
        lits = frozenset(literals)
        names = [v for v, _ in lits]
        if len(names) != len(set(names)):
            raise InstanceError("inconsistent explanation: a variable occurs with both signs")
        object.__setattr__(self, "literals", lits)

    def __setattr__(self, key, value):
        raise AttributeError("Explanation is immutable")

    def __eq__(self, other):
        return isinstance(other, Explanation) and self.literals == other.literals

    def __hash__(self):
        return hash(self.literals)

    def __len__(self):
        return len(self.literals)

    def __iter__(self) -> Iterator[Lit]:
        return iter(sorted(self.literals))

    def __repr__(self):
        return "Explanation({" + ", ".join(self.to_strings()) + "})"

    def vars(self) -> frozenset[str]:
        return frozenset(v for v, _ in self.literals)

    def as_dict(self) -> dict[str, bool]:
        return dict(self.literals)

    def is_positive(self) -> bool:
        return all(s for _, s in self.literals)

    def is_full(self, hypotheses: Iterable[str]) -> bool:
        return self.vars() == frozenset(hypotheses)

    def to_strings(self) -> list[str]:
        return [lit_str(l) for l in sorted(self.literals)]

    def sort_key(self, order: Iterable[str]) -> tuple[int, ...]:
        """Lexicographic key: per variable, absent < positive < negative."""
        d = self.as_dict()
        return tuple(0 if v not in d else (1 if d[v] else 2) for v in order)

    def issubset(self, other: "Explanation") -> bool:
        return self.literals <= other.literals


@dataclass(frozen=True)
class Instance:
    kb: KnowledgeBase
    hypotheses: frozenset[str]
    manifestation: Manifestation
    mode: Mode = Mode.SYMMETRIC
    _order: tuple[str, ...] = field(default=(), compare=False, repr=False)

    @property
    def functions(self) -> frozenset[BoolFun]:
        return self.kb.function_set

    @property
    def class_tag(self) -> str:
        return self.manifestation.class_tag

    @property
    def positive(self) -> bool:
        return self.mode is Mode.POSITIVE

    @property
    def hyp_order(self) -> tuple[str, ...]:
        return self._order or tuple(sorted(self.hypotheses))

    def all_vars(self) -> frozenset[str]:
        return self.kb.vars() | self.manifestation.vars()

    def with_mode(self, mode: Mode | str) -> "Instance":
        return validate_instance(self.kb, self.hypotheses, self.manifestation, Mode(mode))


def validate_instance(
    kb: KnowledgeBase,
    hypotheses: Iterable[str],
    manifestation: Manifestation,
    mode: Mode | str = Mode.SYMMETRIC,
) -> Instance:
    hyps = frozenset(hypotheses)
    gv = kb.vars()
    missing = sorted(hyps - gv)
    if missing:
        raise InstanceError(f"hypotheses not in Vars(kb): {', '.join(missing)}")
    mv = manifestation.vars()
    if mv & hyps:
        raise InstanceError(f"manifestation uses hypotheses: {', '.join(sorted(mv & hyps))}")
    if mv - gv:
        raise InstanceError(
            f"manifestation variables outside Vars(kb): {', '.join(sorted(mv - gv))}"
        )
    if manifestation.formula is not None:
        for fn in functions_used(manifestation.formula):
            if kb.functions.get(fn.name) != fn:
                raise InstanceError(f"manifestation uses undeclared function {fn.name!r}")
    return Instance(kb, hyps, manifestation, Mode(mode), tuple(sorted(hyps)))


def make_instance(
    formulas: Iterable[Formula],
    functions: Iterable[BoolFun],
    hypotheses: Iterable[str],
    manifestation: Manifestation,
    mode: Mode | str = Mode.SYMMETRIC,
) -> Instance:
    return validate_instance(KnowledgeBase(formulas, functions), hypotheses, manifestation, mode)


def verify_explanation(p: Instance, e: Explanation) -> bool:
    """``kb & e`` is satisfiable and entails the manifestation."""
    from . import sat

    if not e.vars() <= p.hypotheses:
        raise InstanceError("explanation mentions non-hypothesis variables")
    if p.positive and not e.is_positive():
        raise InstanceError("positive mode admits only positive literals")
    extra = sorted(e.literals)
    if not sat.satisfiable(p.kb, extra):
        return False
    return sat.entails(p.kb, extra, p.manifestation)


# -- constant elimination ---------------------------------------------------------

def fresh_name(prefix: str, taken: Iterable[str]) -> str:
    used = set(taken)
    i = 0
    while f"{prefix}{i}" in used:
        i += 1
    return f"{prefix}{i}"


def _constants(funs: Iterable[BoolFun], value: int) -> list[BoolFun]:
    return [f for f in funs if f.arity == 0 and f.table[0] == value]


def eliminate_true_constant(p: Instance) -> Instance:
    """Replace the 1-constant by a fresh variable pinned true by a unit formula."""
    tops = _constants(p.functions, 1)
    if not tops:
        return p
    t = fresh_name("__t", p.all_vars())
    tv = Var(t)

    def strip(f: Formula) -> Formula:
        for c in tops:
            f = substitute(f, Apply(c, ()), tv)
        return f

    rest = [f for f in p.functions if f not in tops]
    formulas = [strip(f) for f in p.kb.formulas] + [tv]
    man = p.manifestation
    if man.formula is not None:
        man = Manifestation.of_formula(strip(man.formula))
    return make_instance(formulas, rest, p.hypotheses, man, p.mode)


def eliminate_false_constant(p: Instance, budget: int = 16) -> Instance:
    """Replace the 0-constant by a fresh hypothesis ``f``, weakening every
    formula to ``phi[0/f] or f``."""
    from .clones import RepresentationError, find_representation, instantiate, rewrite_over
    from .library import OR

    bots = _constants(p.functions, 0)
    if not bots:
        return p
    if p.class_tag == "F":
        raise InstanceError("0-constant elimination does not apply to formula manifestations")
    if p.positive:
        raise InstanceError("0-constant elimination needs symmetric mode")
    if p.manifestation.kind == "clause":
        names = [v for v, _ in p.manifestation.literals]
        if len(set(names)) < len(names):
            raise InstanceError("0-constant elimination breaks on a tautological clause")
    rest = sorted((f for f in p.functions if f not in bots), key=lambda f: f.name)
    rep = find_representation(rest, OR, budget) if rest else None
    if rep is None:
        raise InstanceError("0-constant elimination needs 'or' in the clone of the other connectives")
    fname = fresh_name("__f", p.all_vars())
    fv = Var(fname)
    out = []
    for phi in p.kb.formulas:
        g = phi
        for c in bots:
            g = substitute(g, Apply(c, ()), fv)
        try:
            g = rewrite_over(g, rest, budget)
        except RepresentationError as exc:  # pragma: no cover - g only uses rest
            raise InstanceError(str(exc)) from None
        out.append(instantiate(rep, [g, fv]))
    return make_instance(out, rest, p.hypotheses | {fname}, p.manifestation, p.mode)


# -- text format ----------------------------------------------------------------------

class InstanceParseError(InstanceError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_instance(text: str) -> Instance:
    funs: dict[str, BoolFun] = {}
    kb_lines: list[tuple[int, str]] = []
    hyps: list[str] = []
    mode = Mode.SYMMETRIC
    man: Manifestation | None = None
    man_line = 0
    man_src: tuple[str, str] | None = None
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        try:
            if head == "fun":
                parts = rest.split()
                if len(parts) != 3:
                    raise InstanceError("expected: fun <name> <arity> <bits>")
                name, arity, bits = parts
                if not arity.isdigit():
                    raise InstanceError(f"bad arity {arity!r}")
                funs[name] = parse_function(name, int(arity), bits, funs)
            elif head == "kb":
                kb_lines.append((no, rest))
            elif head == "hyp":
                for v in rest.split():
                    if not is_identifier(v):
                        raise InstanceError(f"bad hypothesis name {v!r}")
                    hyps.append(v)
            elif head == "mode":
                if rest not in ("symmetric", "positive"):
                    raise InstanceError(f"unknown mode {rest!r}")
                mode = Mode(rest)
            elif head == "manifest":
                if man_src is not None:
                    raise InstanceError("manifestation given twice")
                kind, _, body = rest.partition(" ")
                man_src = (kind, body.strip())
                man_line = no
            else:
                raise InstanceError(f"unknown directive {head!r}")
        except (InstanceError, FormulaError) as exc:
            raise InstanceParseError(no, str(exc)) from None
    formulas = []
    for no, src in kb_lines:
        try:
            formulas.append(parse_sexpr(src, funs))
        except FormulaError as exc:
            raise InstanceParseError(no, str(exc)) from None
    if man_src is None:
        raise InstanceParseError(len(text.splitlines()) + 1, "missing manifest directive")
    kind, body = man_src
    try:
        if kind == "formula":
            man = Manifestation.of_formula(parse_sexpr(body, funs))
        elif kind in ("literal", "clause", "term"):
            man = Manifestation(kind, tuple(parse_lit(t) for t in body.split()))
        else:
            raise InstanceError(f"unknown manifestation kind {kind!r}")
    except (InstanceError, FormulaError) as exc:
        raise InstanceParseError(man_line, str(exc)) from None
    try:
        return make_instance(formulas, funs.values(), hyps, man, mode)
    except (InstanceError, FormulaError) as exc:
        raise InstanceParseError(man_line, str(exc)) from None


def format_instance(p: Instance) -> str:
    lines = []
    for fn in p.kb.functions.values():
        lines.append(f"fun {fn.name} {fn.arity} {fn.bits}")
    for f in p.kb.formulas:
        lines.append(f"kb {to_sexpr(f)}")
    if p.hypotheses:
        lines.append("hyp " + " ".join(p.hyp_order))
    lines.append(f"mode {p.mode.value}")
    lines.append(f"manifest {p.manifestation}")
    return "\n".join(lines) + "\n"
