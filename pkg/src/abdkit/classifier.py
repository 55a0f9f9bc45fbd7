"""Complexity verdicts for abduction by clone, mode and manifestation class."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .clones import CloneId, clone_leq
from .model import MANIFESTATION_CLASSES, Mode

_C = CloneId.parse

RANK = {"L": 0, "ParityL": 1, "P": 2, "NP": 3, "coNP": 3, "Sigma2P": 4}
COUNT_RANK = {"FP": 0, "#P": 1, "#coNP": 2}


@dataclass(frozen=True)
class Verdict:
    membership: str
    hardness: str | None = None
    complete: bool = False
    note: str | None = None

    def __post_init__(self):
        if self.complete:
            assert self.membership == self.hardness

    def __str__(self):
        if self.complete:
            text = f"{self.membership}-complete"
        elif self.hardness:
            text = f"in {self.membership}, {self.hardness}-hard"
        else:
            text = f"in {self.membership}"
        return f"{text} ({self.note})" if self.note else text

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def _complete(cls: str) -> Verdict:
    return Verdict(cls, cls, True)


_IN_L = Verdict("L")
_P_PARITY = Verdict("P", "ParityL")

# symmetric mode: columns E, N, V, L, M, BF
_SYM_ROWS = {
    "neg": (_IN_L, _IN_L, _IN_L, Verdict("P"), Verdict("L", note="trivial"), _complete("Sigma2P")),
    "lit": (_IN_L, _IN_L, _IN_L, _P_PARITY, _complete("NP"), _complete("Sigma2P")),
    "term": (_IN_L, _IN_L, _complete("NP"), _P_PARITY, _complete("NP"), _complete("Sigma2P")),
    "F": (_IN_L, _IN_L, _IN_L, _P_PARITY, _complete("Sigma2P"), _complete("Sigma2P")),
}
_SYM_COLS = ("E", "N", "V", "L", "M", "BF")

# positive mode: columns EVN, L1/L2, L0/L3/L, M, R1, BF
_POS_ROWS = {
    "neg": (_IN_L, _IN_L, Verdict("P"), _IN_L, _IN_L, _complete("Sigma2P")),
    "negterm": (_IN_L, _IN_L, _complete("NP"), _IN_L, _IN_L, _complete("Sigma2P")),
    "lit": (_IN_L, _P_PARITY, _P_PARITY, _IN_L, _complete("coNP"), _complete("Sigma2P")),
    "term": (_IN_L, _P_PARITY, _complete("NP"), _IN_L, _complete("coNP"), _complete("Sigma2P")),
    "F": (
        _IN_L,
        _P_PARITY,
        Verdict("NP", "ParityL", note="open"),
        _complete("coNP"),
        _complete("coNP"),
        _complete("Sigma2P"),
    ),
}
_POS_COLS = ("EVN", "L12", "L03", "M", "R1", "BF")


def _sym_column(c: CloneId) -> str:
    for name in ("E", "N", "V", "L", "M"):
        if clone_leq(c, _C(name)):
            return name
    return "BF"


def _pos_column(c: CloneId) -> str:
    if any(clone_leq(c, _C(n)) for n in ("E", "N", "V")):
        return "EVN"
    if c in (_C("L1"), _C("L2")):
        return "L12"
    if clone_leq(c, _C("L")):
        return "L03"
    if clone_leq(c, _C("M")):
        return "M"
    if clone_leq(c, _C("R1")):
        return "R1"
    return "BF"


def _row(mode: Mode, cls: str) -> str:
    if cls not in MANIFESTATION_CLASSES:
        raise ValueError(f"unknown manifestation class {cls!r}")
    if cls == "F":
        return "F"
    if cls in ("PT", "T"):
        return "term"
    if cls in ("NQ", "NC"):
        return "neg"
    if cls == "NT":
        return "neg" if mode is Mode.SYMMETRIC else "negterm"
    return "lit"


def classify_decision(c: CloneId, mode: Mode | str, cls: str) -> Verdict:
    mode = Mode(mode)
    row = _row(mode, cls)
    if mode is Mode.SYMMETRIC:
        return _SYM_ROWS[row][_SYM_COLS.index(_sym_column(c))]
    return _POS_ROWS[row][_POS_COLS.index(_pos_column(c))]


COUNT_VARIANTS = ("full", "positive-all", "positive-minimal")


def classify_counting(c: CloneId, mode: Mode | str, variant: str, cls: str = "PQ") -> Verdict:
    mode = Mode(mode)
    if cls != "PQ":
        raise ValueError("counting verdicts exist only for positive-literal manifestations")
    if variant not in COUNT_VARIANTS:
        raise ValueError(f"unknown counting variant {variant!r}")
    if (variant == "full") != (mode is Mode.SYMMETRIC):
        raise ValueError(f"variant {variant} does not match mode {mode.value}")
    contains = lambda *names: any(clone_leq(_C(n), c) for n in names)  # noqa: E731
    if contains("S02", "S12", "D1"):
        return _complete("#coNP")
    if variant == "full":
        if clone_leq(c, _C("M")) and contains("V2", "S10", "D2"):
            return _complete("#P")
        return Verdict("FP")
    if clone_leq(_C("L2"), c) and clone_leq(c, _C("L")):
        return Verdict("#P", note="completeness open")
    return Verdict("FP")


def verdict_rank(v: Verdict) -> int:
    return COUNT_RANK[v.membership] if v.membership in COUNT_RANK else RANK[v.membership]
