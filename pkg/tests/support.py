"""Shared builders for the test suite."""

from __future__ import annotations

from typing import Iterable, Iterator

from abdkit.formula import BoolFun, parse_sexpr
from abdkit.generators import RandomProfile, gen_random
from abdkit.model import Instance, Manifestation, Mode, make_instance

REGIONS = ("E", "N", "V", "affine", "monotone", "R1", "BF")


def inst(
    formulas: Iterable[str],
    funs: Iterable[BoolFun],
    hyps: Iterable[str],
    man: Manifestation,
    mode: str = "symmetric",
) -> Instance:
    funs = list(funs)
    table = {f.name: f for f in funs}
    return make_instance([parse_sexpr(t, table) for t in formulas], funs, hyps, man, Mode(mode))


def random_instances(
    count: int, regions=REGIONS, start: int = 0, **profile
) -> Iterator[Instance]:
    """``count`` seeded instances cycling through ``regions``."""
    profile.setdefault("max_vars", 8)
    profile.setdefault("max_hyps", 4)
    for i in range(count):
        region = regions[i % len(regions)]
        yield gen_random(start + i, RandomProfile(region, **profile))
