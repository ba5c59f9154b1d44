"""Conjectured upper bounds on the injective chromatic number and verdict logic."""

from __future__ import annotations

import enum
import math
from collections.abc import Callable
from dataclasses import dataclass

from .graphcore import Graph
from .metrics import girth as _girth

__all__ = [
    "BoundError",
    "BoundFn",
    "Verdict",
    "VerdictKind",
    "chen_bound",
    "luzar_bound",
    "la_storgel_bound",
    "girth5_bound",
    "BOUNDS",
    "get_bound",
    "verdict",
]


class BoundError(ValueError):
    """Raised when a bound is evaluated outside its domain."""


def chen_bound(delta: int) -> int:
    """``ceil(3*delta/2)``, for ``delta >= 3``."""
    if delta < 3:
        raise BoundError(f"chen bound needs delta >= 3, got {delta}")
    return (3 * delta + 1) // 2


def luzar_bound(delta: int) -> int:
    if delta < 1:
        raise BoundError(f"luzar bound needs delta >= 1, got {delta}")
    if delta <= 3:
        return 5
    if delta <= 7:
        return delta + 5
    return 3 * delta // 2 + 1


def la_storgel_bound(delta: int) -> int:
    """Bound for girth at least 4."""
    if delta < 3:
        raise BoundError(f"la-storgel bound needs delta >= 3, got {delta}")
    if delta == 3:
        return 4
    if delta <= 5:
        return delta + 2
    return 3 * delta // 2


def girth5_bound(delta: int) -> int:
    """``delta + 1``; only the per-graph comparison, no claim about the threshold."""
    if delta < 1:
        raise BoundError(f"girth-5 bound needs delta >= 1, got {delta}")
    return delta + 1


@dataclass(frozen=True)
class BoundFn:
    """A named bound together with the (delta, girth) region where it is claimed.

    ``min_delta`` is the smallest degree inside the stated domain; graphs below
    it are vacuous rather than in scope.
    """

    name: str
    fn: Callable[[int], int]
    min_delta: int
    min_girth: int = 3

    def __call__(self, delta: int) -> int:
        return self.fn(delta)

    def girth_ok(self, g_girth: float) -> bool:
        return g_girth >= self.min_girth

    def applicable(self, delta: int, g_girth: float) -> bool:
        return delta >= self.min_delta and self.girth_ok(g_girth)


BOUNDS: dict[str, BoundFn] = {
    "chen": BoundFn("chen", chen_bound, 3),
    "luzar": BoundFn("luzar", luzar_bound, 1),
    "la-storgel": BoundFn("la-storgel", la_storgel_bound, 3, min_girth=4),
    "girth5": BoundFn("girth5", girth5_bound, 1, min_girth=5),
}


def get_bound(name: str) -> BoundFn:
    try:
        return BOUNDS[name]
    except KeyError:
        raise BoundError(f"unknown bound {name!r}; choose from {sorted(BOUNDS)}") from None


class VerdictKind(enum.Enum):
    SATISFIES = "satisfies"
    ATTAINS = "attains"
    VIOLATES = "violates"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    chi_i: int | None
    bound: int | None
    vacuous: bool = False

    @property
    def attains(self) -> bool:
        return self.kind is VerdictKind.ATTAINS

    @property
    def violates(self) -> bool:
        return self.kind is VerdictKind.VIOLATES


def _compare(chi_i: int, b: int) -> VerdictKind:
    if chi_i > b:
        return VerdictKind.VIOLATES
    if chi_i == b:
        return VerdictKind.ATTAINS
    return VerdictKind.SATISFIES


def verdict(g: Graph, bound: BoundFn | str, chi_i: int, strict: bool = False,
            delta: int | None = None, g_girth: float | None = None) -> Verdict:
    """Compare ``chi_i`` against ``bound`` evaluated at the maximum degree of ``g``.

    A graph whose girth is too small for the bound is an error.  A graph below
    the bound's degree domain is reported as a vacuous Satisfies, or rejected
    when ``strict`` is set.
    """
    if isinstance(bound, str):
        bound = get_bound(bound)
    if delta is None:
        delta = g.max_degree()
    if g_girth is None:
        g_girth = _girth(g)
    if not bound.girth_ok(g_girth):
        shown = "inf" if math.isinf(g_girth) else int(g_girth)
        raise BoundError(f"{bound.name} bound needs girth >= {bound.min_girth}, graph has girth {shown}")
    if delta < bound.min_delta:
        if strict:
            raise BoundError(f"{bound.name} bound is stated for delta >= {bound.min_delta}, graph has delta {delta}")
        return Verdict(VerdictKind.SATISFIES, chi_i, None, vacuous=True)
    b = bound(delta)
    return Verdict(_compare(chi_i, b), chi_i, b)
