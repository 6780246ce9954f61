"""Numeric genus and gonality bounds for curves with many maps to the line.

Everything here is exact integer or rational arithmetic; no floats enter
any certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import DomainError, ValidationError

OBSTRUCTED = "obstructed"
NOT_OBSTRUCTED = "not_obstructed"
UNKNOWN = "unknown"

# verdicts an action predicate may return
ACTS = "yes"
NO_ACTION = "no"


@dataclass(frozen=True)
class CastelnuovoInput:
    """Degrees and genera of two maps out of one curve: f_i: C -> D_i of
    degree n_i with g(D_i) = g_i, where (f_1, f_2) is birational onto its
    image."""

    n1: int
    g1: int
    n2: int
    g2: int

    def __post_init__(self):
        if self.n1 < 1 or self.n2 < 1:
            raise ValidationError("map degrees must be at least 1")
        if self.g1 < 0 or self.g2 < 0:
            raise ValidationError("genera must be nonnegative")


def castelnuovo_bound(inp: CastelnuovoInput) -> int:
    """Castelnuovo's inequality: g(C) <= n1*g1 + n2*g2 + (n1-1)(n2-1)."""
    return inp.n1 * inp.g1 + inp.n2 * inp.g2 + (inp.n1 - 1) * (inp.n2 - 1)


def tower_genus_bound(n: int, m: int) -> Fraction:
    """The bound n^2/m - 3n + nm + 1 on the genus of a curve whose function
    field is generated by degree-n functions through an index-m subfield.

    Requires m | n; the value is then an integer, returned as an exact
    Fraction.  Its maximum over divisors is (n-1)^2, attained at m in {1, n}.
    """
    if n < 2:
        raise DomainError(f"defined for n >= 2, got {n}")
    if m < 1 or n % m != 0:
        raise DomainError(f"{m} does not divide {n}")
    return Fraction(n * n, m) - 3 * n + n * m + 1


def riemann_genus_cap(n: int) -> int:
    """(n-1)^2: the genus cap for a curve generated by degree-n functions."""
    if n < 1:
        raise ValidationError(f"need n >= 1, got {n}")
    return (n - 1) ** 2


def hurwitz_min_genus(order: int) -> int:
    """Least genus g >= 2 *not* excluded by the Hurwitz bound, i.e. the least
    g >= 2 with order <= 84(g-1).

    A group of the given order acting faithfully on a curve of genus >= 2
    forces the Hurwitz inequality, so every genus in [2, result) is excluded.
    """
    if order < 2:
        raise ValidationError(f"need order >= 2, got {order}")
    return max(2, -(-(order + 84) // 84))  # ceil((order + 84) / 84)


def gonality_obstruction(
    order: int,
    n: int,
    acts_on_genus_le: Callable[[int], str],
) -> str:
    """Whether a faithful curve for a group of this order can be barred from
    having a degree-n map to the line.

    Returns "obstructed" when order does not divide n and the injected
    predicate certifies there is no nontrivial action on any curve of genus
    <= (n-1)^2; "not_obstructed" when the divisibility or action hypothesis
    fails; "unknown" when the predicate cannot decide.  The predicate is
    injected because deciders of different strength exist (genus<=1 rule,
    Hurwitz floor, exhaustive branch-data search) and the certifier chooses.
    """
    if n < 1:
        raise ValidationError(f"need n >= 1, got {n}")
    if n % order == 0:
        return NOT_OBSTRUCTED
    verdict = acts_on_genus_le(riemann_genus_cap(n))
    if verdict == NO_ACTION:
        return OBSTRUCTED
    if verdict == ACTS:
        return NOT_OBSTRUCTED
    return UNKNOWN
