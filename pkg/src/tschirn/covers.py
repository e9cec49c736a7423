"""Numerical invariants of branched covers.

Everything here is bookkeeping around one identity: for a degree-r cover of
curves with source genus g, target genus h and b simple branch points,

    g - 1 = r*(h - 1) + b/2.

The associated bundle (dual of the quotient of the pushforward by its trivial
summand) has rank r - 1 and degree -b/2; its slope is kept as an exact
fraction and never touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateRank, NoSuchCover, TrivialFactorization
from .verdicts import StabilityTag, StabilityVerdict

# Slopes are exact reduced rationals; the stdlib type already compares by
# cross-multiplication, which is all the stability checks need.
Slope = Fraction


def branch_count(r: int, g: int, h: int) -> int:
    """Number of simple branch points forced by the genus bookkeeping.

    Negative counts mean no such cover exists.  The count is always even by
    construction; checked anyway as a tripwire.
    """
    if r < 1:
        raise NoSuchCover(f"cover degree must be positive, got {r}")
    b = 2 * g - 2 - r * (2 * h - 2)
    if b < 0:
        raise NoSuchCover(f"no degree-{r} cover of genus {h} by genus {g}: b = {b} < 0")
    if b % 2 != 0:
        raise RuntimeError(f"branch count {b} is odd; the ledger is broken")
    return b


@dataclass(frozen=True, slots=True)
class CoverNumerics:
    """A plain record; use :func:`cover_numerics` for the validated path."""

    r: int
    g: int
    h: int
    b: int
    tsch_rank: int
    tsch_degree: int
    slope: Slope


def cover_numerics(r: int, g: int, h: int) -> CoverNumerics:
    """The full invariant ledger for a degree-r genus-g cover of a genus-h curve."""
    if r == 1:
        raise DegenerateRank("degree-1 covers carry a rank-0 bundle; no slope exists")
    b = branch_count(r, g, h)
    rank = r - 1
    degree = -(b // 2)
    return CoverNumerics(
        r=r,
        g=g,
        h=h,
        b=b,
        tsch_rank=rank,
        tsch_degree=degree,
        slope=Fraction(degree, rank),
    )


def slope_of(degree: int, rank: int) -> Slope:
    if rank <= 0:
        raise DegenerateRank(f"rank must be positive, got {rank}")
    return Fraction(degree, rank)


def factorization_instability(r1: int, r2: int, branched: bool) -> StabilityVerdict:
    """Instability from a factorization through an intermediate cover.

    A branched cover that factors as a degree-r1 cover after a degree-r2
    cover (both at least 2) pushes a destabilizing subbundle into the
    composite whenever any actual branching happens.  Without branching
    nothing is forced here and the verdict defers to the unramified analysis.
    """
    if r1 < 2 or r2 < 2:
        raise TrivialFactorization(f"both factors must have degree >= 2, got {r1}, {r2}")
    if branched:
        return StabilityVerdict(
            tag=StabilityTag.UNSTABLE,
            reason=(
                f"factors through intermediate covers of degrees {r1} and {r2} "
                "with branching; the pulled-back subbundle destabilizes"
            ),
            witness={"factor_degrees": (r1, r2)},
        )
    return StabilityVerdict(
        tag=StabilityTag.NOT_APPLICABLE,
        reason="unbranched factorization forces nothing; use the unramified criterion",
    )


def destabilizer_scan(r: int, g: int) -> tuple[tuple[int, int], ...]:
    """Scan for destabilizing (rank, degree) pairs of a genus-1 gluing ledger.

    A destabilizing subbundle of rank k in 1..r-2 would need a degree d that
    is a nonzero multiple of g (the degree is divisible by g for these glued
    covers) and satisfies the strict slope window

        -g < (r - 1) * d / k < 0.

    The window forces |d| < g, so no multiple of g fits and the scan comes
    back empty; the enumeration is still performed honestly, and a hit would
    mean the surrounding theory is broken, so it aborts rather than returns.
    """
    if r < 2:
        raise DegenerateRank(f"need degree >= 2, got {r}")
    if g < 1:
        raise NoSuchCover(f"need at least one identification, got g = {g}")
    hits: list[tuple[int, int]] = []
    for k in range(1, r - 1):
        # d = -m*g; the window needs (r-1)*m*g < g*k, so m < k and m <= k
        # bounds the search.
        for m in range(1, k + 1):
            d = -m * g
            value = Fraction((r - 1) * d, k)
            if -g < value < 0:
                hits.append((k, d))
    if hits:
        raise RuntimeError(f"destabilizer window should be empty, found {hits}")
    return ()
