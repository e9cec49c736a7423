"""Stability of unramified covers via the monodromy representation.

For an unramified (etale) connected cover, the bundle of interest is the
quotient of the pushforward by its trivial summand, and its geometry is
controlled entirely by the restriction of the standard representation to the
monodromy group G: the bundle is always semistable, and it is stable exactly
when that restriction is irreducible.

Irreducibility is decided two independent ways and cross-checked:

* character side: sum over G of (fixed points)^2 equals 2|G|;
* orbit side: G has exactly two orbits on ordered pairs of points.

The two sides agree for every finite permutation group (a Burnside count),
so a disagreement aborts loudly instead of returning anything.  When the
group is too large to enumerate, only the orbit side is used and the verdict
says so.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import _kernels
from .errors import IntransitiveGroup, OrderExceedsCap
from .perms import (
    DEFAULT_ENUM_CAP,
    PermGroup,
    group_order,
    is_transitive,
    orbit_count_ordered_pairs,
)
from .verdicts import StabilityTag, StabilityVerdict


def character_sum(G: PermGroup, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Exact sum over all group elements of the squared fixed-point count."""
    order = group_order(G)
    if order > cap:
        raise OrderExceedsCap(order, cap)
    found, _, fix_sq = _kernels.fixed_point_stats(G.raw_generators(), G.degree, order)
    assert found == order, "closure disagrees with the stabilizer chain"
    return fix_sq


@dataclass(frozen=True, slots=True)
class IrreducibilityEvidence:
    order: int
    pair_orbit_count: int
    char_sum: int | None
    irreducible: bool

    @property
    def dual_oracle(self) -> bool:
        return self.char_sum is not None


def _gather_evidence(G: PermGroup, cap: int) -> IrreducibilityEvidence:
    if not is_transitive(G):
        raise IntransitiveGroup(
            "the group is intransitive; it is not the monodromy of a connected cover"
        )
    order = group_order(G)
    pairs = orbit_count_ordered_pairs(G)
    cs: int | None = None
    if order <= cap:
        cs = character_sum(G, cap)
        if (cs == 2 * order) != (pairs == 2):
            raise RuntimeError(
                f"oracle disagreement: char sum {cs} vs 2|G| = {2 * order}, "
                f"pair orbits {pairs}"
            )
    return IrreducibilityEvidence(
        order=order, pair_orbit_count=pairs, char_sum=cs, irreducible=pairs == 2
    )


def standard_rep_irreducible(G: PermGroup, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """Whether the standard representation restricted to G is irreducible.

    Equivalent to 2-transitivity for transitive G.  Both oracles run when the
    order permits; they must agree.
    """
    return _gather_evidence(G, cap).irreducible


def etale_stability(G: PermGroup, cap: int = DEFAULT_ENUM_CAP) -> StabilityVerdict:
    """Verdict for the bundle of an unramified cover with monodromy G.

    Never ``Unstable``: unramified covers are always at least semistable.
    """
    ev = _gather_evidence(G, cap)
    if ev.dual_oracle:
        oracle_note = (
            f"character sum {ev.char_sum} == 2|G| = {2 * ev.order}"
            if ev.irreducible
            else f"character sum {ev.char_sum} > 2|G| = {2 * ev.order}"
        )
    else:
        oracle_note = f"single-oracle: order {ev.order} exceeds enumeration cap {cap}"
    if ev.irreducible:
        return StabilityVerdict(
            tag=StabilityTag.STABLE,
            reason=(
                "standard representation restricts irreducibly "
                f"(2 orbits on ordered pairs; {oracle_note})"
            ),
        )
    return StabilityVerdict(
        tag=StabilityTag.STRICTLY_SEMISTABLE,
        reason=(
            "standard representation restricts reducibly "
            f"({ev.pair_orbit_count} orbits on ordered pairs; {oracle_note})"
        ),
        witness={"pair_orbit_count": ev.pair_orbit_count},
    )


def etale_evidence(G: PermGroup, cap: int = DEFAULT_ENUM_CAP) -> IrreducibilityEvidence:
    """The raw numbers behind :func:`etale_stability`, for reporting."""
    return _gather_evidence(G, cap)


# ------------------------------------------------------- cyclic diagonal data


@dataclass(frozen=True, slots=True)
class DiagonalDatum:
    """A sheet identification for a degree-r cyclic cover.

    ``sheet_a`` and ``sheet_b`` are the two sheets (residues mod r) glued at
    a point; the interesting quantity is only their difference mod r.
    """

    r: int
    sheet_a: int
    sheet_b: int

    def __post_init__(self) -> None:
        if self.r < 2:
            raise ValueError(f"need degree >= 2, got {self.r}")
        for s in (self.sheet_a, self.sheet_b):
            if not 0 <= s < self.r:
                raise ValueError(f"sheet index {s} outside 0..{self.r - 1}")
        if self.sheet_a == self.sheet_b:
            raise ValueError("the two sheets must differ")


def cyclic_diagonal_subreps(datum: DiagonalDatum) -> tuple[int, ...]:
    """Nontrivial character indices whose eigenline survives the identification.

    For the cyclic group of order r the standard representation splits into
    the eigenlines of the nontrivial characters j = 1..r-1.  A sub-sum of
    eigenlines sits inside the diagonal glued along sheets (a, b) exactly for
    the indices j with j*(a - b) == 0 mod r; the maximal such character
    subset is returned, sorted.  Empty iff gcd(a - b, r) == 1 -- pure residue
    arithmetic, no matrices anywhere.
    """
    diff = (datum.sheet_a - datum.sheet_b) % datum.r
    return tuple(j for j in range(1, datum.r) if (j * diff) % datum.r == 0)


def diagonal_is_clean(datum: DiagonalDatum) -> bool:
    diff = (datum.sheet_a - datum.sheet_b) % datum.r
    return gcd(diff, datum.r) == 1
