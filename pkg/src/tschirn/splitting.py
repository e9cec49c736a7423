"""Splitting types of bundles on the projective line.

Every bundle on the line splits as a direct sum of line bundles, so a bundle
is just its multiset of degrees, kept here as a non-increasing tuple.  The
genus-zero analogue of semistability is balancedness: the degrees spread by
at most one.

``general_p1_splitting`` computes the splitting type of the cover bundle for
a general degree-r, genus-g cover of the line by a degeneration recursion,
then cross-checks the result against the closed form; disagreement is an
internal error, not a value.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DegenerateRank,
    NeitherPerfectlyBalanced,
    NoSuchCover,
    RankMismatch,
)


@dataclass(frozen=True, slots=True)
class SplittingType:
    """Degrees of the line-bundle summands, sorted non-increasingly."""

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.degrees:
            raise ValueError("a splitting type needs at least one summand")
        if any(self.degrees[i] < self.degrees[i + 1] for i in range(len(self.degrees) - 1)):
            object.__setattr__(self, "degrees", tuple(sorted(self.degrees, reverse=True)))

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def total_degree(self) -> int:
        return sum(self.degrees)

    def __str__(self) -> str:
        return "(" + ", ".join(str(d) for d in self.degrees) + ")"


def is_balanced(t: SplittingType) -> bool:
    return t.degrees[0] - t.degrees[-1] <= 1


def is_perfectly_balanced(t: SplittingType) -> bool:
    return t.degrees[0] == t.degrees[-1]


def balanced_type(rank: int, degree: int) -> SplittingType:
    """The unique balanced type of the given rank and total degree."""
    if rank < 1:
        raise DegenerateRank(f"rank must be positive, got {rank}")
    q, rem = divmod(degree, rank)
    return SplittingType((q + 1,) * rem + (q,) * (rank - rem))


def generic_negative_modification(t: SplittingType) -> SplittingType:
    """Drop the total degree by one at a general point.

    A general negative elementary modification lowers a maximal summand (ties
    broken toward the first).  Balanced in, balanced out.
    """
    lowered = (t.degrees[0] - 1,) + t.degrees[1:]
    result = SplittingType(lowered)
    assert result.total_degree == t.total_degree - 1, "modification must drop degree by 1"
    return result


def glue_deform(a: SplittingType, b: SplittingType) -> SplittingType:
    """Combine the splitting types on the two sides of a one-nodal target.

    Moving the bundle across the node twists one side by the other; that is
    only a single splitting type when the twisting side is perfectly
    balanced, in which case the result is an entrywise shift.  Requests where
    neither side is perfectly balanced are refused rather than guessed at.
    """
    if a.rank != b.rank:
        raise RankMismatch(f"ranks differ: {a.rank} vs {b.rank}")
    if is_perfectly_balanced(b):
        shift = b.degrees[0]
        return SplittingType(tuple(d + shift for d in a.degrees))
    if is_perfectly_balanced(a):
        shift = a.degrees[0]
        return SplittingType(tuple(d + shift for d in b.degrees))
    raise NeitherPerfectlyBalanced(f"neither {a} nor {b} is perfectly balanced")


def _split_by_degeneration(r: int, g: int) -> SplittingType:
    """Recursive splitting type via degeneration to a two-component line.

    A genus-g degree-r cover of the line has 2*(g + r - 1) branch points.
    Specialize so that 2r - 2 of them sit over one component; the cover of
    that component is general rational with a perfectly balanced type of all
    -1's.  The remaining 2g branch points sit over the other component:

    * g == 0: nothing remains, base case, type (-1, ..., -1);
    * g >= r - 1: enough branch points for a connected general cover of the
      other component, recurse with genus g - (r - 1);
    * 0 < g < r - 1: the cover of the other component degenerates further to
      a disconnected one, a general rational piece of degree g + 1 carrying
      all 2g branch points plus r - g - 1 components mapping isomorphically,
      contributing g summands of degree -1 and r - g - 1 zeros.

    Crossing the node shifts every summand by the perfectly balanced side.
    """
    if g == 0:
        return SplittingType((-1,) * (r - 1))
    if g >= r - 1:
        inner = _split_by_degeneration(r, g - (r - 1))
    else:
        piece_degree = g + 1
        inner = SplittingType((0,) * (r - piece_degree) + (-1,) * (piece_degree - 1))
    return glue_deform(inner, SplittingType((-1,) * (r - 1)))


def general_p1_splitting(r: int, g: int) -> SplittingType:
    """Splitting type of the cover bundle for a general genus-g degree-r cover.

    Computed by the degeneration recursion and by the balanced closed form;
    the two must agree, and the common value is returned.  The result is
    balanced of rank r - 1 and total degree -(g + r - 1).
    """
    if r < 2:
        raise DegenerateRank(f"need degree >= 2, got {r}")
    if g < 0:
        raise NoSuchCover(f"genus must be non-negative, got {g}")
    recursive = _split_by_degeneration(r, g)
    closed = balanced_type(r - 1, -(g + r - 1))
    if recursive != closed:
        raise RuntimeError(
            f"degeneration recursion {recursive} disagrees with closed form {closed}"
        )
    return recursive
