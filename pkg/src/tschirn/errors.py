"""Exception taxonomy shared by every module.

All domain failures derive from :class:`TschirnError` so callers (and the
command line front end) can distinguish "the input describes something that
does not exist" from programming errors.
"""

from __future__ import annotations


class TschirnError(Exception):
    """Base class for all domain errors raised by this package."""


# ---------------------------------------------------------------- permutations


class MalformedCycle(TschirnError):
    """Cycle notation that does not parse (unbalanced parens, short cycle, ...)."""


class LabelOutOfRange(TschirnError):
    """A cycle label is not in 1..degree."""


class DuplicateLabel(TschirnError):
    """A label appears twice in a disjoint-cycle expression."""


class DegreeTooLarge(TschirnError):
    """Permutation degree exceeds the configured cap."""


class OrderExceedsCap(TschirnError):
    """Group order is too large for element enumeration.

    The exact order (computed from the stabilizer chain) is attached so the
    caller can report it or retry with a bigger cap.
    """

    def __init__(self, order: int, cap: int):
        super().__init__(f"group order {order} exceeds enumeration cap {cap}")
        self.order = order
        self.cap = cap


# ---------------------------------------------------------------- group families


class InvalidDegree(TschirnError):
    """A family parameter outside the family's domain (e.g. cyclic of degree 0)."""


class NotPrimePower(TschirnError):
    """A field size that is not p**k for a prime p."""


class CapExceeded(TschirnError):
    """A field-based family parameter above the configured size cap."""


# ---------------------------------------------------------------- stability


class IntransitiveGroup(TschirnError):
    """Monodromy group does not act transitively, so no connected cover exists."""


class NoSuchCover(TschirnError):
    """Numerical invariants that violate the branch-count ledger."""


class DegenerateRank(TschirnError):
    """Degree-1 covers carry a rank-0 bundle; slopes are undefined."""


class TrivialFactorization(TschirnError):
    """A claimed factorization through a degree-1 intermediate cover."""


# ---------------------------------------------------------------- splitting types


class RankMismatch(TschirnError):
    """Two splitting types of different ranks where equal ranks are required."""


class NeitherPerfectlyBalanced(TschirnError):
    """Gluing deformation needs one perfectly balanced side; neither qualifies."""


# ---------------------------------------------------------------- gluing data


class InvalidPair(TschirnError):
    """A sheet-identification pair with an index out of range or equal entries."""


class DisconnectedResult(TschirnError):
    """Sheet identifications that leave the glued source curve disconnected."""


# ---------------------------------------------------------------- certificates


class EmptyHurwitzSpace(TschirnError):
    """No branch points at all: the cover is unramified and needs no certificate."""


class SchemaViolation(TschirnError):
    """A certificate document that does not match the serialization schema.

    ``path`` locates the offending element, JSON-pointer style ("/root/left/b").
    """

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path or '<document>'}: {message}")
        self.path = path
