"""Stability verdicts.

A verdict is a tag plus a human-readable reason.  ``Stable``, ``Semistable``,
``StrictlySemistable`` and ``Unstable`` form the slope-stability ladder;
``Balanced`` is the genus-zero analogue (splitting-type gaps instead of
slopes) and ``NotApplicable`` is the refusal tag.  A witness is attached only
when something destabilizes, so its presence alone signals bad news.

``Semistable`` is a lower bound ("at least semistable"), whereas
``StrictlySemistable`` pins the bundle down as semistable but not stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class StabilityTag(str, Enum):
    STABLE = "Stable"
    SEMISTABLE = "Semistable"
    STRICTLY_SEMISTABLE = "StrictlySemistable"
    UNSTABLE = "Unstable"
    BALANCED = "Balanced"
    NOT_APPLICABLE = "NotApplicable"


_BADNESS = {
    StabilityTag.STABLE: 0,
    StabilityTag.SEMISTABLE: 1,
    StabilityTag.STRICTLY_SEMISTABLE: 2,
    StabilityTag.UNSTABLE: 3,
}

_WITNESS_TAGS = frozenset({StabilityTag.STRICTLY_SEMISTABLE, StabilityTag.UNSTABLE})

_AT_LEAST_SEMISTABLE = frozenset(
    {StabilityTag.STABLE, StabilityTag.SEMISTABLE, StabilityTag.STRICTLY_SEMISTABLE}
)


@dataclass(frozen=True, slots=True)
class StabilityVerdict:
    tag: StabilityTag
    reason: str
    witness: object | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.tag, StabilityTag):
            raise TypeError(f"tag must be a StabilityTag, got {self.tag!r}")
        if self.witness is not None and self.tag not in _WITNESS_TAGS:
            raise ValueError(f"witness not allowed for tag {self.tag.value}")

    @property
    def badness(self) -> int:
        """Position on the stability ladder; smaller is better.

        Only defined for the four slope-stability tags.
        """
        try:
            return _BADNESS[self.tag]
        except KeyError:
            raise ValueError(f"{self.tag.value} is not on the stability ladder") from None

    @property
    def at_least_semistable(self) -> bool:
        return self.tag in _AT_LEAST_SEMISTABLE
