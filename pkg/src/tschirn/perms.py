"""Permutations, permutation groups, and exact group orders.

Permutations act on 0-based points internally; the text formats (cycle
notation, image lists) are 1-based as usual.  Composition is right-to-left:
``(p * q)(i) = p(q(i))``.

Group orders come from a deterministic stabilizer-chain (base and strong
generating set) computation, so they are exact even when the group is far too
large to enumerate.  Element enumeration and orbit counting go through the
kernels in ``_kernels`` (compiled when available).
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from math import prod

from . import _kernels
from .errors import (
    DegreeTooLarge,
    DuplicateLabel,
    LabelOutOfRange,
    MalformedCycle,
    OrderExceedsCap,
)

DEFAULT_DEGREE_CAP = 10_000
DEFAULT_ENUM_CAP = 1_000_000

ImageTuple = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class Permutation:
    """A bijection of {0, ..., degree-1}, stored as its image tuple."""

    images: ImageTuple

    def __post_init__(self) -> None:
        n = len(self.images)
        if n == 0:
            raise ValueError("a permutation needs at least one point")
        if sorted(self.images) != list(range(n)):
            raise ValueError(f"not a bijection of 0..{n - 1}: {self.images}")

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        """``self`` after ``other``."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        o = other.images
        s = self.images
        return Permutation(tuple(s[o[i]] for i in range(len(s))))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def fixed_point_count(self) -> int:
        return sum(1 for i, j in enumerate(self.images) if i == j)

    def cycle_string(self) -> str:
        """Disjoint-cycle notation with 1-based labels; "()" for the identity."""
        seen = [False] * len(self.images)
        parts = []
        for start in range(len(self.images)):
            if seen[start] or self.images[start] == start:
                seen[start] = True
                continue
            cyc = [start]
            seen[start] = True
            nxt = self.images[start]
            while nxt != start:
                cyc.append(nxt)
                seen[nxt] = True
                nxt = self.images[nxt]
            parts.append("(" + " ".join(str(c + 1) for c in cyc) + ")")
        return "".join(parts) if parts else "()"


def fixed_point_count(p: Permutation) -> int:
    return p.fixed_point_count()


# ------------------------------------------------------------------ parsing

_CYCLE_BODY = re.compile(r"\(([^()]*)\)")


def perm_from_cycles(text: str, degree: int) -> Permutation:
    """Parse a disjoint-cycle expression like ``(1 2 3)(4 5)``.

    Labels are 1-based and every cycle needs at least two of them; an empty
    expression (or pure whitespace, or the literal ``()``-free empty string)
    is the identity.  Labels outside 1..degree and repeated labels are
    rejected with their own error types so callers can report precisely.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    images = list(range(degree))
    used: set[int] = set()
    remainder = _CYCLE_BODY.sub("", text)
    if remainder.strip():
        raise MalformedCycle(f"stray text outside cycles: {remainder.strip()!r}")
    for match in _CYCLE_BODY.finditer(text):
        tokens = match.group(1).split()
        if len(tokens) < 2:
            raise MalformedCycle(f"cycle {match.group(0)!r} needs at least two labels")
        labels = []
        for tok in tokens:
            try:
                label = int(tok, 10)
            except ValueError:
                raise MalformedCycle(f"not an integer label: {tok!r}") from None
            if not 1 <= label <= degree:
                raise LabelOutOfRange(f"label {label} outside 1..{degree}")
            if label - 1 in used:
                raise DuplicateLabel(f"label {label} appears twice")
            used.add(label - 1)
            labels.append(label - 1)
        for src, dst in zip(labels, labels[1:] + labels[:1]):
            images[src] = dst
    return Permutation(tuple(images))


def perm_from_image_text(text: str) -> Permutation:
    """Parse the comma-separated 1-based image-list format, e.g. ``2,3,1``."""
    tokens = [t.strip() for t in text.split(",")]
    try:
        images = tuple(int(t, 10) - 1 for t in tokens)
    except ValueError:
        raise MalformedCycle(f"not an image list: {text!r}") from None
    try:
        return Permutation(images)
    except ValueError:
        raise MalformedCycle(f"images are not a bijection: {text!r}") from None


def perm_to_image_text(p: Permutation) -> str:
    return ",".join(str(i + 1) for i in p.images)


# ------------------------------------------------------------------ groups


class PermGroup:
    """A permutation group given by generators of a common degree.

    The instance is immutable; the stabilizer chain and the order are cached
    after the first computation, behind a lock so concurrent readers always
    observe either nothing or a fully built value.
    """

    def __init__(self, generators, degree: int | None = None):
        gens = tuple(generators)
        if not gens:
            raise ValueError("at least one generator is required")
        degrees = {g.degree for g in gens}
        if len(degrees) != 1:
            raise ValueError(f"generators have mixed degrees: {sorted(degrees)}")
        (common,) = degrees
        if degree is not None and degree != common:
            raise ValueError(f"declared degree {degree} != generator degree {common}")
        self.degree: int = common
        self.generators: tuple[Permutation, ...] = gens
        self._lock = threading.Lock()
        self._order: int | None = None
        self._chain: list[_ChainLevel] | None = None

    def __repr__(self) -> str:
        gens = ", ".join(g.cycle_string() for g in self.generators)
        return f"PermGroup(degree={self.degree}, gens=[{gens}])"

    def raw_generators(self) -> list[ImageTuple]:
        return [g.images for g in self.generators]

    def _ensure_chain(self) -> list[_ChainLevel]:
        with self._lock:
            if self._chain is None:
                self._chain = _build_chain(self.raw_generators(), self.degree)
                self._order = prod(len(lv.transversal) for lv in self._chain)
            return self._chain

    def order(self, degree_cap: int = DEFAULT_DEGREE_CAP) -> int:
        return group_order(self, degree_cap)


# Stabilizer chain internals.  Raw image tuples only; Permutation wrappers
# would dominate the runtime here.


def _compose(p: ImageTuple, q: ImageTuple) -> ImageTuple:
    """p after q."""
    return tuple(p[i] for i in q)


def _invert(p: ImageTuple) -> ImageTuple:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


class _ChainLevel:
    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point: int, gens: list[ImageTuple]):
        self.point = point
        self.gens = gens
        self.transversal: dict[int, ImageTuple] = {}


def _recompute_transversal(level: _ChainLevel, identity: ImageTuple) -> None:
    level.transversal = {level.point: identity}
    queue = [level.point]
    qi = 0
    while qi < len(queue):
        a = queue[qi]
        qi += 1
        rep = level.transversal[a]
        for s in level.gens:
            b = s[a]
            if b not in level.transversal:
                level.transversal[b] = _compose(s, rep)
                queue.append(b)


def _sift(chain: list[_ChainLevel], start: int, g: ImageTuple) -> tuple[ImageTuple, int]:
    """Strip ``g`` through the chain from ``start`` down.

    Returns the residue and the level index at which stripping stopped
    (``len(chain)`` when it ran all the way through).
    """
    for idx in range(start, len(chain)):
        level = chain[idx]
        rep = level.transversal.get(g[level.point])
        if rep is None:
            return g, idx
        g = _compose(_invert(rep), g)
    return g, len(chain)


def _verify_level(chain: list[_ChainLevel], idx: int, identity: ImageTuple) -> int | None:
    """Recompute the level's transversal and test its Schreier generators.

    Returns ``None`` when every Schreier generator sifts to the identity
    through the deeper levels.  Otherwise the residue is installed as a new
    strong generator on every level it fixes a prefix for (creating a level
    when it survives the whole chain) and the index of the deepest changed
    level is returned.  Orbit points and generators are walked in a fixed
    order, so the whole construction is deterministic.
    """
    level = chain[idx]
    _recompute_transversal(level, identity)
    for b in sorted(level.transversal):
        rep_b = level.transversal[b]
        for s in level.gens:
            rep_sb_inv = _invert(level.transversal[s[b]])
            schreier = _compose(rep_sb_inv, _compose(s, rep_b))
            if schreier == identity:
                continue
            residue, stuck = _sift(chain, idx + 1, schreier)
            if residue == identity:
                continue
            if stuck == len(chain):
                new_point = next(i for i, j in enumerate(residue) if i != j)
                chain.append(_ChainLevel(new_point, []))
            for lower in range(idx + 1, stuck + 1):
                chain[lower].gens.append(residue)
            return stuck
    return None


def _build_chain(raw_gens: list[ImageTuple], degree: int) -> list[_ChainLevel]:
    """Deterministic Schreier-Sims.

    Each level's generator list is cumulative: it holds every strong
    generator fixing the base prefix above it, not just the ones first
    discovered there.  Verification walks from the deepest level back to the
    top and restarts from whichever level a new strong generator lands on,
    so by the end every level's orbit is taken under its full stabilizer.
    """
    identity = tuple(range(degree))
    gens: list[ImageTuple] = []
    for g in raw_gens:
        if g != identity and g not in gens:
            gens.append(g)
    if not gens:
        return []
    first = min(i for g in gens for i, j in enumerate(g) if i != j)
    chain = [_ChainLevel(first, gens)]
    idx = 0
    while idx >= 0:
        changed = _verify_level(chain, idx, identity)
        idx = idx - 1 if changed is None else changed
    return chain


def group_order(G: PermGroup, degree_cap: int = DEFAULT_DEGREE_CAP) -> int:
    """Exact order, as the product of orbit sizes along the stabilizer chain."""
    if G.degree > degree_cap:
        raise DegreeTooLarge(f"degree {G.degree} exceeds cap {degree_cap}")
    G._ensure_chain()
    assert G._order is not None
    return G._order


def enumerate_elements(G: PermGroup, cap: int) -> list[Permutation]:
    """Every element exactly once, sorted lexicographically by image tuple.

    The order is computed first (cheaply, from the stabilizer chain); if it
    exceeds ``cap`` the enumeration is refused with the order attached.
    """
    order = group_order(G)
    if order > cap:
        raise OrderExceedsCap(order, cap)
    raw = _kernels.closure_elements(G.raw_generators(), G.degree, order)
    raw.sort()
    return [Permutation(images) for images in raw]


def orbit_count_points(G: PermGroup) -> int:
    """Number of orbits on points."""
    n = G.degree
    gens = G.raw_generators()
    seen = bytearray(n)
    orbits = 0
    for start in range(n):
        if seen[start]:
            continue
        orbits += 1
        seen[start] = 1
        stack = [start]
        while stack:
            a = stack.pop()
            for s in gens:
                b = s[a]
                if not seen[b]:
                    seen[b] = 1
                    stack.append(b)
    return orbits


def orbit_count_ordered_pairs(G: PermGroup) -> int:
    """Number of orbits on ordered pairs, diagonal included.

    Runs in O(degree^2 * generators) regardless of the group order, so it
    stays usable where element enumeration is hopeless.
    """
    return _kernels.pair_orbit_count(G.raw_generators(), G.degree)


def is_transitive(G: PermGroup) -> bool:
    return orbit_count_points(G) == 1
