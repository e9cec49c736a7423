"""Independent oracles used by the test suite.

Everything here deliberately avoids the library's own algorithms: closure is
computed by pairwise-product fixpoint rather than generator BFS, orbit counts
act with the full element list rather than generators, and subrepresentation
membership is decided by direct modular enumeration.  Keep these slow and
obvious.
"""

from __future__ import annotations

import copy
import math
import random


def naive_closure(raw_gens, degree):
    """All elements of the generated group, as image tuples.

    Repeatedly multiplies every pair of known elements until nothing new
    appears.  Quadratic per round, so only use this on groups with at most
    a few hundred elements.
    """
    identity = tuple(range(degree))
    known = {identity}
    known.update(tuple(g) for g in raw_gens)
    while True:
        fresh = set()
        for a in known:
            for b in known:
                c = tuple(a[i] for i in b)
                if c not in known:
                    fresh.add(c)
        if not fresh:
            return known
        known.update(fresh)


def orbit_count_via_elements(elements, degree, arity):
    """Number of orbits of ordered `arity`-tuples under the full element list.

    Computes each orbit explicitly by applying every group element, then
    counts distinct orbits.  Independent of any generator-based search.
    """
    import itertools

    seen = set()
    orbits = 0
    for point in itertools.product(range(degree), repeat=arity):
        if point in seen:
            continue
        orbits += 1
        for g in elements:
            seen.add(tuple(g[i] for i in point))
    return orbits


def fixed_point_sums(elements, degree):
    """(sum of fixed-point counts, sum of squared fixed-point counts)."""
    total = 0
    total_sq = 0
    for g in elements:
        f = sum(1 for i in range(degree) if g[i] == i)
        total += f
        total_sq += f * f
    return total, total_sq


def diagonal_subreps_by_enumeration(r, sheet_a, sheet_b):
    """Characters j with j*(a-b) divisible by r, found by trying all of them."""
    diff = sheet_a - sheet_b
    return tuple(j for j in range(1, r) if (j * diff) % r == 0)


def brute_force_balanced_types(rank, degree):
    """All non-increasing integer tuples of the given rank and total degree
    whose entries pairwise differ by at most one.

    Enumerates every non-increasing tuple with entries in a safe window and
    filters.  Used to confirm that exactly one balanced type exists.
    """
    lo = degree // rank - 1
    hi = -(-degree // rank) + 1

    results = []

    def extend(prefix, remaining, cap):
        if remaining == 0:
            if sum(prefix) == degree and max(prefix) - min(prefix) <= 1:
                results.append(tuple(prefix))
            return
        for d in range(lo, min(cap, hi) + 1):
            extend(prefix + [d], remaining - 1, d)

    extend([], rank, hi)
    return results


# --- certificate mutation helpers -------------------------------------------

_INT_FIELDS = {
    "elliptic": ("r", "source_genus"),
    "etale": ("r", "target_genus"),
    "p1": ("r", "source_genus"),
    "glue": (),
}

_NUMERIC_KEYS = ("r", "g", "h", "b", "tsch_rank", "tsch_degree")

_ALL_TAGS = (
    "Stable",
    "Semistable",
    "StrictlySemistable",
    "Unstable",
    "Balanced",
    "NotApplicable",
)


def mutation_sites(doc):
    """Every (path, kind) at which a single-field mutation must be rejected.

    Covers the integer fields of each node, every stored numerics entry,
    both branch-split parts, the ramification flag, and the claimed tag.
    Deliberately excludes the gluing pairs: changing one of those can yield
    a different but equally valid certificate.
    """
    sites = []

    def walk(node, path):
        kind = node["kind"]
        for field in _INT_FIELDS[kind]:
            sites.append((path + (field,), "int"))
        for key in _NUMERIC_KEYS:
            sites.append((path + ("numerics", key), "int"))
        sites.append((path + ("claimed", "tag"), "tag"))
        if kind == "glue":
            sites.append((path + ("node_etale",), "bool"))
            sites.append((path + ("branch_split", 0), "int"))
            sites.append((path + ("branch_split", 1), "int"))
            walk(node["left"], path + ("left",))
            walk(node["right"], path + ("right",))

    walk(doc["root"], ("root",))
    return sites


def mutate(doc, site, rng):
    """Return a deep copy of `doc` with the field at `site` altered."""
    path, kind = site
    out = copy.deepcopy(doc)
    holder = out
    for step in path[:-1]:
        holder = holder[step]
    last = path[-1]
    if kind == "int":
        holder[last] = holder[last] + rng.choice((-7, -3, -2, -1, 1, 2, 3, 7))
    elif kind == "bool":
        holder[last] = not holder[last]
    elif kind == "tag":
        choices = [t for t in _ALL_TAGS if t != holder[last]]
        holder[last] = rng.choice(choices)
    else:
        raise ValueError(f"unknown mutation kind {kind!r}")
    return out


def random_permutation(degree, rng):
    images = list(range(degree))
    rng.shuffle(images)
    return tuple(images)
