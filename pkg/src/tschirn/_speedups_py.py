"""Pure-Python closure and orbit kernels.

Reference implementations of the three hot loops.  The compiled module
``_speedups`` mirrors this API bit for bit; ``_kernels`` picks whichever is
available at import time.  Permutations cross this boundary as plain image
tuples (0-based), never as wrapper objects.
"""

from __future__ import annotations

ImageTuple = tuple[int, ...]


def closure_elements(gens: list[ImageTuple], degree: int, limit: int) -> list[ImageTuple]:
    """All products of the generators, found by breadth-first closure.

    Raises RuntimeError if more than ``limit`` elements show up; callers are
    expected to have bounded the order beforehand, so hitting the limit means
    the caller's bookkeeping is wrong.
    """
    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    while frontier:
        fresh = []
        for p in frontier:
            for s in gens:
                q = tuple(s[i] for i in p)
                if q not in seen:
                    seen.add(q)
                    if len(seen) > limit:
                        raise RuntimeError(f"closure exceeded limit {limit}")
                    fresh.append(q)
        frontier = fresh
    return list(seen)


def fixed_point_stats(gens: list[ImageTuple], degree: int, limit: int) -> tuple[int, int, int]:
    """(order, sum of fixed-point counts, sum of squared fixed-point counts).

    Same closure walk as :func:`closure_elements` but only the fixed-point
    statistics are accumulated, not the elements themselves.
    """
    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    fix_sum = degree
    fix_sq_sum = degree * degree
    while frontier:
        fresh = []
        for p in frontier:
            for s in gens:
                q = tuple(s[i] for i in p)
                if q not in seen:
                    seen.add(q)
                    if len(seen) > limit:
                        raise RuntimeError(f"closure exceeded limit {limit}")
                    fresh.append(q)
                    f = 0
                    for i, img in enumerate(q):
                        if img == i:
                            f += 1
                    fix_sum += f
                    fix_sq_sum += f * f
        frontier = fresh
    return len(seen), fix_sum, fix_sq_sum


def pair_orbit_count(gens: list[ImageTuple], degree: int) -> int:
    """Number of orbits on ordered pairs of points (the diagonal included)."""
    n = degree
    visited = bytearray(n * n)
    orbits = 0
    stack = []
    for start in range(n * n):
        if visited[start]:
            continue
        orbits += 1
        visited[start] = 1
        stack.append(start)
        while stack:
            p = stack.pop()
            a, b = divmod(p, n)
            for s in gens:
                q = s[a] * n + s[b]
                if not visited[q]:
                    visited[q] = 1
                    stack.append(q)
    return orbits
