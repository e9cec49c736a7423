# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled closure and orbit kernels.

Same API and same results as ``_speedups_py``; permutations cross the
boundary as image tuples and live internally as 16-bit arrays (degrees are
capped at 10**4 well below that).  Group elements are interned as ``bytes``
keys in an ordinary set, which keeps the hashing in C.
"""

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize
from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memcpy


cdef unsigned short* _pack_gens(object gens, Py_ssize_t n) except NULL:
    cdef Py_ssize_t k = len(gens)
    cdef unsigned short* buf = <unsigned short*> malloc(k * n * sizeof(unsigned short))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t gi, i
    for gi in range(k):
        g = gens[gi]
        for i in range(n):
            buf[gi * n + i] = <unsigned short> g[i]
    return buf


cdef bytes _identity_key(Py_ssize_t n):
    cdef unsigned short* tmp = <unsigned short*> malloc(n * sizeof(unsigned short))
    if tmp == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        tmp[i] = <unsigned short> i
    key = PyBytes_FromStringAndSize(<char*> tmp, n * sizeof(unsigned short))
    free(tmp)
    return key


def closure_elements(gens, degree, limit):
    """All products of the generators, as image tuples."""
    cdef Py_ssize_t n = degree
    cdef Py_ssize_t cap = limit
    if n <= 0 or n >= 65536:
        raise ValueError(f"degree {degree} out of range for the compiled kernel")
    cdef Py_ssize_t k = len(gens)
    cdef unsigned short* gbuf = _pack_gens(gens, n)
    cdef unsigned short* tmp = <unsigned short*> malloc(n * sizeof(unsigned short))
    if tmp == NULL:
        free(gbuf)
        raise MemoryError()
    cdef const unsigned short* cur
    cdef Py_ssize_t gi, i
    try:
        identity = _identity_key(n)
        seen = {identity}
        frontier = [identity]
        while frontier:
            fresh = []
            for pb in frontier:
                cur = <const unsigned short*> PyBytes_AS_STRING(pb)
                for gi in range(k):
                    for i in range(n):
                        tmp[i] = gbuf[gi * n + cur[i]]
                    qb = PyBytes_FromStringAndSize(<char*> tmp, n * sizeof(unsigned short))
                    if qb not in seen:
                        seen.add(qb)
                        if len(seen) > cap:
                            raise RuntimeError(f"closure exceeded limit {limit}")
                        fresh.append(qb)
            frontier = fresh
        out = []
        for pb in seen:
            cur = <const unsigned short*> PyBytes_AS_STRING(pb)
            out.append(tuple([cur[i] for i in range(n)]))
        return out
    finally:
        free(tmp)
        free(gbuf)


def fixed_point_stats(gens, degree, limit):
    """(order, sum of fixed points, sum of squared fixed points) over the closure."""
    cdef Py_ssize_t n = degree
    cdef Py_ssize_t cap = limit
    if n <= 0 or n >= 65536:
        raise ValueError(f"degree {degree} out of range for the compiled kernel")
    cdef Py_ssize_t k = len(gens)
    cdef unsigned short* gbuf = _pack_gens(gens, n)
    cdef unsigned short* tmp = <unsigned short*> malloc(n * sizeof(unsigned short))
    if tmp == NULL:
        free(gbuf)
        raise MemoryError()
    cdef const unsigned short* cur
    cdef Py_ssize_t gi, i
    cdef long long fix, fix_sum, fix_sq_sum
    fix_sum = n
    fix_sq_sum = <long long> n * n
    try:
        identity = _identity_key(n)
        seen = {identity}
        frontier = [identity]
        while frontier:
            fresh = []
            for pb in frontier:
                cur = <const unsigned short*> PyBytes_AS_STRING(pb)
                for gi in range(k):
                    fix = 0
                    for i in range(n):
                        tmp[i] = gbuf[gi * n + cur[i]]
                        if tmp[i] == <unsigned short> i:
                            fix += 1
                    qb = PyBytes_FromStringAndSize(<char*> tmp, n * sizeof(unsigned short))
                    if qb not in seen:
                        seen.add(qb)
                        if len(seen) > cap:
                            raise RuntimeError(f"closure exceeded limit {limit}")
                        fresh.append(qb)
                        fix_sum += fix
                        fix_sq_sum += fix * fix
            frontier = fresh
        return len(seen), fix_sum, fix_sq_sum
    finally:
        free(tmp)
        free(gbuf)


def pair_orbit_count(gens, degree):
    """Number of orbits on ordered pairs (diagonal included)."""
    cdef Py_ssize_t n = degree
    if n <= 0 or n >= 65536:
        raise ValueError(f"degree {degree} out of range for the compiled kernel")
    cdef Py_ssize_t k = len(gens)
    cdef unsigned short* gbuf = _pack_gens(gens, n)
    cdef char* visited = <char*> calloc(n * n, 1)
    cdef Py_ssize_t* stack = <Py_ssize_t*> malloc(n * n * sizeof(Py_ssize_t))
    if visited == NULL or stack == NULL:
        free(gbuf)
        if visited != NULL:
            free(visited)
        if stack != NULL:
            free(stack)
        raise MemoryError()
    cdef Py_ssize_t orbits = 0
    cdef Py_ssize_t start, sp, p, a, b, q, gi
    try:
        for start in range(n * n):
            if visited[start]:
                continue
            orbits += 1
            visited[start] = 1
            stack[0] = start
            sp = 1
            while sp > 0:
                sp -= 1
                p = stack[sp]
                a = p / n
                b = p % n
                for gi in range(k):
                    q = <Py_ssize_t> gbuf[gi * n + a] * n + gbuf[gi * n + b]
                    if not visited[q]:
                        visited[q] = 1
                        stack[sp] = q
                        sp += 1
        return orbits
    finally:
        free(stack)
        free(visited)
        free(gbuf)
