"""Named monodromy-group families.

Curve covers in the wild tend to have one of a handful of monodromy groups;
this module constructs them as explicit permutation groups with a fixed,
documented generator and point ordering, so every downstream computation is
reproducible to the byte.

Finite fields are built from scratch: the modulus for F(p^k) is the
lexicographically smallest monic irreducible polynomial of degree k over
F(p), coefficients read from the constant term up.  Field elements are
encoded as integers 0..q-1 via base-p digits, and that encoding is also the
point order used by the projective and affine families.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import CapExceeded, InvalidDegree, NotPrimePower
from .perms import Permutation, PermGroup

DEFAULT_FIELD_CAP = 512


# ------------------------------------------------------------------ fields


def _smallest_prime_factor(n: int) -> int:
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def _prime_power(q: int) -> tuple[int, int] | None:
    if q < 2:
        return None
    p = _smallest_prime_factor(q)
    k = 0
    m = q
    while m % p == 0:
        m //= p
        k += 1
    return (p, k) if m == 1 else None


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num by den over F(p); den must be monic."""
    num = list(num)
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] % p
        if c:
            for j in range(dd + 1):
                num[i - dd + j] = (num[i - dd + j] - c * den[j]) % p
    result = [c % p for c in num[:dd]]
    return result


def _poly_is_irreducible(coeffs: list[int], p: int) -> bool:
    """Trial division by all monic polynomials of degree up to deg/2."""
    deg = len(coeffs) - 1
    for d in range(1, deg // 2 + 1):
        for code in range(p**d):
            div = []
            c = code
            for _ in range(d):
                div.append(c % p)
                c //= p
            div.append(1)
            if not any(_poly_mod(coeffs, div, p)):
                return False
    return True


@dataclass(frozen=True, slots=True)
class FiniteField:
    """F(p^k) with elements encoded as integers 0..q-1 (base-p digits).

    ``modulus`` holds k+1 coefficients from the constant term up, last one 1.
    ``generator`` is the smallest encoding whose multiplicative order is q-1.
    """

    p: int
    k: int
    q: int
    modulus: tuple[int, ...]
    generator: int

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _encode(self, digits: list[int]) -> int:
        a = 0
        for d in reversed(digits):
            a = a * self.p + d
        return a

    def add(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        return self._encode([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        return self._encode([(-x) % self.p for x in self._digits(a)])

    def mul(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        full = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    full[i + j] = (full[i + j] + x * y) % self.p
        rem = _poly_mod(full, list(self.modulus), self.p)
        rem += [0] * (self.k - len(rem))
        return self._encode(rem)

    def pow(self, a: int, e: int) -> int:
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.q - 2)


def _multiplicative_order_is_full(field_mul, q: int, a: int) -> bool:
    n = q - 1
    primes = []
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            primes.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        primes.append(m)
    for ell in primes:
        if field_mul(a, n // ell) == 1:
            return False
    return True


@lru_cache(maxsize=None)
def finite_field(q: int, cap: int = DEFAULT_FIELD_CAP) -> FiniteField:
    if q > cap:
        raise CapExceeded(f"field size {q} exceeds cap {cap}")
    pk = _prime_power(q)
    if pk is None:
        raise NotPrimePower(f"{q} is not a prime power")
    p, k = pk

    # Lexicographic on (c0, ..., c_{k-1}): itertools.product varies the last
    # coordinate fastest, which is exactly left-to-right comparison order.
    modulus: tuple[int, ...] | None = None
    for head in itertools.product(range(p), repeat=k):
        coeffs = list(head) + [1]
        if _poly_is_irreducible(coeffs, p):
            modulus = tuple(coeffs)
            break
    assert modulus is not None, "no irreducible polynomial found"

    probe = FiniteField(p=p, k=k, q=q, modulus=modulus, generator=1)
    generator = None
    for a in range(1, q):
        if _multiplicative_order_is_full(probe.pow, q, a):
            generator = a
            break
    assert generator is not None, "no multiplicative generator found"
    # Tripwire: the multiplicative group really has order q-1.
    assert probe.pow(generator, q - 1) == 1
    return FiniteField(p=p, k=k, q=q, modulus=modulus, generator=generator)


# ------------------------------------------------------------------ families


def cyclic_group(r: int) -> PermGroup:
    """The r-cycle acting on r points."""
    if r < 2:
        raise InvalidDegree(f"cyclic group needs r >= 2, got {r}")
    images = tuple((i + 1) % r for i in range(r))
    return PermGroup([Permutation(images)])


def symmetric_group(r: int) -> PermGroup:
    """Standard generators: a transposition and the long cycle."""
    if r < 2:
        raise InvalidDegree(f"symmetric group needs r >= 2, got {r}")
    swap = list(range(r))
    swap[0], swap[1] = 1, 0
    long_cycle = tuple((i + 1) % r for i in range(r))
    return PermGroup([Permutation(tuple(swap)), Permutation(long_cycle)])


def alternating_group(r: int) -> PermGroup:
    """A 3-cycle plus a long even cycle (length r for odd r, r-1 for even r)."""
    if r < 3:
        raise InvalidDegree(f"alternating group needs r >= 3, got {r}")
    three = list(range(r))
    three[0], three[1], three[2] = 1, 2, 0
    if r % 2 == 1:
        big = tuple((i + 1) % r for i in range(r))
    else:
        rot = list(range(r))
        for i in range(1, r):
            rot[i] = i % (r - 1) + 1
        big = tuple(rot)
    return PermGroup([Permutation(tuple(three)), Permutation(big)])


def _projective_points(field: FiniteField) -> int:
    # Point 0 is [0:1]; point 1+a is [1:a] in field-encoding order.
    return field.q + 1


def _projective_action(field: FiniteField, matrix: tuple[int, int, int, int]) -> Permutation:
    """Permutation of the projective line induced by an invertible 2x2 matrix.

    The matrix (a, b, c, d) sends [x:y] to [a x + b y : c x + d y], and the
    image is renormalized to the canonical representatives [1:t] or [0:1].
    """
    a, b, c, d = matrix
    images = []
    for idx in range(_projective_points(field)):
        if idx == 0:
            x, y = 0, 1
        else:
            x, y = 1, idx - 1
        u = field.add(field.mul(a, x), field.mul(b, y))
        v = field.add(field.mul(c, x), field.mul(d, y))
        if u == 0:
            images.append(0)
        else:
            images.append(1 + field.mul(v, field.inv(u)))
    return Permutation(tuple(images))


def pgl2(q: int, cap: int = DEFAULT_FIELD_CAP) -> PermGroup:
    """PGL(2, q) on the q+1 points of the projective line.

    Generators: the unipotent [[1,1],[0,1]], the torus element [[g,0],[0,1]]
    for the canonical multiplicative generator g, and the 0 <-> infinity swap
    [[0,1],[1,0]].
    """
    field = finite_field(q, cap)
    g = field.generator
    gens = [
        _projective_action(field, (1, 1, 0, 1)),
        _projective_action(field, (g, 0, 0, 1)),
        _projective_action(field, (0, 1, 1, 0)),
    ]
    return PermGroup(gens)


def psl2(q: int, cap: int = DEFAULT_FIELD_CAP) -> PermGroup:
    """PSL(2, q): same point set, but only square determinants.

    The torus generator is squared and the swap picks up a sign so that all
    three generators have square determinant; for even q this coincides with
    PGL(2, q).
    """
    field = finite_field(q, cap)
    g = field.generator
    g2 = field.mul(g, g)
    minus_one = field.neg(1)
    gens = [
        _projective_action(field, (1, 1, 0, 1)),
        _projective_action(field, (g2, 0, 0, 1)),
        _projective_action(field, (0, 1, minus_one, 0)),
    ]
    return PermGroup(gens)


def agl1(q: int, cap: int = DEFAULT_FIELD_CAP) -> PermGroup:
    """AGL(1, q): all maps x -> a x + b on the q field elements.

    Generated by the translation x -> x + 1 and the scaling x -> g x.
    """
    field = finite_field(q, cap)
    g = field.generator
    shift = Permutation(tuple(field.add(x, 1) for x in range(q)))
    scale = Permutation(tuple(field.mul(g, x) for x in range(q)))
    return PermGroup([shift, scale])


def pgl2_order(q: int) -> int:
    return q**3 - q


def psl2_order(q: int) -> int:
    return (q**3 - q) // (2 if q % 2 else 1)


def agl1_order(q: int) -> int:
    return q * (q - 1)
