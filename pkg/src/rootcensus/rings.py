"""Finite coefficient rings: Z_n, prime fields F_p, and extension fields
GF(p^k).

Elements are plain canonical integers in [0, cardinality), never wrapper
objects.  For GF(p^k) the integer is the base-p digit encoding of the residue
polynomial's coefficient vector (constant digit first), so encoding/decoding
is a bijection and the integers 0..p-1 are exactly the prime subfield.  All
arithmetic goes through the ring context object, which is immutable after
construction and therefore safe to share across workers.

Enumeration order is always increasing integer representation.  The census
engines rely on that: an element's representation doubles as its array index.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .numtheory import gcd_int, is_prime

ZN = "integers-mod-n"
PRIME_FIELD = "prime-field"
EXTENSION_FIELD = "extension-field"


@dataclass(frozen=True)
class RingSpec:
    """Description of a coefficient ring; `ring_make` turns it into arithmetic."""

    kind: str
    n: int = 0
    p: int = 0
    k: int = 1
    reduction: tuple[int, ...] | None = None

    @staticmethod
    def zn(n: int) -> "RingSpec":
        return RingSpec(kind=ZN, n=n)

    @staticmethod
    def prime_field(p: int) -> "RingSpec":
        return RingSpec(kind=PRIME_FIELD, p=p)

    @staticmethod
    def extension_field(p: int, k: int, reduction=None) -> "RingSpec":
        red = None if reduction is None else tuple(int(c) for c in reduction)
        return RingSpec(kind=EXTENSION_FIELD, p=p, k=k, reduction=red)


class Ring:
    """Arithmetic context over canonical integer elements."""

    spec: RingSpec
    cardinality: int
    is_field: bool
    zero = 0
    one = 1

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def sub(self, a: int, b: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    def inv(self, a: int) -> int:
        raise NotImplementedError

    def pow(self, a: int, e: int) -> int:
        """Square-and-multiply; e must be nonnegative."""
        if e < 0:
            raise ValueError("negative exponent")
        acc = 1
        base = a
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def from_int(self, c: int) -> int:
        """Image of an arbitrary integer under the natural map Z -> ring."""
        raise NotImplementedError

    def elements(self):
        """All elements exactly once, in increasing representation order."""
        return range(self.cardinality)

    def is_unit(self, a: int) -> bool:
        raise NotImplementedError

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and self.spec == other.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    # Lookup tables for the vectorized census engines.  Built lazily; the
    # tables are pure caches of mul/add so they never change semantics.

    def add_table(self) -> np.ndarray:
        if not hasattr(self, "_add_table"):
            q = self.cardinality
            t = np.empty((q, q), dtype=np.uint8 if q <= 256 else np.int64)
            for a in range(q):
                for b in range(q):
                    t[a, b] = self.add(a, b)
            self._add_table = t
        return self._add_table

    def mul_table(self) -> np.ndarray:
        if not hasattr(self, "_mul_table"):
            q = self.cardinality
            t = np.empty((q, q), dtype=np.uint8 if q <= 256 else np.int64)
            for a in range(q):
                for b in range(q):
                    t[a, b] = self.mul(a, b)
            self._mul_table = t
        return self._mul_table


class ZnRing(Ring):
    """Integers modulo n, n >= 2.  A field exactly when n is prime."""

    def __init__(self, spec: RingSpec):
        if spec.n < 2:
            raise ValueError(f"need modulus >= 2, got {spec.n}")
        self.spec = spec
        self.n = spec.n
        self.cardinality = spec.n
        self.is_field = is_prime(spec.n)

    def add(self, a, b):
        return (a + b) % self.n

    def sub(self, a, b):
        return (a - b) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def neg(self, a):
        return -a % self.n

    def inv(self, a):
        a %= self.n
        g = gcd_int(a, self.n)
        if g != 1:
            raise ZeroDivisionError(f"{a} is not a unit mod {self.n} (gcd {g})")
        return pow(a, -1, self.n)

    def from_int(self, c):
        return c % self.n

    def is_unit(self, a):
        return gcd_int(a % self.n, self.n) == 1

    def __repr__(self):
        return f"Z_{self.n}"


class PrimeFieldRing(ZnRing):
    """F_p; same arithmetic as Z_p but constructed with a primality check."""

    def __init__(self, spec: RingSpec):
        if not is_prime(spec.p):
            raise ValueError(f"{spec.p} is not prime")
        super().__init__(RingSpec(kind=PRIME_FIELD, n=spec.p, p=spec.p))

    def __repr__(self):
        return f"F_{self.n}"


# -- polynomial scratch helpers over F_p (coefficient lists, constant first) --


def _ptrim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmod(f: list[int], g: list[int], p: int) -> list[int]:
    """f mod g over F_p for monic g."""
    f = list(f)
    dg = len(g) - 1
    while len(f) - 1 >= dg and f:
        c = f[-1]
        shift = len(f) - 1 - dg
        for i, gc in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gc) % p
        _ptrim(f)
    return f


def _is_irreducible(f: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    deg = len(f) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for enc in range(p**d, 2 * p**d):
            cand = _decode_base(enc, p)
            if not _pmod(f, cand, p):
                return False
    return True


def _decode_base(enc: int, p: int) -> list[int]:
    digits = []
    while enc:
        digits.append(enc % p)
        enc //= p
    return digits


def _encode_base(digits, p: int) -> int:
    enc = 0
    for d in reversed(list(digits)):
        enc = enc * p + d
    return enc


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Monic irreducible of degree k over F_p with the smallest integer
    encoding (found by exhaustive ascending scan)."""
    for enc in range(p**k, 2 * p**k):
        cand = _decode_base(enc, p)
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise RuntimeError(f"no irreducible of degree {k} over F_{p}")  # unreachable


class ExtensionFieldRing(Ring):
    """GF(p^k) as residue polynomials modulo a monic irreducible of degree k."""

    def __init__(self, spec: RingSpec):
        if not is_prime(spec.p):
            raise ValueError(f"{spec.p} is not prime")
        if spec.k < 1:
            raise ValueError(f"need extension degree >= 1, got {spec.k}")
        p, k = spec.p, spec.k
        if spec.reduction is None:
            red = smallest_irreducible(p, k)
        else:
            red = tuple(c % p for c in spec.reduction)
            if len(red) != k + 1 or red[-1] != 1:
                raise ValueError("reduction polynomial must be monic of degree k")
            if not _is_irreducible(list(red), p):
                raise ValueError("reduction polynomial is reducible")
        self.spec = RingSpec(kind=EXTENSION_FIELD, p=p, k=k, reduction=red)
        self.p = p
        self.k = k
        self.reduction = red
        self.cardinality = p**k
        self.is_field = True

    def decode(self, a: int) -> list[int]:
        """Integer representation -> coefficient vector of length k."""
        digits = []
        for _ in range(self.k):
            digits.append(a % self.p)
            a //= self.p
        return digits

    def encode(self, vec) -> int:
        return _encode_base([c % self.p for c in vec], self.p)

    def add(self, a, b):
        return self.encode([x + y for x, y in zip(self.decode(a), self.decode(b))])

    def sub(self, a, b):
        return self.encode([x - y for x, y in zip(self.decode(a), self.decode(b))])

    def neg(self, a):
        return self.encode([-x for x in self.decode(a)])

    def mul(self, a, b):
        p = self.p
        va, vb = self.decode(a), self.decode(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(va):
            if x:
                for j, y in enumerate(vb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _pmod(prod, list(self.reduction), p)
        rem += [0] * (self.k - len(rem))
        return self.encode(rem)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(a, self.cardinality - 2)

    def from_int(self, c):
        return c % self.p

    def is_unit(self, a):
        return a != 0

    def __repr__(self):
        return f"GF({self.p}^{self.k})"


@lru_cache(maxsize=None)
def _ring_cached(spec: RingSpec) -> Ring:
    if spec.kind == ZN:
        return ZnRing(spec)
    if spec.kind == PRIME_FIELD:
        return PrimeFieldRing(spec)
    if spec.kind == EXTENSION_FIELD:
        return ExtensionFieldRing(spec)
    raise ValueError(f"unknown ring kind {spec.kind!r}")


def ring_make(spec: RingSpec) -> Ring:
    """Build the arithmetic context described by `spec`.

    For an extension field without an explicit reduction polynomial, the monic
    irreducible of degree k with the smallest integer encoding is selected, so
    repeated runs always land on the same field presentation.
    """
    return _ring_cached(spec)


def field_make(q: int) -> Ring:
    """Field with q elements; q must be a prime power."""
    from .numtheory import is_prime_power

    pk = is_prime_power(q)
    if pk is None:
        raise ValueError(f"{q} is not a prime power")
    p, k = pk
    if k == 1:
        return ring_make(RingSpec.prime_field(p))
    return ring_make(RingSpec.extension_field(p, k))
