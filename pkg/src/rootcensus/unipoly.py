"""Dense univariate polynomials over a finite ring.

Coefficients are canonical ring integers, stored ascending by degree with no
trailing zeros (the zero polynomial has an empty coefficient tuple).  Values
are immutable; every operation returns a fresh polynomial.

Division is restricted to monic divisors over a general Z_n (that is the only
case where quotients are unique) and to any nonzero divisor over a field.
The Euclidean resultant here reproduces, sign included, the determinant of
the Sylvester matrix with the first argument's coefficient rows on top; the
two computations cross-check each other in the test suite.
"""

from __future__ import annotations

from .rings import Ring


class UniPoly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs):
        cs = [c % ring.cardinality if isinstance(c, int) else c for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)

    @staticmethod
    def zero(ring: Ring) -> "UniPoly":
        return UniPoly(ring, ())

    @staticmethod
    def constant(ring: Ring, c: int) -> "UniPoly":
        return UniPoly(ring, (ring.from_int(c),))

    @staticmethod
    def x_minus(ring: Ring, alpha: int) -> "UniPoly":
        return UniPoly(ring, (ring.neg(alpha), 1))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def lead(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return (
            isinstance(other, UniPoly)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x" if c != 1 else "x")
            else:
                terms.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return " + ".join(terms)

    def _check_same_ring(self, other: "UniPoly"):
        if self.ring != other.ring:
            raise ValueError("mixed-ring polynomial arithmetic")

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._check_same_ring(other)
        r = self.ring
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        out = [
            r.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0)
            for i in range(n)
        ]
        return UniPoly(r, out)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        self._check_same_ring(other)
        r = self.ring
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        out = [
            r.sub(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0)
            for i in range(n)
        ]
        return UniPoly(r, out)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        self._check_same_ring(other)
        r = self.ring
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly.zero(r)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = r.add(out[i + j], r.mul(x, y))
        return UniPoly(r, out)

    def scale(self, c: int) -> "UniPoly":
        r = self.ring
        return UniPoly(r, [r.mul(c, x) for x in self.coeffs])

    def eval_at(self, x: int) -> int:
        """Horner evaluation at a ring element."""
        r = self.ring
        acc = 0
        for c in reversed(self.coeffs):
            acc = r.add(r.mul(acc, x), c)
        return acc

    def monic(self) -> "UniPoly":
        """Scale by the inverse of the leading coefficient (must be a unit)."""
        if self.is_zero():
            raise ValueError("cannot normalize the zero polynomial")
        lc = self.lead()
        if lc == 1:
            return self
        return self.scale(self.ring.inv(lc))


def uni_divmod(f: UniPoly, g: UniPoly) -> tuple[UniPoly, UniPoly]:
    """Quotient and remainder of f by g with deg rem < deg g.

    g must be monic, or have a unit leading coefficient (always true over a
    field); division by a non-unit lead over Z_n is rejected as ill-defined.
    """
    f._check_same_ring(g)
    r = f.ring
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    lc = g.lead()
    if lc != 1 and not r.is_unit(lc):
        raise ValueError("divisor lead coefficient is not a unit")
    inv_lc = 1 if lc == 1 else r.inv(lc)
    rem = list(f.coeffs)
    dg = g.degree
    if f.degree < dg:
        return UniPoly.zero(r), f
    quot = [0] * (f.degree - dg + 1)
    for pos in range(f.degree, dg - 1, -1):
        c = rem[pos]
        if c == 0:
            continue
        qc = r.mul(c, inv_lc)
        quot[pos - dg] = qc
        for i, gc in enumerate(g.coeffs):
            rem[pos - dg + i] = r.sub(rem[pos - dg + i], r.mul(qc, gc))
    return UniPoly(r, quot), UniPoly(r, rem)


def uni_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm; requires a field ring."""
    f._check_same_ring(g)
    if not f.ring.is_field:
        raise ValueError("gcd requires a field coefficient ring")
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        _, rem = uni_divmod(a, b)
        a, b = b, rem
    return a.monic()


def count_distinct_roots_zn(f: UniPoly) -> int:
    """Number of alpha in the ring with f(alpha) = 0, by full scan.

    Restricted to monic f of positive degree: that is the population whose
    root counts the census measures, and over Z_n root-by-factor reasoning
    would be wrong anyway (Z_n[x] is not a UFD).
    """
    if not f.is_monic():
        raise ValueError("root census is defined for monic polynomials")
    if f.degree < 1:
        raise ValueError("need degree >= 1")
    return sum(1 for a in f.ring.elements() if f.eval_at(a) == 0)


def resultant_uni(f: UniPoly, g: UniPoly) -> int:
    """Resultant of two positive-degree polynomials over a field, computed by
    the Euclidean remainder sequence.

    Sign convention matches det(Sylvester matrix) with f's coefficient rows
    first.  Uses res(f,g) = (-1)^(deg f * deg g) * lc(g)^(deg f - deg r) *
    res(g, r) with r = f mod g, res(f, c) = c^deg f, and res with a zero
    argument equal to 0.
    """
    f._check_same_ring(g)
    r = f.ring
    if not r.is_field:
        raise ValueError("resultant requires a field coefficient ring")
    if f.degree < 1 or g.degree < 1:
        raise ValueError("resultant needs both degrees >= 1")

    def rec(a: UniPoly, b: UniPoly) -> int:
        if b.is_zero():
            return 0 if a.degree != 0 else 1
        if a.is_zero():
            return 0 if b.degree != 0 else 1
        if a.degree == 0:
            return r.pow(a.coeffs[0], b.degree)
        if b.degree == 0:
            return r.pow(b.coeffs[0], a.degree)
        if a.degree < b.degree:
            sign = (a.degree * b.degree) % 2
            v = rec(b, a)
            return r.neg(v) if sign else v
        _, rem = uni_divmod(a, b)
        rdeg = max(rem.degree, 0)
        v = rec(b, rem)
        v = r.mul(r.pow(b.lead(), a.degree - rdeg), v)
        if (a.degree * b.degree) % 2:
            v = r.neg(v)
        return v

    return rec(f, g)
