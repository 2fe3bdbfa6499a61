"""Multivariate polynomials over a finite field.

Two layers:

* `MPoly` is a dense polynomial in v variables with an explicit total-degree
  bound: coefficients are stored over every exponent tuple with sum <= bound,
  ordered lexicographically.  Dense simplex storage makes "all polynomials of
  this shape" a plain base-q odometer, which the census engines exploit.

* `ShapedMultiPoly` is monic of degree l in a designated main variable, with
  the coefficient of the i-th main-variable power an MPoly of total degree at
  most l - i in the remaining variables.  Every such polynomial has total
  degree exactly l.  This is the population the pair censuses enumerate and
  the resultant machinery specializes.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .rings import Ring
from .unipoly import UniPoly


@lru_cache(maxsize=None)
def simplex_exponents(nvars: int, bound: int) -> tuple[tuple[int, ...], ...]:
    """All exponent tuples with sum <= bound, lexicographically sorted."""
    if nvars == 0:
        return ((),)
    out = []

    def rec(prefix, remaining, left):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for e in range(left + 1):
            rec(prefix + [e], remaining - 1, left - e)

    rec([], nvars, bound)
    out.sort()
    return tuple(out)


@lru_cache(maxsize=None)
def simplex_index(nvars: int, bound: int) -> dict[tuple[int, ...], int]:
    return {e: i for i, e in enumerate(simplex_exponents(nvars, bound))}


def simplex_size(nvars: int, bound: int) -> int:
    return comb(bound + nvars, nvars)


class MPoly:
    """Dense multivariate polynomial with a total-degree bound."""

    __slots__ = ("ring", "nvars", "bound", "coeffs")

    def __init__(self, ring: Ring, nvars: int, bound: int, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != simplex_size(nvars, bound):
            raise ValueError("coefficient vector does not fill the simplex")
        self.ring = ring
        self.nvars = nvars
        self.bound = bound
        self.coeffs = coeffs

    @staticmethod
    def zero(ring: Ring, nvars: int, bound: int = 0) -> "MPoly":
        return MPoly(ring, nvars, bound, [0] * simplex_size(nvars, bound))

    @staticmethod
    def constant(ring: Ring, nvars: int, c: int) -> "MPoly":
        return MPoly(ring, nvars, 0, [ring.from_int(c)])

    @staticmethod
    def from_terms(ring: Ring, nvars: int, terms: dict, bound: int | None = None) -> "MPoly":
        """Build from {exponent tuple: coefficient}; bound defaults to the
        largest total degree present."""
        degs = [sum(e) for e, c in terms.items() if ring.from_int(c) != 0]
        need = max(degs, default=0)
        if bound is None:
            bound = need
        elif need > bound:
            raise ValueError(f"terms of degree {need} exceed bound {bound}")
        idx = simplex_index(nvars, bound)
        coeffs = [0] * simplex_size(nvars, bound)
        for e, c in terms.items():
            if len(e) != nvars:
                raise ValueError("exponent arity mismatch")
            c = ring.from_int(c)
            if c:
                coeffs[idx[tuple(e)]] = c
        return MPoly(ring, nvars, bound, coeffs)

    def terms(self) -> dict[tuple[int, ...], int]:
        exps = simplex_exponents(self.nvars, self.bound)
        return {e: c for e, c in zip(exps, self.coeffs) if c != 0}

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def total_degree(self) -> int:
        """Largest total degree with a nonzero coefficient; -1 if zero."""
        exps = simplex_exponents(self.nvars, self.bound)
        return max((sum(e) for e, c in zip(exps, self.coeffs) if c), default=-1)

    def resize(self, bound: int) -> "MPoly":
        if bound == self.bound:
            return self
        return MPoly.from_terms(self.ring, self.nvars, self.terms(), bound)

    def __eq__(self, other):
        return (
            isinstance(other, MPoly)
            and self.ring == other.ring
            and self.nvars == other.nvars
            and self.terms() == other.terms()
        )

    def __hash__(self):
        return hash((self.ring, self.nvars, tuple(sorted(self.terms().items()))))

    def __repr__(self):
        from .polytext import format_terms

        return format_terms(self.terms(), self.nvars) or "0"

    def __add__(self, other: "MPoly") -> "MPoly":
        return self._addsub(other, self.ring.add)

    def __sub__(self, other: "MPoly") -> "MPoly":
        return self._addsub(other, self.ring.sub)

    def _addsub(self, other: "MPoly", op) -> "MPoly":
        if self.nvars != other.nvars or self.ring != other.ring:
            raise ValueError("mixed polynomial arithmetic")
        bound = max(self.bound, other.bound)
        a = self.resize(bound)
        b = other.resize(bound)
        return MPoly(bound=bound, ring=self.ring, nvars=self.nvars,
                     coeffs=[op(x, y) for x, y in zip(a.coeffs, b.coeffs)])

    def __neg__(self) -> "MPoly":
        r = self.ring
        return MPoly(r, self.nvars, self.bound, [r.neg(c) for c in self.coeffs])

    def __mul__(self, other: "MPoly") -> "MPoly":
        if self.nvars != other.nvars or self.ring != other.ring:
            raise ValueError("mixed polynomial arithmetic")
        r = self.ring
        ta, tb = self.terms(), other.terms()
        bound = self.bound + other.bound
        idx = simplex_index(self.nvars, bound)
        out = [0] * simplex_size(self.nvars, bound)
        for ea, ca in ta.items():
            for eb, cb in tb.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                pos = idx[e]
                out[pos] = r.add(out[pos], r.mul(ca, cb))
        return MPoly(r, self.nvars, bound, out)

    def scale(self, c: int) -> "MPoly":
        r = self.ring
        return MPoly(r, self.nvars, self.bound, [r.mul(c, x) for x in self.coeffs])

    def eval_at(self, point) -> int:
        """Value at a tuple of ring elements (one per variable)."""
        if len(point) != self.nvars:
            raise ValueError(f"point arity {len(point)} != nvars {self.nvars}")
        r = self.ring
        acc = 0
        for e, c in zip(simplex_exponents(self.nvars, self.bound), self.coeffs):
            if c == 0:
                continue
            term = c
            for v, exp in zip(point, e):
                if exp:
                    term = r.mul(term, r.pow(v, exp))
            acc = r.add(acc, term)
        return acc

    def trim(self) -> "MPoly":
        """Shrink the bound to the actual total degree."""
        return self.resize(max(self.total_degree(), 0))


class ShapedMultiPoly:
    """Monic polynomial of degree l in the main variable (variable 0), with
    total degree exactly l: the coefficient of main^i is a polynomial of
    total degree <= l - i in the other variables.
    """

    __slots__ = ("ring", "nvars", "main_deg", "coeff_polys")

    def __init__(self, ring: Ring, nvars: int, main_deg: int, coeff_polys):
        if nvars < 1:
            raise ValueError("need at least the main variable")
        if main_deg < 0:
            raise ValueError("main degree must be nonnegative")
        coeff_polys = tuple(coeff_polys)
        if len(coeff_polys) != main_deg:
            raise ValueError("need one coefficient polynomial per power below main_deg")
        for i, cp in enumerate(coeff_polys):
            if cp.nvars != nvars - 1 or cp.ring != ring:
                raise ValueError("coefficient polynomial shape mismatch")
            if cp.total_degree() > main_deg - i:
                raise ValueError(
                    f"coefficient of main^{i} has degree {cp.total_degree()}"
                    f" > {main_deg - i}"
                )
        self.ring = ring
        self.nvars = nvars
        self.main_deg = main_deg
        self.coeff_polys = coeff_polys

    # -- shape bookkeeping used by the enumeration engines --

    @staticmethod
    def slot_bounds(nvars: int, main_deg: int) -> list[int]:
        """Total-degree bound of each coefficient polynomial, ascending power."""
        return [main_deg - i for i in range(main_deg)]

    @staticmethod
    def slot_count(nvars: int, main_deg: int) -> int:
        v = nvars - 1
        return sum(
            simplex_size(v, b) for b in ShapedMultiPoly.slot_bounds(nvars, main_deg)
        )

    @staticmethod
    def population(ring: Ring, nvars: int, main_deg: int) -> int:
        """Number of distinct shaped polynomials over the ring."""
        return ring.cardinality ** ShapedMultiPoly.slot_count(nvars, main_deg)

    @staticmethod
    def from_slots(ring: Ring, nvars: int, main_deg: int, slots) -> "ShapedMultiPoly":
        """Rebuild from the flat slot vector (ascending main power, lex
        exponent order inside each coefficient polynomial)."""
        v = nvars - 1
        polys = []
        pos = 0
        for i in range(main_deg):
            b = main_deg - i
            size = simplex_size(v, b)
            polys.append(MPoly(ring, v, b, slots[pos : pos + size]))
            pos += size
        if pos != len(slots):
            raise ValueError("slot vector length mismatch")
        return ShapedMultiPoly(ring, nvars, main_deg, polys)

    def to_slots(self) -> list[int]:
        out: list[int] = []
        for cp in self.coeff_polys:
            out.extend(cp.coeffs)
        return out

    @staticmethod
    def from_index(ring: Ring, nvars: int, main_deg: int, index: int) -> "ShapedMultiPoly":
        """Base-q odometer: digit j of `index` fills slot j (slot 0 fastest)."""
        q = ring.cardinality
        nslots = ShapedMultiPoly.slot_count(nvars, main_deg)
        slots = []
        for _ in range(nslots):
            slots.append(index % q)
            index //= q
        if index:
            raise ValueError("index out of range for this shape")
        return ShapedMultiPoly.from_slots(ring, nvars, main_deg, slots)

    def to_index(self) -> int:
        q = self.ring.cardinality
        idx = 0
        for s in reversed(self.to_slots()):
            idx = idx * q + s
        return idx

    @staticmethod
    def random(ring: Ring, nvars: int, main_deg: int, rng) -> "ShapedMultiPoly":
        q = ring.cardinality
        nslots = ShapedMultiPoly.slot_count(nvars, main_deg)
        return ShapedMultiPoly.from_slots(
            ring, nvars, main_deg, [rng.randrange(q) for _ in range(nslots)]
        )

    def total_degree(self) -> int:
        return self.main_deg

    def terms(self) -> dict[tuple[int, ...], int]:
        """Flatten to {full exponent tuple: coefficient}, main variable first."""
        out = {(self.main_deg,) + (0,) * (self.nvars - 1): 1}
        for i, cp in enumerate(self.coeff_polys):
            for e, c in cp.terms().items():
                out[(i,) + e] = c
        return out

    @staticmethod
    def from_terms(ring: Ring, nvars: int, terms: dict) -> "ShapedMultiPoly":
        """Validate and adopt a {exponent: coeff} dict as a shaped polynomial."""
        clean = {tuple(e): ring.from_int(c) for e, c in terms.items()}
        clean = {e: c for e, c in clean.items() if c != 0}
        if not clean:
            raise ValueError("zero polynomial is not monic in the main variable")
        main_deg = max(e[0] for e in clean)
        lead = {e: c for e, c in clean.items() if e[0] == main_deg}
        expected = (main_deg,) + (0,) * (nvars - 1)
        if lead != {expected: 1}:
            raise ValueError("not monic in the main variable")
        groups: list[dict] = [dict() for _ in range(main_deg)]
        for e, c in clean.items():
            if e == expected:
                continue
            i = e[0]
            if i >= main_deg:
                raise ValueError("stray term at the leading main power")
            rest = e[1:]
            if sum(e) > main_deg:
                raise ValueError(
                    f"term {e} exceeds total degree {main_deg}"
                )
            groups[i][rest] = c
        polys = [
            MPoly.from_terms(ring, nvars - 1, groups[i], bound=main_deg - i)
            for i in range(main_deg)
        ]
        return ShapedMultiPoly(ring, nvars, main_deg, polys)

    def __eq__(self, other):
        return (
            isinstance(other, ShapedMultiPoly)
            and self.ring == other.ring
            and self.nvars == other.nvars
            and self.main_deg == other.main_deg
            and all(a == b for a, b in zip(self.coeff_polys, other.coeff_polys))
        )

    def __hash__(self):
        return hash((self.ring, self.nvars, self.main_deg, self.coeff_polys))

    def __repr__(self):
        from .polytext import format_terms

        return format_terms(self.terms(), self.nvars)

    def multi_eval(self, point) -> UniPoly:
        """Specialize the non-main variables; the result is monic of degree
        main_deg in the main variable."""
        if len(point) != self.nvars - 1:
            raise ValueError(
                f"point arity {len(point)} != {self.nvars - 1} non-main variables"
            )
        coeffs = [cp.eval_at(point) for cp in self.coeff_polys]
        coeffs.append(1)
        return UniPoly(self.ring, coeffs)

    def __mul__(self, other: "ShapedMultiPoly") -> "ShapedMultiPoly":
        """Product of shaped polynomials (shape is closed under products)."""
        if self.ring != other.ring or self.nvars != other.nvars:
            raise ValueError("mixed polynomial arithmetic")
        r = self.ring
        v = self.nvars - 1
        l, m = self.main_deg, other.main_deg
        one = MPoly.constant(r, v, 1)
        a = list(self.coeff_polys) + [one]
        b = list(other.coeff_polys) + [one]
        out = []
        for k in range(l + m):
            acc = MPoly.zero(r, v, l + m - k)
            for i in range(max(0, k - m), min(k, l) + 1):
                acc = acc + (a[i] * b[k - i])
            out.append(acc.resize(l + m - k))
        return ShapedMultiPoly(r, self.nvars, l + m, out)
