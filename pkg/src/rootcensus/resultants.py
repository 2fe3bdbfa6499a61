"""Sylvester matrices and resultants, computed along independent routes.

For univariate inputs over a field, `resultant_det` takes the determinant of
the Sylvester matrix by Gaussian elimination while `unipoly.resultant_uni`
walks the Euclidean remainder sequence; they must agree bit for bit, sign
included (first argument's coefficient rows on top).

For multivariate inputs monic in the main variable, `resultant_poly` builds
the Sylvester matrix over the polynomial coefficient ring and expands the
determinant by minors (memoized over column subsets, zero entries skipped).
`resultant_specialized` then connects the two worlds: evaluating that
eliminant at a point equals the univariate resultant of the specialized
inputs, which is the identity the whole unlucky-point analysis leans on.
"""

from __future__ import annotations

from .multipoly import MPoly, ShapedMultiPoly
from .rings import Ring
from .unipoly import UniPoly, resultant_uni


class SylvesterMatrix:
    """(n+m) x (n+m) Sylvester layout: m shifted coefficient rows of the
    first polynomial, then n of the second.  Entries live in whatever
    commutative ring the coefficients came from."""

    __slots__ = ("entries", "n", "m")

    def __init__(self, entries, n: int, m: int):
        self.entries = entries
        self.n = n
        self.m = m

    @property
    def size(self) -> int:
        return self.n + self.m


def _sylvester(a_desc, b_desc, zero):
    """Rows from descending coefficient lists; `zero` pads."""
    n = len(a_desc) - 1
    m = len(b_desc) - 1
    if n < 1 or m < 1:
        raise ValueError("Sylvester matrix needs both degrees >= 1")
    size = n + m
    rows = []
    for i in range(m):
        rows.append([zero] * i + list(a_desc) + [zero] * (size - n - 1 - i))
    for i in range(n):
        rows.append([zero] * i + list(b_desc) + [zero] * (size - m - 1 - i))
    return SylvesterMatrix(rows, n, m)


def sylvester_matrix(f, g) -> SylvesterMatrix:
    """Sylvester matrix of two univariate or shaped multivariate polynomials
    (main variable first for the shaped case)."""
    if isinstance(f, UniPoly) and isinstance(g, UniPoly):
        f._check_same_ring(g)
        return _sylvester(
            list(reversed(f.coeffs)), list(reversed(g.coeffs)), 0
        )
    if isinstance(f, ShapedMultiPoly) and isinstance(g, ShapedMultiPoly):
        if f.ring != g.ring or f.nvars != g.nvars:
            raise ValueError("mixed polynomial arithmetic")
        r = f.ring
        v = f.nvars - 1
        one = MPoly.constant(r, v, 1)
        a = [one] + [f.coeff_polys[i] for i in range(f.main_deg - 1, -1, -1)]
        b = [one] + [g.coeff_polys[i] for i in range(g.main_deg - 1, -1, -1)]
        return _sylvester(a, b, MPoly.zero(r, v))
    raise TypeError("expected two UniPoly or two ShapedMultiPoly")


def _det_field(rows: list[list[int]], ring: Ring) -> int:
    """Determinant over a field by Gaussian elimination with row swaps."""
    k = len(rows)
    m = [list(row) for row in rows]
    det = 1
    for col in range(k):
        pivot = next((r for r in range(col, k) if m[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = ring.neg(det)
        pc = m[col][col]
        det = ring.mul(det, pc)
        inv = ring.inv(pc)
        for r in range(col + 1, k):
            factor = ring.mul(m[r][col], inv)
            if factor == 0:
                continue
            for c in range(col, k):
                m[r][c] = ring.sub(m[r][c], ring.mul(factor, m[col][c]))
    return det


def _det_poly(rows: list[list[MPoly]]) -> MPoly:
    """Determinant with polynomial entries by Laplace expansion, memoized on
    the set of unused columns.  Rows are visited sparsest first, which keeps
    the reachable subset count small for the banded Sylvester layout."""
    k = len(rows)
    if k == 0:
        raise ValueError("empty matrix")
    ring = rows[0][0].ring
    nv = rows[0][0].nvars
    order = sorted(range(k), key=lambda r: sum(1 for e in rows[r] if not e.is_zero()))
    perm_sign = _permutation_sign(order)
    zero = MPoly.zero(ring, nv)
    memo: dict[int, MPoly] = {}
    full_mask = (1 << k) - 1

    def rec(depth: int, mask: int) -> MPoly:
        if depth == k:
            return MPoly.constant(ring, nv, 1)
        cached = memo.get(mask)
        if cached is not None:
            return cached
        row = rows[order[depth]]
        acc = zero
        pos = 0
        for col in range(k):
            bit = 1 << col
            if not (mask & bit):
                continue
            entry = row[col]
            if not entry.is_zero():
                sub = rec(depth + 1, mask & ~bit)
                term = entry * sub
                acc = acc + term if pos % 2 == 0 else acc - term
            pos += 1
        memo[mask] = acc
        return acc

    det = rec(0, full_mask)
    return det if perm_sign > 0 else -det


def _permutation_sign(perm: list[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def resultant_det(f: UniPoly, g: UniPoly) -> int:
    """det(Sylvester) for univariate polynomials over a field."""
    if not f.ring.is_field:
        raise ValueError("resultant requires a field coefficient ring")
    mat = sylvester_matrix(f, g)
    return _det_field(mat.entries, f.ring)


def resultant_poly(f: ShapedMultiPoly, g: ShapedMultiPoly) -> MPoly:
    """Eliminant R of two shaped polynomials: the determinant of their
    Sylvester matrix in the main variable, a polynomial in the remaining
    variables.  The Bezout degree bound deg R <= deg f * deg g is enforced
    as a post-check."""
    mat = sylvester_matrix(f, g)
    det = _det_poly(mat.entries)
    bound = f.main_deg * g.main_deg
    actual = det.total_degree()
    if actual > bound:
        raise AssertionError(
            f"eliminant degree {actual} exceeds Bezout bound {bound}"
        )
    return det.trim()


def resultant_specialized(f: ShapedMultiPoly, g: ShapedMultiPoly, point,
                          path: str = "euclid") -> int:
    """Resultant of f and g specialized at `point` (values for the non-main
    variables).

    path="euclid": univariate resultant of the specialized polynomials.
    path="poly":   evaluate the multivariate eliminant at the point.
    Both are exposed so each can serve as the other's oracle.
    """
    if path == "euclid":
        return resultant_uni(f.multi_eval(point), g.multi_eval(point))
    if path == "poly":
        return resultant_poly(f, g).eval_at(point)
    raise ValueError(f"unknown path {path!r}")
