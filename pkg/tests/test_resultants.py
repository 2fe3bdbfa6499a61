import random
from itertools import product

import pytest

from rootcensus.multipoly import MPoly, ShapedMultiPoly
from rootcensus.polytext import parse_terms
from rootcensus.resultants import (
    resultant_det,
    resultant_poly,
    resultant_specialized,
    sylvester_matrix,
)
from rootcensus.rings import field_make
from rootcensus.unipoly import UniPoly, resultant_uni, uni_gcd
from rootcensus.validate import resultant_check

F5 = field_make(5)
F7 = field_make(7)


def monic_from_index(ring, deg, idx):
    q = ring.cardinality
    coeffs = []
    for _ in range(deg):
        coeffs.append(idx % q)
        idx //= q
    coeffs.append(1)
    return UniPoly(ring, coeffs)


def shaped(text, nvars, ring):
    return ShapedMultiPoly.from_terms(ring, nvars, parse_terms(text, nvars))


def test_sylvester_layout_2x2():
    a, b = 3, 5
    f = UniPoly(F7, [F7.neg(a), 1])
    g = UniPoly(F7, [F7.neg(b), 1])
    mat = sylvester_matrix(f, g)
    assert mat.size == 2
    assert mat.entries == [[1, F7.neg(a)], [1, F7.neg(b)]]
    expected = F7.sub(a, b)
    assert resultant_det(f, g) == expected
    assert resultant_uni(f, g) == expected


def test_resultant_rejects_degree_zero():
    f = UniPoly(F7, [1, 1])
    c = UniPoly(F7, [4])
    for bad_pair in [(f, c), (c, f), (c, c)]:
        with pytest.raises(ValueError):
            resultant_uni(*bad_pair)
        with pytest.raises(ValueError):
            sylvester_matrix(*bad_pair)


def test_euclid_matches_determinant_random():
    rng = random.Random(99)
    for _ in range(10_000):
        df = rng.randint(1, 5)
        dg = rng.randint(1, 5)
        f = UniPoly(F7, [rng.randrange(7) for _ in range(df)] + [rng.randrange(1, 7)])
        g = UniPoly(F7, [rng.randrange(7) for _ in range(dg)] + [rng.randrange(1, 7)])
        assert resultant_uni(f, g) == resultant_det(f, g)


def test_gcd_resultant_equivalence_exhaustive():
    # every monic pair up to degree 3 over small fields; over q <= 5 the
    # non-coprime pair count must be exactly q^(n+m-1)
    for q in [2, 3, 4, 5, 7]:
        ring = field_make(q)
        for n in range(1, 4):
            for m in range(1, 4):
                noncoprime = 0
                for i in range(q**n):
                    f = monic_from_index(ring, n, i)
                    for j in range(q**m):
                        g = monic_from_index(ring, m, j)
                        res = resultant_uni(f, g)
                        shares = not uni_gcd(f, g).is_one()
                        assert shares == (res == 0)
                        noncoprime += shares
                if q <= 5:
                    assert noncoprime == q ** (n + m - 1)


def test_trivariate_hand_expanded_eliminant():
    # A = x0^2 + x1, B = x0^2 + x1 + (x2 - 1): eliminating x0 leaves
    # (x2 - 1)^2 exactly (hand expansion of the 4x4 determinant)
    a = shaped("x0^2 + x1", 3, F7)
    b = shaped("x0^2 + x1 + x2 - 1", 3, F7)
    r = resultant_poly(a, b)
    assert r.terms() == {(0, 2): 1, (0, 1): 5, (0, 0): 1}  # x2^2 - 2*x2 + 1 mod 7
    for pt in product(range(7), repeat=2):
        assert resultant_specialized(a, b, pt, path="euclid") == r.eval_at(pt)


def test_univariate_eliminant_matches_scalar_resultant():
    # one-variable shaped polynomials: the eliminant is a constant and all
    # three computation routes must agree
    rng = random.Random(4)
    for _ in range(200):
        l, m = rng.randint(1, 3), rng.randint(1, 3)
        a = ShapedMultiPoly.random(F5, 1, l, rng)
        b = ShapedMultiPoly.random(F5, 1, m, rng)
        fa, fb = a.multi_eval(()), b.multi_eval(())
        scalar = resultant_poly(a, b).eval_at(())
        assert scalar == resultant_uni(fa, fb) == resultant_det(fa, fb)


def test_noncoprime_pairs_have_zero_eliminant():
    rng = random.Random(12)
    for _ in range(40):
        nvars = rng.choice([2, 3])
        f = ShapedMultiPoly.random(F5, nvars, rng.randint(1, 2), rng)
        u = ShapedMultiPoly.random(F5, nvars, rng.randint(1, 2), rng)
        g = f * u
        assert resultant_poly(f, g).is_zero()
        # and a pair with a unit gcd certificate at some point is nonzero
        h = ShapedMultiPoly.random(F5, nvars, rng.randint(1, 2), rng)
        r = resultant_poly(f, h)
        points = list(product(range(5), repeat=nvars - 1))
        if any(
            uni_gcd(f.multi_eval(p), h.multi_eval(p)).is_one() for p in points
        ):
            assert not r.is_zero()


def test_bezout_bound_observed():
    rng = random.Random(31)
    for _ in range(100):
        nvars = rng.choice([2, 3])
        l, m = rng.randint(1, 3), rng.randint(1, 3)
        a = ShapedMultiPoly.random(F7, nvars, l, rng)
        b = ShapedMultiPoly.random(F7, nvars, m, rng)
        assert resultant_poly(a, b).total_degree() <= l * m


def test_quadratic_bivariate_root_cap():
    # deg R <= 4 over F_7: a coprime quadratic pair is unlucky at <= 4 points
    rng = random.Random(8)
    for _ in range(100):
        a = ShapedMultiPoly.random(F7, 2, 2, rng)
        b = ShapedMultiPoly.random(F7, 2, 2, rng)
        r = resultant_poly(a, b)
        unlucky = sum(
            1
            for gamma in range(7)
            if not uni_gcd(a.multi_eval((gamma,)), b.multi_eval((gamma,))).is_one()
        )
        if r.is_zero():
            assert unlucky == 7
        else:
            assert unlucky <= 4
            assert unlucky == sum(1 for gamma in range(7) if r.eval_at((gamma,)) == 0)


def test_specialization_identity_random_suite():
    rep = resultant_check(trials=120, seed=5)
    assert rep.passed, rep.failures[:5]
    assert rep.points_checked > 0


def test_resultant_poly_rejects_mixed_inputs():
    a = shaped("x0 + x1", 2, F5)
    b = shaped("x0 + x1", 2, F7)
    with pytest.raises(ValueError):
        sylvester_matrix(a, b)
    with pytest.raises(TypeError):
        sylvester_matrix(a, UniPoly(F5, [1, 1]))
