from fractions import Fraction
from math import gcd

import pytest

from rootcensus.numtheory import (
    a006579,
    divisors,
    factorize,
    gcd_int,
    is_prime,
    is_prime_power,
    theory_var_zn,
    theory_var_zn_forms,
    totient,
)

# Remark-1 style reference row: variance of the root count over Z_n for any
# degree >= 2, as reduced fractions, n = 2..16.
VAR_TABLE = {
    2: Fraction(1, 2),
    3: Fraction(2, 3),
    4: Fraction(1),
    5: Fraction(4, 5),
    6: Fraction(3, 2),
    7: Fraction(6, 7),
    8: Fraction(3, 2),
    9: Fraction(4, 3),
    10: Fraction(17, 10),
    11: Fraction(10, 11),
    12: Fraction(7, 3),
    13: Fraction(12, 13),
    14: Fraction(25, 14),
    15: Fraction(2),
    16: Fraction(2),
}

A_TABLE = {2: 1, 3: 2, 4: 4, 5: 4, 6: 9, 7: 6, 8: 12, 9: 12, 10: 17,
           11: 10, 12: 28, 13: 12, 14: 25, 15: 30, 16: 32}


def brute_totient(n):
    return sum(1 for i in range(1, n + 1) if gcd(i, n) == 1)


def brute_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def test_gcd_int_identity_case():
    assert gcd_int(0, 7) == 7
    assert gcd_int(7, 0) == 7
    assert gcd_int(0, 0) == 0
    assert gcd_int(12, 18) == 6


def test_is_prime_small():
    primes = [2, 3, 5, 7, 11, 13, 97, 101, 104729]
    for p in primes:
        assert is_prime(p)
    for c in [0, 1, 4, 6, 9, 15, 100, 104730]:
        assert not is_prime(c)


def test_totient_against_brute_force():
    assert totient(1) == 1
    assert totient(12) == 4
    for n in range(1, 300):
        assert totient(n) == brute_totient(n)
    with pytest.raises(ValueError):
        totient(0)


def test_totient_gauss_sum():
    # sum over divisors of phi(n/d) telescopes to n
    for n in range(1, 1001):
        assert sum(totient(n // d) for d in divisors(n)) == n


def test_divisors_and_factorize():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
    for n in range(1, 200):
        assert divisors(n) == brute_divisors(n)
        prod = 1
        for p, e in factorize(n):
            assert is_prime(p)
            prod *= p**e
        assert prod == n


def test_is_prime_power():
    assert is_prime_power(16) == (2, 4)
    assert is_prime_power(7) == (7, 1)
    assert is_prime_power(27) == (3, 3)
    assert is_prime_power(1) is None
    assert is_prime_power(12) is None
    assert is_prime_power(6) is None


def test_theory_var_matches_reference_table():
    for n, expected in VAR_TABLE.items():
        assert theory_var_zn(n) == expected


def test_theory_var_rejects_small_n():
    with pytest.raises(ValueError):
        theory_var_zn(1)


def test_a006579_small_values():
    assert a006579(1) == 0
    assert a006579(2) == 1
    assert a006579(12) == 28
    for n, expected in A_TABLE.items():
        assert a006579(n) == expected
    # definition cross-check against a plain python sum
    for n in range(1, 200):
        assert a006579(n) == sum(gcd(n, k) for k in range(1, n))


def test_variance_times_n_is_gcd_sum():
    for n in range(2, 2000):
        v = theory_var_zn(n)
        assert v * n == a006579(n)


def test_prime_power_variance_closed_form():
    for n in range(2, 2000):
        pk = is_prime_power(n)
        if pk is None:
            continue
        p, k = pk
        assert theory_var_zn(n) == Fraction(k * (p - 1), p)


def test_both_divisor_sum_forms_agree():
    for n in range(2, 2000):
        proper, full = theory_var_zn_forms(n)
        assert proper == full
