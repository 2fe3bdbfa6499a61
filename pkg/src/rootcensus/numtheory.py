"""Integer helpers: primality, divisors, totient, and the exact variance
formula for the root-count distribution over Z_n.

Everything here is exact integer / Fraction arithmetic.  The variance of the
number of distinct roots of a random monic polynomial over Z_n (degree >= 2)
is a divisor sum involving Euler's totient; `theory_var_zn` evaluates it as a
reduced fraction and cross-checks the two equivalent forms against each other.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

# Smallest-prime-factor sieve, grown on demand.  Keeps totient/divisors cheap
# when callers sweep n up to 10^4 or so.
_spf: list[int] = [0, 1]


def _grow_spf(limit: int) -> None:
    global _spf
    if limit < len(_spf):
        return
    size = max(limit + 1, 2 * len(_spf))
    spf = list(range(size))
    for p in range(2, int(size**0.5) + 1):
        if spf[p] == p:
            for m in range(p * p, size, p):
                if spf[m] == m:
                    spf[m] = p
    _spf = spf


def gcd_int(a: int, b: int) -> int:
    """Nonnegative gcd; gcd_int(0, n) == n."""
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def is_prime(n: int) -> bool:
    """Deterministic trial division up to sqrt(n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as sorted (prime, exponent) pairs."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    if n < 10**6:
        _grow_spf(n)
        out: list[tuple[int, int]] = []
        while n > 1:
            p = _spf[n]
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        return out
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            out.append((f, e))
        f += 1 if f == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def divisors(n: int) -> list[int]:
    """All divisors of n >= 1, sorted ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def is_prime_power(n: int) -> tuple[int, int] | None:
    """(p, k) with n == p**k if n is a prime power, else None."""
    if n < 2:
        return None
    facts = factorize(n)
    if len(facts) == 1:
        return facts[0]
    return None


def totient(n: int) -> int:
    """Euler's totient: count of 1 <= i <= n with gcd(i, n) == 1."""
    if n < 1:
        raise ValueError("totient undefined for n < 1")
    phi = n
    for p, _ in factorize(n):
        phi -= phi // p
    return phi


def theory_var_zn_forms(n: int) -> tuple[Fraction, Fraction]:
    """Both divisor-sum forms of the root-count variance:
    sum_{d|n, d!=n} (d/n)*phi(n/d) and sum_{d|n} ((d-1)/n)*phi(n/d).
    They are equal (the proof is one application of the totient's Gauss sum),
    and callers may check that on any input."""
    if n < 2:
        raise ValueError("need n >= 2")
    divs = divisors(n)
    proper = sum(Fraction(d, n) * totient(n // d) for d in divs if d != n)
    full = sum(Fraction(d - 1, n) * totient(n // d) for d in divs)
    return proper, full


def theory_var_zn(n: int) -> Fraction:
    """Exact variance of the distinct-root count of a random monic polynomial
    over Z_n, any degree >= 2, as a reduced fraction.  Evaluates both divisor
    sums and insists they agree."""
    proper, full = theory_var_zn_forms(n)
    assert proper == full, f"divisor-sum forms disagree at n={n}"
    return proper


def a006579(n: int) -> int:
    """sum_{k=1}^{n-1} gcd(n, k); equals n * theory_var_zn(n) for n >= 2."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n <= 2:
        return n - 1
    if n < 2**62:
        return int(np.gcd(n, np.arange(1, n, dtype=np.int64)).sum())
    return sum(gcd_int(n, k) for k in range(1, n))
