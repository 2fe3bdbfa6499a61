"""Census engines: exhaustive and Monte Carlo sweeps over polynomial
populations, producing exact outcome-frequency distributions.

Three experiments share the machinery:

* `zn_root_census`: every monic degree-m polynomial over Z_n, outcome = its
  number of distinct roots (full evaluation scan).

* `fq_pair_census` / `mv_census`: pairs of monic shaped polynomials over
  F_q, outcome = the number of evaluation points at which the specialized
  pair has a nontrivial gcd.  Exhaustive mode enumerates unordered pairs and
  weights the diagonal once and off-diagonal pairs twice, which reconstructs
  the ordered-pair distribution at half the work (only valid, and only used,
  when both sides have the same shape).

* `unlucky_sim`: the GCD-interpolation model.  Random (or fixed) monic
  cofactors are combined with a common factor, evaluation points are drawn
  uniformly, and a point is unlucky when the specialized cofactors stop
  being coprime.

The hot loops run on numpy lookup tables: a "bad pair" table saying which
univariate monic pairs have gcd != 1 (built by running the real Euclidean
gcd on every pair once) and per-point specialization tables mapping each
shaped polynomial to the index of its specialized univariate image.  Counts
are merged as exact integers; exhaustive statistics are exact rationals and
floats never enter an exhaustive result.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

from .multipoly import ShapedMultiPoly, simplex_exponents
from .numtheory import is_prime, is_prime_power, theory_var_zn
from .parallel import merge_freq, parallel_map, split_range
from .resultants import resultant_poly
from .rings import Ring, RingSpec, field_make, ring_make
from .unipoly import UniPoly, uni_gcd

EXHAUSTIVE = "exhaustive"
MONTECARLO = "montecarlo"

DEFAULT_BUDGET = 2**31


class BudgetExceededError(RuntimeError):
    """Raised before starting a run that would exceed the configured number
    of gcd evaluations."""


@dataclass(frozen=True)
class CensusConfig:
    mode: str = EXHAUSTIVE
    samples: int = 100_000
    seed: int = 0
    workers: int = 1
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.mode not in (EXHAUSTIVE, MONTECARLO):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.workers < 1:
            raise ValueError("need at least one worker")


@dataclass(frozen=True)
class McStats:
    seed: int
    samples: int
    workers: int
    mean: float
    stderr_mean: float
    variance: float
    stderr_variance: float


@dataclass
class CensusResult:
    kind: str
    params: dict
    mode: str
    population: int
    freq: tuple[int, ...]
    theory_mean: Fraction
    theory_var: Fraction
    mean: Fraction | None = None
    variance: Fraction | None = None
    mc: McStats | None = None
    binomial: tuple[Fraction, ...] | None = None
    extras: dict = field(default_factory=dict)

    def matches_theory(self) -> bool:
        """Exact equality for exhaustive runs; for Monte Carlo, mean within 3
        and variance within 4 estimated standard errors."""
        if self.mode == EXHAUSTIVE:
            return self.mean == self.theory_mean and self.variance == self.theory_var
        st = self.mc
        mean_ok = abs(st.mean - float(self.theory_mean)) <= 3 * st.stderr_mean
        var_ok = abs(st.variance - float(self.theory_var)) <= 4 * st.stderr_variance
        return mean_ok and var_ok


def _freq_moments(freq, population: int) -> tuple[Fraction, Fraction]:
    s1 = sum(k * c for k, c in enumerate(freq))
    s2 = sum(k * k * c for k, c in enumerate(freq))
    mean = Fraction(s1, population)
    var = Fraction(s2, population) - mean * mean
    return mean, var


def _mc_stats(freq, seed: int, workers: int) -> McStats:
    n = sum(freq)
    if n < 3:
        raise ValueError("need at least 3 samples for Monte Carlo statistics")
    s1 = sum(k * c for k, c in enumerate(freq))
    s2 = sum(k * k * c for k, c in enumerate(freq))
    mean = s1 / n
    var = (s2 - n * mean * mean) / (n - 1)
    stderr_mean = math.sqrt(max(var, 0.0) / n)
    # Delete-one jackknife stderr for the variance estimator, computed in
    # closed form from the outcome frequencies.
    reps = []
    weights = []
    for k, c in enumerate(freq):
        if c == 0:
            continue
        n1 = n - 1
        m1 = (s1 - k) / n1
        v1 = ((s2 - k * k) - n1 * m1 * m1) / (n1 - 1)
        reps.append(v1)
        weights.append(c)
    jbar = sum(w * v for w, v in zip(weights, reps)) / n
    vj = (n - 1) / n * sum(w * (v - jbar) ** 2 for w, v in zip(weights, reps))
    return McStats(
        seed=seed,
        samples=n,
        workers=workers,
        mean=mean,
        stderr_mean=stderr_mean,
        variance=var,
        stderr_variance=math.sqrt(max(vj, 0.0)),
    )


# ---------------------------------------------------------------------------
# Z_n root-count census
# ---------------------------------------------------------------------------


def _zn_chunk(n: int, m: int, lo: int, hi: int) -> list[int]:
    """Histogram root counts of monic degree-m polynomials with enumeration
    indices in [lo, hi).  Index digits (base n, least significant first) are
    the ascending coefficients below the monic lead."""
    freq = np.zeros(n + 1, dtype=np.int64)
    if hi <= lo:
        return freq.tolist()
    idx = np.arange(lo, hi, dtype=np.int64)
    coeffs = np.empty((hi - lo, m), dtype=np.int64)
    scale = 1
    for j in range(m):
        coeffs[:, j] = (idx // scale) % n
        scale *= n
    alphas = np.arange(n, dtype=np.int64)
    powers = np.empty((m, n), dtype=np.int64)
    p = np.ones(n, dtype=np.int64)
    for j in range(m):
        powers[j] = p
        p = (p * alphas) % n
    values = (coeffs @ powers + p) % n  # p holds alpha^m, the monic lead
    roots = (values == 0).sum(axis=1)
    freq += np.bincount(roots, minlength=n + 1)
    return freq.tolist()


def zn_root_census(n: int, m: int, config: CensusConfig | None = None) -> CensusResult:
    """Distribution of the number of distinct roots over all n^m monic
    degree-m polynomials in Z_n[x].  Exhaustive only."""
    config = config or CensusConfig()
    if n < 2:
        raise ValueError("need modulus n >= 2")
    if m < 1:
        raise ValueError("need degree m >= 1")
    population = n**m
    if population * n > config.budget:
        raise BudgetExceededError(
            f"{population}*{n} evaluations exceed budget {config.budget}"
        )
    chunks = split_range(population, config.workers)
    parts = parallel_map(_zn_chunk, [(n, m, lo, hi) for lo, hi in chunks],
                         config.workers)
    freq = merge_freq(parts)
    assert sum(freq) == population, "lost polynomials while merging"
    mean, var = _freq_moments(freq, population)
    return CensusResult(
        kind="zn_roots",
        params={"n": n, "m": m},
        mode=EXHAUSTIVE,
        population=population,
        freq=tuple(freq),
        theory_mean=Fraction(1),
        theory_var=Fraction(0) if m == 1 else theory_var_zn(n),
        mean=mean,
        variance=var,
    )


# ---------------------------------------------------------------------------
# Shared tables for the pair censuses
# ---------------------------------------------------------------------------


def _uni_from_index(ring: Ring, deg: int, idx: int) -> UniPoly:
    """Monic univariate of degree `deg` whose lower coefficients are the
    base-q digits of idx, constant coefficient first."""
    q = ring.cardinality
    coeffs = []
    for _ in range(deg):
        coeffs.append(idx % q)
        idx //= q
    coeffs.append(1)
    return UniPoly(ring, coeffs)


@lru_cache(maxsize=32)
def _bad_table(spec: RingSpec, l: int, m: int) -> np.ndarray:
    """bad[i, j] = 1 iff the monic degree-l poly i and monic degree-m poly j
    have gcd != 1.  Built by running the actual Euclidean gcd on each pair."""
    ring = ring_make(spec)
    q = ring.cardinality
    fs = [_uni_from_index(ring, l, i) for i in range(q**l)]
    gs = fs if m == l else [_uni_from_index(ring, m, j) for j in range(q**m)]
    bad = np.empty((q**l, q**m), dtype=np.uint8)
    for i, f in enumerate(fs):
        for j, g in enumerate(gs):
            bad[i, j] = 0 if uni_gcd(f, g).is_one() else 1
    return bad


def _eval_points(q: int, nvars: int) -> list[tuple[int, ...]]:
    return list(itertools.product(range(q), repeat=nvars - 1))


def _uidx_at_point(ring: Ring, nvars: int, deg: int, slots: np.ndarray,
                   point) -> np.ndarray:
    """For a batch of shaped polynomials given by their slot digit matrix,
    the index of each one's specialized univariate image at `point`.

    Works over any ring by routing sums and products through the ring's
    lookup tables, so prime and extension fields share one code path.
    """
    add_t = ring.add_table()
    mul_t = ring.mul_table()
    q = ring.cardinality
    v = nvars - 1
    uidx = np.zeros(slots.shape[0], dtype=np.int64)
    offset = 0
    place = 1
    for power in range(deg):
        exps = simplex_exponents(v, deg - power)
        acc = np.zeros(slots.shape[0], dtype=add_t.dtype)
        for j, e in enumerate(exps):
            mono = 1
            for val, ex in zip(point, e):
                if ex:
                    mono = ring.mul(mono, ring.pow(val, ex))
            if mono != 0:
                acc = add_t[acc, mul_t[slots[:, offset + j], mono]]
        uidx += acc.astype(np.int64) * place
        offset += len(exps)
        place *= q
    return uidx


@lru_cache(maxsize=16)
def _spec_table(spec: RingSpec, nvars: int, deg: int) -> np.ndarray:
    """spec[t, i] = univariate index of shaped polynomial i specialized at
    evaluation point t, for every shaped polynomial of this degree."""
    ring = ring_make(spec)
    q = ring.cardinality
    nslots = ShapedMultiPoly.slot_count(nvars, deg)
    npolys = q**nslots
    idx = np.arange(npolys, dtype=np.int64)
    slots = np.empty((npolys, nslots), dtype=np.uint8)
    scale = 1
    for s in range(nslots):
        slots[:, s] = (idx // scale) % q
        scale *= q
    points = _eval_points(q, nvars)
    dtype = np.uint8 if q**deg <= 255 else np.int32
    table = np.empty((len(points), npolys), dtype=dtype)
    for t, pt in enumerate(points):
        table[t] = _uidx_at_point(ring, nvars, deg, slots, pt)
    return table


def _pair_chunk_exhaustive(spec: RingSpec, nvars: int, l: int, m: int,
                           lo: int, hi: int) -> list[int]:
    """Outcome histogram for outer polynomial indices in [lo, hi).

    When both sides share a shape (l == m) the inner loop starts at the outer
    index and the off-diagonal weight is 2; otherwise the full rectangle is
    swept with weight 1.
    """
    bad = _bad_table(spec, l, m)
    sf = _spec_table(spec, nvars, l)
    sg = sf if l == m else _spec_table(spec, nvars, m)
    triangular = l == m
    npoints = sf.shape[0]
    freq = np.zeros(npoints + 1, dtype=np.int64)
    for i in range(lo, hi):
        cols = sg[:, i:] if triangular else sg
        x = np.zeros(cols.shape[1], dtype=np.int32)
        for t in range(npoints):
            x += bad[sf[t, i]][cols[t]]
        counts = np.bincount(x, minlength=npoints + 1)
        if triangular:
            freq += 2 * counts
            freq[x[0]] -= 1  # the diagonal pair (i, i) counts once
        else:
            freq += counts
    return freq.tolist()


def _pair_chunk_mc(spec: RingSpec, nvars: int, l: int, m: int,
                   seed: int, worker: int, count: int) -> list[int]:
    """Histogram outcomes for `count` uniformly sampled ordered pairs, drawn
    from the (seed, worker) stream."""
    ring = ring_make(spec)
    q = ring.cardinality
    points = _eval_points(q, nvars)
    freq = np.zeros(len(points) + 1, dtype=np.int64)
    if count <= 0:
        return freq.tolist()
    bad = _bad_table(spec, l, m)
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, worker])))
    sf = rng.integers(0, q, size=(count, ShapedMultiPoly.slot_count(nvars, l)),
                      dtype=np.uint8)
    sg = rng.integers(0, q, size=(count, ShapedMultiPoly.slot_count(nvars, m)),
                      dtype=np.uint8)
    x = np.zeros(count, dtype=np.int32)
    for pt in points:
        uf = _uidx_at_point(ring, nvars, l, sf, pt)
        ug = _uidx_at_point(ring, nvars, m, sg, pt)
        x += bad[uf, ug]
    freq += np.bincount(x, minlength=len(points) + 1)
    return freq.tolist()


def _pair_census(kind: str, q: int, nvars: int, l: int, m: int,
                 config: CensusConfig) -> CensusResult:
    if is_prime_power(q) is None:
        raise ValueError(f"{q} is not a prime power")
    if nvars < 2:
        raise ValueError("need at least one evaluation variable")
    if l < 1 or m < 1:
        raise ValueError("both total degrees must be >= 1")
    ring = field_make(q)
    spec = ring.spec
    nf = ShapedMultiPoly.population(ring, nvars, l)
    ng = ShapedMultiPoly.population(ring, nvars, m)
    npoints = q ** (nvars - 1)
    population = nf * ng
    theory_mean = Fraction(q) ** (nvars - 2)
    theory_var = theory_mean * Fraction(q - 1, q)
    params = {"q": q, "deg_f": l, "deg_g": m}
    if kind == "mv_census":
        params = {"q": q, "nvars": nvars, "deg_f": l, "deg_g": m}

    if config.mode == EXHAUSTIVE:
        work = (nf * (nf + 1) // 2 if l == m else population) * npoints
        if work > config.budget:
            raise BudgetExceededError(
                f"{work} gcd evaluations exceed budget {config.budget};"
                " raise the budget to confirm a long run"
            )
        chunks = split_range(nf, config.workers)
        parts = parallel_map(
            _pair_chunk_exhaustive,
            [(spec, nvars, l, m, lo, hi) for lo, hi in chunks],
            config.workers,
        )
        freq = merge_freq(parts)
        assert sum(freq) == population, "pair weighting lost mass"
        mean, var = _freq_moments(freq, population)
        result = CensusResult(
            kind=kind,
            params=params,
            mode=EXHAUSTIVE,
            population=population,
            freq=tuple(freq),
            theory_mean=theory_mean,
            theory_var=theory_var,
            mean=mean,
            variance=var,
            binomial=tuple(binomial_pmf_scaled(npoints, q, population)),
        )
    else:
        work = config.samples * npoints
        if work > config.budget:
            raise BudgetExceededError(
                f"{work} gcd evaluations exceed budget {config.budget}"
            )
        sizes = split_range(config.samples, config.workers)
        parts = parallel_map(
            _pair_chunk_mc,
            [
                (spec, nvars, l, m, config.seed, w, hi - lo)
                for w, (lo, hi) in enumerate(sizes)
            ],
            config.workers,
        )
        freq = merge_freq(parts)
        assert sum(freq) == config.samples
        result = CensusResult(
            kind=kind,
            params=params,
            mode=MONTECARLO,
            population=config.samples,
            freq=tuple(freq),
            theory_mean=theory_mean,
            theory_var=theory_var,
            mc=_mc_stats(freq, config.seed, config.workers),
        )

    # Per-point non-coprimality rate; the theorem pins it at exactly 1/q.
    if result.mode == EXHAUSTIVE:
        rate = result.mean / npoints
        result.extras["point_rate"] = rate
    else:
        result.extras["point_rate"] = result.mc.mean / npoints
        result.extras["point_rate_stderr"] = result.mc.stderr_mean / npoints
    result.extras["point_rate_ref"] = Fraction(1, q)
    result.extras["points"] = npoints

    if nvars == 2 and result.mode == EXHAUSTIVE:
        # Resultant degree argument: a pair is unlucky at more than l*m
        # points only by being non-coprime, which makes every point unlucky.
        gap = range(l * m + 1, npoints)
        result.extras["gap_zero_ok"] = all(result.freq[k] == 0 for k in gap)
        if npoints > l * m:
            result.extras["noncoprime_pairs"] = result.freq[npoints]
    return result


def fq_pair_census(q: int, n: int, m: int,
                   config: CensusConfig | None = None) -> CensusResult:
    """Distribution of the count of gamma in F_q at which a random pair of
    monic shaped bivariate polynomials (total degrees n and m) stops being
    coprime after specialization."""
    return _pair_census("pair_census", q, 2, n, m, config or CensusConfig())


def mv_census(q: int, nvars: int, l: int, m: int,
              config: CensusConfig | None = None) -> CensusResult:
    """Multivariate generalization: evaluation points range over
    F_q^(nvars-1); the expected outcome is q^(nvars-2)."""
    return _pair_census("mv_census", q, nvars, l, m, config or CensusConfig())


def binomial_pmf_scaled(trials: int, q: int, population: int) -> list[Fraction]:
    """population * Prob[Binomial(trials, 1/q) = k] for k = 0..trials, exact."""
    out = []
    for k in range(trials + 1):
        prob = Fraction(comb(trials, k) * (q - 1) ** (trials - k), q**trials)
        out.append(population * prob)
    return out


def binomial_reference(q: int, population: int) -> list[Fraction]:
    """Reference counts B_k = population * Prob[Y = k] for Y binomial with q
    trials at success probability 1/q, as exact rationals."""
    if q < 1:
        raise ValueError("need q >= 1")
    return binomial_pmf_scaled(q, q, population)


# ---------------------------------------------------------------------------
# Unlucky-evaluation-point simulation
# ---------------------------------------------------------------------------


@dataclass
class UnluckyReport:
    p: int
    nvars: int
    samples: int
    seed: int
    mode: str  # "fixed" or "drawn"
    unlucky: int
    deg_a: int
    deg_b: int
    deg_g: int
    slice_counts: dict  # first non-main variable value -> [points, unlucky]
    cofactors_coprime: bool | None = None  # fixed mode
    coprime_draws: int | None = None  # drawn mode
    coprime_unlucky: int | None = None

    @property
    def frequency(self) -> float:
        return self.unlucky / self.samples

    @property
    def stderr(self) -> float:
        f = self.frequency
        return math.sqrt(f * (1 - f) / self.samples)

    @property
    def reference(self) -> Fraction:
        """Per-point non-coprimality probability over all shaped pairs."""
        return Fraction(1, self.p)

    @property
    def sz_bound(self) -> Fraction:
        """Schwartz-Zippel / Bezout bound deg(Ahat)*deg(Bhat)/p, capped at 1."""
        return min(Fraction(1), Fraction(self.deg_a * self.deg_b, self.p))


def unlucky_sim(p: int, samples: int, seed: int,
                ahat: ShapedMultiPoly | None = None,
                bhat: ShapedMultiPoly | None = None,
                gpoly: ShapedMultiPoly | None = None,
                nvars: int | None = None,
                deg_ahat: int | None = None,
                deg_bhat: int | None = None,
                deg_g: int = 1) -> UnluckyReport:
    """Estimate how often a random evaluation point is unlucky.

    With `ahat`/`bhat` given, the cofactors are fixed and only points are
    sampled.  Otherwise monic shaped cofactors (and a common factor of main
    degree `deg_g`) are drawn fresh for every sample, unconditionally; the
    coprimality of each drawn pair is recorded rather than filtered on.  A
    point is unlucky when the specialized cofactors have gcd != 1, in which
    case the specialized gcd of A = G*Ahat and B = G*Bhat is not the image
    of G and the point cannot be used to interpolate G.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if samples < 1:
        raise ValueError("need at least one sample")
    ring = field_make(p)
    rng = random.Random(seed)

    fixed = ahat is not None or bhat is not None
    if fixed:
        if ahat is None or bhat is None:
            raise ValueError("fixed mode needs both cofactors")
        if ahat.ring != ring or bhat.ring != ring or ahat.nvars != bhat.nvars:
            raise ValueError("cofactors must share the F_p polynomial ring")
        nvars = ahat.nvars
        if gpoly is None:
            gpoly = ShapedMultiPoly(ring, nvars, 0, [])
        # Form the full inputs of the GCD model once; their degrees are what
        # the interpolation would see.
        _a_full = gpoly * ahat
        _b_full = gpoly * bhat
        deg_a, deg_b = ahat.main_deg, bhat.main_deg
        coprime = not resultant_poly(ahat, bhat).is_zero() if min(deg_a, deg_b) > 0 else True
    else:
        if nvars is None or deg_ahat is None or deg_bhat is None:
            raise ValueError("drawn mode needs nvars and both cofactor degrees")
        deg_a, deg_b = deg_ahat, deg_bhat
    if nvars < 2:
        raise ValueError("need at least one evaluation variable")

    unlucky = 0
    slice_counts: dict[int, list[int]] = {}
    coprime_draws = 0
    coprime_unlucky = 0
    for _ in range(samples):
        if not fixed:
            g = ShapedMultiPoly.random(ring, nvars, deg_g, rng)
            ahat = ShapedMultiPoly.random(ring, nvars, deg_ahat, rng)
            bhat = ShapedMultiPoly.random(ring, nvars, deg_bhat, rng)
            _a_full = g * ahat
            _b_full = g * bhat
            drawn_coprime = not resultant_poly(ahat, bhat).is_zero()
            coprime_draws += drawn_coprime
        point = tuple(rng.randrange(p) for _ in range(nvars - 1))
        bad = not uni_gcd(ahat.multi_eval(point), bhat.multi_eval(point)).is_one()
        unlucky += bad
        if not fixed and drawn_coprime:
            coprime_unlucky += bad
        bucket = slice_counts.setdefault(point[0], [0, 0])
        bucket[0] += 1
        bucket[1] += bad
    return UnluckyReport(
        p=p,
        nvars=nvars,
        samples=samples,
        seed=seed,
        mode="fixed" if fixed else "drawn",
        unlucky=unlucky,
        deg_a=deg_a,
        deg_b=deg_b,
        deg_g=gpoly.main_deg if fixed else deg_g,
        slice_counts=slice_counts,
        cofactors_coprime=coprime if fixed else None,
        coprime_draws=None if fixed else coprime_draws,
        coprime_unlucky=None if fixed else coprime_unlucky,
    )
