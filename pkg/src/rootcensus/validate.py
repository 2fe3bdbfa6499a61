"""Randomized property suites exposed to the CLI: the resultant identities
on shaped polynomial pairs, and the set-system conversion identities.

Each suite returns a report whose `passed` says whether every sampled
instance satisfied every identity exactly; the first few failures are kept
verbatim for debugging.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .incexc import SetSystem, b_direct, b_from_t, moment_check, t_vector
from .multipoly import ShapedMultiPoly
from .resultants import resultant_poly, resultant_uni
from .rings import field_make
from .unipoly import uni_gcd


@dataclass
class ResultantCheckReport:
    trials: int
    points_checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def resultant_check(trials: int, seed: int, qs=(5, 7, 11), nvars_choices=(2, 3),
                    max_deg: int = 4) -> ResultantCheckReport:
    """Sample random monic shaped pairs and check, exhaustively over all
    evaluation points:

    * specialization identity: the univariate resultant of the specialized
      pair equals the multivariate eliminant evaluated at the point;
    * the Bezout degree bound on the eliminant;
    * gcd != 1 exactly when the specialized resultant vanishes.
    """
    rng = random.Random(seed)
    report = ResultantCheckReport(trials=trials)
    for trial in range(trials):
        q = rng.choice(list(qs))
        nvars = rng.choice(list(nvars_choices))
        ring = field_make(q)
        l = rng.randint(1, max_deg)
        m = rng.randint(1, max_deg)
        a = ShapedMultiPoly.random(ring, nvars, l, rng)
        b = ShapedMultiPoly.random(ring, nvars, m, rng)
        r = resultant_poly(a, b)
        if r.total_degree() > l * m:
            report.failures.append(
                f"trial {trial}: deg R = {r.total_degree()} > {l * m}"
            )
            continue
        from itertools import product

        for point in product(range(q), repeat=nvars - 1):
            fa = a.multi_eval(point)
            fb = b.multi_eval(point)
            via_euclid = resultant_uni(fa, fb)
            via_poly = r.eval_at(point)
            report.points_checked += 1
            if via_euclid != via_poly:
                report.failures.append(
                    f"trial {trial} q={q} point {point}:"
                    f" euclid {via_euclid} != poly {via_poly}"
                )
            coprime = uni_gcd(fa, fb).is_one()
            if coprime != (via_euclid != 0):
                report.failures.append(
                    f"trial {trial} q={q} point {point}:"
                    f" gcd/resultant equivalence broken"
                )
            if len(report.failures) > 20:
                return report
    return report


@dataclass
class IncExcCheckReport:
    systems: int
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def check_system(sys: SetSystem, report: IncExcCheckReport, label: str):
    t = t_vector(sys)
    direct = b_direct(sys)
    converted = b_from_t(t, sys.n, sys.universe_size)
    if converted != direct:
        report.failures.append(f"{label}: conversion {converted} != direct {direct}")
    moments = moment_check(direct, t)
    if not moments.passed:
        report.failures.append(f"{label}: moment identities failed: {moments}")
    report.systems += 1


def incexc_check_random(trials: int, seed: int, max_sets: int = 6,
                        max_universe: int = 50) -> IncExcCheckReport:
    rng = random.Random(seed)
    report = IncExcCheckReport(systems=0)
    for trial in range(trials):
        n = rng.randint(1, max_sets)
        universe = rng.randint(0, max_universe)
        sys = SetSystem.random(rng, n, universe)
        check_system(sys, report, f"random trial {trial}")
        if len(report.failures) > 20:
            break
    return report


def incexc_check_exhaustive(max_sets: int = 3, max_universe: int = 4) -> IncExcCheckReport:
    """Every system with up to max_sets subsets of a universe of size up to
    max_universe (subsets encoded as bitmasks)."""
    report = IncExcCheckReport(systems=0)
    for universe in range(max_universe + 1):
        subsets = [
            tuple(e for e in range(universe) if mask >> e & 1)
            for mask in range(1 << universe)
        ]
        for n in range(1, max_sets + 1):
            from itertools import product

            for combo in product(range(len(subsets)), repeat=n):
                sys = SetSystem(universe, tuple(subsets[i] for i in combo))
                check_system(sys, report, f"u={universe} combo={combo}")
                if len(report.failures) > 20:
                    return report
    return report
