"""Command-line front end.

Every experiment subcommand resolves its full parameter set, runs the
corresponding engine, prints a human summary, and (with --out) writes the
machine-readable result plus a run manifest describing exactly how to
reproduce it.  Exit codes:

    0  everything ran and every requested theory assertion held
    1  a theory assertion failed
    2  usage error
    3  budget exceeded
    4  domain error (composite modulus, malformed polynomial, ...)
    5  long run not confirmed (pass --confirm-long)
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path

from . import __version__
from .census import (
    EXHAUSTIVE,
    MONTECARLO,
    BudgetExceededError,
    CensusConfig,
    CensusResult,
    DEFAULT_BUDGET,
    fq_pair_census,
    mv_census,
    unlucky_sim,
    zn_root_census,
)
from .incexc import b_direct, b_from_t, moment_check, parse_system_file, t_vector
from .multipoly import ShapedMultiPoly
from .numtheory import a006579
from .polytext import parse_terms
from .rings import field_make
from .serialize import manifest_json, result_csv, result_json, unlucky_json
from .validate import incexc_check_exhaustive, incexc_check_random, resultant_check

EXIT_OK = 0
EXIT_THEORY = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_DOMAIN = 4
EXIT_UNCONFIRMED = 5

# Pessimistic single-core throughput used only to decide whether a run needs
# --confirm-long; the vectorized engines are much faster than this.
GATE_UNITS_PER_SECOND = 10**7
GATE_SECONDS = 60


class LongRunNotConfirmed(RuntimeError):
    pass


class UsageError(ValueError):
    """Bad argument values (distinct exit code, like argparse's own)."""


def _parse_range(text: str) -> list[int]:
    """'5' -> [5]; '2..16' -> [2, ..., 16]."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _default_workers() -> int:
    env = os.environ.get("ROOTCENSUS_WORKERS")
    return max(1, int(env)) if env else 1


def _add_output_args(p: argparse.ArgumentParser):
    p.add_argument("--out", type=Path, default=None,
                   help="output path prefix for result + manifest files")
    p.add_argument("--format", choices=("json", "csv", "both"), default="json")


def _add_run_args(p: argparse.ArgumentParser):
    p.add_argument("--workers", type=int, default=_default_workers(),
                   help="worker process count (env ROOTCENSUS_WORKERS)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="max gcd evaluations per run")


def _write_result(res: CensusResult, out: Path, fmt: str) -> list[Path]:
    written = []
    if fmt in ("json", "both"):
        path = out.with_name(out.name + ".json")
        path.write_text(result_json(res))
        written.append(path)
    if fmt in ("csv", "both"):
        path = out.with_name(out.name + ".csv")
        path.write_text(result_csv(res))
        written.append(path)
    return written


def _write_manifest(subcommand: str, params: dict, args, started: float,
                    out: Path) -> Path:
    text = manifest_json(
        subcommand=subcommand,
        params=params,
        seed=getattr(args, "seed", None),
        workers=getattr(args, "workers", 1),
        version=__version__,
        duration_seconds=time.time() - started,
    )
    path = out.with_name(out.name + ".manifest.json")
    path.write_text(text)
    return path


def _frac(fr) -> str:
    return str(fr)


def _gate_long_run(units: int, confirmed: bool):
    estimate = units / GATE_UNITS_PER_SECOND
    if estimate > GATE_SECONDS and not confirmed:
        raise LongRunNotConfirmed(
            f"estimated {estimate:.0f}s of work ({units} gcd evaluations);"
            " rerun with --confirm-long"
        )


def cmd_zn_roots(args) -> int:
    started = time.time()
    ns = _parse_range(args.n)
    ms = _parse_range(args.m)
    if min(ns) < 2:
        raise UsageError("modulus n must be >= 2")
    if min(ms) < 1:
        raise UsageError("degree m must be >= 1")
    all_ok = True
    print(f"{'n':>4} {'m':>3} {'E[X]':>6} {'Var[X]':>10} {'a(n)':>6} {'status':>7}")
    results = []
    for n in ns:
        for m in ms:
            res = zn_root_census(n, m, CensusConfig(workers=args.workers,
                                                    budget=args.budget))
            ok = res.matches_theory()
            all_ok &= ok
            results.append(res)
            print(f"{n:>4} {m:>3} {_frac(res.mean):>6} {_frac(res.variance):>10}"
                  f" {a006579(n):>6} {'ok' if ok else 'FAIL':>7}")
            if args.out:
                _write_result(res, args.out.with_name(
                    f"{args.out.name}_n{n}_m{m}"), args.format)
    if args.out:
        _write_manifest("zn-roots", {"n": args.n, "m": args.m}, args, started,
                        args.out)
    return EXIT_OK if all_ok else EXIT_THEORY


def _census_config(args) -> CensusConfig:
    return CensusConfig(
        mode=args.mode,
        samples=args.samples,
        seed=args.seed,
        workers=args.workers,
        budget=args.budget,
    )


def _print_census_summary(res: CensusResult):
    print(f"{res.kind} {res.params} mode={res.mode}")
    print(f"  population {res.population}")
    width = max(len(str(c)) for c in res.freq)
    for k, c in enumerate(res.freq):
        line = f"  k={k:<3} freq={c:>{width}}"
        if res.binomial is not None:
            b = res.binomial[k]
            line += f"  binomial_ref={b.numerator // b.denominator if b.denominator == 1 else _frac(b)}"
        print(line)
    if res.mode == EXHAUSTIVE:
        print(f"  mean     {_frac(res.mean)} (theory {_frac(res.theory_mean)})")
        print(f"  variance {_frac(res.variance)} (theory {_frac(res.theory_var)})")
    else:
        st = res.mc
        print(f"  mean     {st.mean:.6f} +- {st.stderr_mean:.6f}"
              f" (theory {_frac(res.theory_mean)})")
        print(f"  variance {st.variance:.6f} +- {st.stderr_variance:.6f}"
              f" (theory {_frac(res.theory_var)})")
    if "point_rate" in res.extras:
        rate = res.extras["point_rate"]
        ref = res.extras["point_rate_ref"]
        shown = _frac(rate) if res.mode == EXHAUSTIVE else f"{rate:.6f}"
        print(f"  per-point rate {shown} (theory {_frac(ref)})")
    print(f"  theory check: {'PASS' if res.matches_theory() else 'FAIL'}")


def _run_pair_like(args, runner, subcommand: str, params: dict,
                   gate_units: int) -> int:
    started = time.time()
    if args.mode == EXHAUSTIVE:
        _gate_long_run(gate_units, args.confirm_long)
    res = runner(_census_config(args))
    _print_census_summary(res)
    if args.out:
        _write_result(res, args.out, args.format)
        _write_manifest(subcommand, params, args, started, args.out)
    return EXIT_OK if res.matches_theory() else EXIT_THEORY


def cmd_pair_census(args) -> int:
    q, n, m = args.q, args.deg_f, args.deg_g
    ring = field_make(q)  # rejects non-prime-powers before gating
    nf = ShapedMultiPoly.population(ring, 2, n)
    ng = ShapedMultiPoly.population(ring, 2, m)
    pairs = nf * (nf + 1) // 2 if n == m else nf * ng
    params = {"q": q, "deg_f": n, "deg_g": m, "mode": args.mode,
              "samples": args.samples}
    return _run_pair_like(
        args, lambda cfg: fq_pair_census(q, n, m, cfg), "pair-census", params,
        gate_units=pairs * q)


def cmd_mv_census(args) -> int:
    q, nv, l, m = args.q, args.nvars, args.deg_f, args.deg_g
    ring = field_make(q)
    nf = ShapedMultiPoly.population(ring, nv, l)
    ng = ShapedMultiPoly.population(ring, nv, m)
    pairs = nf * (nf + 1) // 2 if l == m else nf * ng
    params = {"q": q, "nvars": nv, "deg_f": l, "deg_g": m, "mode": args.mode,
              "samples": args.samples}
    return _run_pair_like(
        args, lambda cfg: mv_census(q, nv, l, m, cfg), "mv-census", params,
        gate_units=pairs * q ** (nv - 1))


def _parse_shaped(text: str, nvars: int, p: int) -> ShapedMultiPoly:
    ring = field_make(p)
    return ShapedMultiPoly.from_terms(ring, nvars, parse_terms(text, nvars))


def cmd_unlucky(args) -> int:
    started = time.time()
    fixed = args.ahat is not None or args.bhat is not None
    if fixed:
        ahat = _parse_shaped(args.ahat, args.nvars, args.p)
        bhat = _parse_shaped(args.bhat, args.nvars, args.p)
        ghat = (_parse_shaped(args.ghat, args.nvars, args.p)
                if args.ghat else None)
        rep = unlucky_sim(args.p, args.samples, args.seed,
                          ahat=ahat, bhat=bhat, gpoly=ghat)
    else:
        if args.deg_ahat is None or args.deg_bhat is None:
            raise ValueError("drawn mode needs --deg-ahat and --deg-bhat"
                             " (or pass --ahat/--bhat for fixed cofactors)")
        rep = unlucky_sim(args.p, args.samples, args.seed, nvars=args.nvars,
                          deg_ahat=args.deg_ahat, deg_bhat=args.deg_bhat,
                          deg_g=args.deg_g)
    print(f"unlucky sim p={rep.p} mode={rep.mode} samples={rep.samples}")
    print(f"  unlucky frequency {rep.frequency:.6f} +- {rep.stderr:.6f}")
    print(f"  reference 1/p    {float(rep.reference):.6f}")
    print(f"  Bezout/SZ bound  {_frac(rep.sz_bound)}"
          f" = {float(rep.sz_bound):.6f}")
    if rep.mode == "fixed":
        print(f"  cofactors coprime: {rep.cofactors_coprime}")
    else:
        print(f"  coprime draws {rep.coprime_draws}/{rep.samples};"
              f" unlucky among them {rep.coprime_unlucky}")
    hot = {v: c for v, c in rep.slice_counts.items() if c[1] > 0}
    for v in sorted(hot)[:20]:
        cnt, bad = hot[v]
        print(f"  slice x1={v}: {bad}/{cnt} unlucky"
              f" (conditional frequency {bad / cnt:.4f})")
    if args.out:
        path = args.out.with_name(args.out.name + ".json")
        path.write_text(unlucky_json(rep))
        _write_manifest("unlucky", {
            "p": args.p, "samples": args.samples,
            "ahat": args.ahat, "bhat": args.bhat, "ghat": args.ghat,
            "nvars": args.nvars, "deg_ahat": args.deg_ahat,
            "deg_bhat": args.deg_bhat, "deg_g": args.deg_g,
        }, args, started, args.out)
    return EXIT_OK


def cmd_incexc_check(args) -> int:
    if args.file:
        sys_ = parse_system_file(Path(args.file).read_text())
        t = t_vector(sys_)
        direct = b_direct(sys_)
        converted = b_from_t(t, sys_.n, sys_.universe_size)
        report = moment_check(direct, t)
        print(f"set system: universe {sys_.universe_size}, {sys_.n} sets")
        print(f"  t = {t}")
        print(f"  b (direct)    = {direct}")
        print(f"  b (converted) = {converted}")
        print(f"  sum i*b_i   = {report.first_lhs} vs t_1 = {report.first_rhs}")
        print(f"  sum i^2*b_i = {report.second_lhs} vs t_1+2*t_2 = {report.second_rhs}")
        ok = converted == direct and report.passed
        print(f"  {'PASS' if ok else 'FAIL'}")
        return EXIT_OK if ok else EXIT_THEORY
    rep = incexc_check_random(args.trials, args.seed, args.max_sets,
                              args.max_universe)
    print(f"random systems checked: {rep.systems}, failures: {len(rep.failures)}")
    if args.exhaustive:
        ex = incexc_check_exhaustive()
        print(f"exhaustive tiny systems checked: {ex.systems},"
              f" failures: {len(ex.failures)}")
        rep.failures.extend(ex.failures)
    for f in rep.failures[:10]:
        print(f"  {f}")
    return EXIT_OK if not rep.failures else EXIT_THEORY


def cmd_resultant_check(args) -> int:
    qs = [int(tok) for tok in args.qs.split(",")]
    nvars = [int(tok) for tok in args.nvars.split(",")]
    rep = resultant_check(args.trials, args.seed, qs=qs, nvars_choices=nvars,
                          max_deg=args.max_deg)
    print(f"resultant identities: {rep.trials} pairs,"
          f" {rep.points_checked} specialization points,"
          f" failures: {len(rep.failures)}")
    for f in rep.failures[:10]:
        print(f"  {f}")
    return EXIT_OK if rep.passed else EXIT_THEORY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootcensus",
        description="Exact censuses of polynomial root counts over Z_n and of"
                    " unlucky evaluation points over finite fields.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("zn-roots",
                       help="distribution of distinct roots of monic polynomials in Z_n[x]")
    group_n = p.add_mutually_exclusive_group(required=True)
    group_n.add_argument("--n", help="modulus")
    group_n.add_argument("--n-range", dest="n", help="modulus range like 2..16")
    group_m = p.add_mutually_exclusive_group(required=True)
    group_m.add_argument("--m", help="degree")
    group_m.add_argument("--m-range", dest="m", help="degree range like 2..4")
    _add_run_args(p)
    _add_output_args(p)
    p.set_defaults(func=cmd_zn_roots)

    for name, helptext in (
        ("pair-census",
         "bivariate pair census: unlucky specialization counts over F_q"),
        ("mv-census",
         "multivariate pair census over F_q^(nvars-1) evaluation points"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--q", type=int, required=True, help="field size (prime power)")
        if name == "mv-census":
            p.add_argument("--nvars", type=int, required=True,
                           help="total variable count, main variable included")
        p.add_argument("--deg-f", type=int, required=True)
        p.add_argument("--deg-g", type=int, required=True)
        p.add_argument("--mode", choices=(EXHAUSTIVE, MONTECARLO),
                       default=EXHAUSTIVE)
        p.add_argument("--samples", type=int, default=100_000)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--confirm-long", action="store_true",
                       help="confirm an exhaustive run estimated above "
                            f"{GATE_SECONDS}s")
        _add_run_args(p)
        _add_output_args(p)
        p.set_defaults(func=cmd_pair_census if name == "pair-census" else cmd_mv_census)

    p = sub.add_parser("unlucky",
                       help="simulate unlucky evaluation points for cofactor pairs")
    p.add_argument("--p", type=int, required=True, help="prime field size")
    p.add_argument("--nvars", type=int, default=3)
    p.add_argument("--ahat", help="fixed first cofactor, e.g. 'x0^2 + x2'")
    p.add_argument("--bhat", help="fixed second cofactor")
    p.add_argument("--ghat", help="fixed common factor (defaults to 1)")
    p.add_argument("--deg-ahat", type=int, help="drawn-mode cofactor degree")
    p.add_argument("--deg-bhat", type=int)
    p.add_argument("--deg-g", type=int, default=1)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", type=Path, default=None)
    p.set_defaults(func=cmd_unlucky, workers=1)

    p = sub.add_parser("incexc-check",
                       help="verify t/b conversions and moment identities")
    p.add_argument("--file", help="set-system file: 'universe n' then one line per set")
    p.add_argument("--random", action="store_true")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-sets", type=int, default=6)
    p.add_argument("--max-universe", type=int, default=50)
    p.add_argument("--exhaustive", action="store_true",
                   help="also sweep every tiny system (n<=3, universe<=4)")
    p.set_defaults(func=cmd_incexc_check)

    p = sub.add_parser("resultant-check",
                       help="random-pair resultant identity suite")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--qs", default="5,7,11")
    p.add_argument("--nvars", default="2,3")
    p.add_argument("--max-deg", type=int, default=4)
    p.set_defaults(func=cmd_resultant_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except LongRunNotConfirmed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNCONFIRMED
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
