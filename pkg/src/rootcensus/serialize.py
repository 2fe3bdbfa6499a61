"""Machine-readable output for census results.

JSON carries every count as a decimal string (64-bit JSON consumers must not
truncate exact counts) and every rational as {"num": ..., "den": ...} string
pairs.  Floats appear only inside the Monte Carlo summary block.  CSV has
columns k, freq, binomial_ref.  Both formats encode identical numbers, and
exhaustive JSON is byte-identical across worker counts because nothing
run-specific (timing, worker count) is stored in it; that bookkeeping lives
in the run manifest written next to the result.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict
from fractions import Fraction

from .census import EXHAUSTIVE, CensusResult, UnluckyReport

RESULT_SCHEMA = "rootcensus.result.v1"
MANIFEST_SCHEMA = "rootcensus.manifest.v1"


def fraction_dict(fr: Fraction) -> dict:
    return {"num": str(fr.numerator), "den": str(fr.denominator)}


def _encode(value):
    if isinstance(value, Fraction):
        return fraction_dict(value)
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return value
    if isinstance(value, dict):
        return {str(k): _encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    return str(value)


def result_to_dict(res: CensusResult) -> dict:
    out = {
        "schema": RESULT_SCHEMA,
        "kind": res.kind,
        "params": {k: str(v) for k, v in res.params.items()},
        "mode": res.mode,
        "population": str(res.population),
        "freq": [str(c) for c in res.freq],
        "theory_mean": fraction_dict(res.theory_mean),
        "theory_variance": fraction_dict(res.theory_var),
        "matches_theory": res.matches_theory(),
        "extras": _encode(res.extras),
    }
    if res.mode == EXHAUSTIVE:
        out["mean"] = fraction_dict(res.mean)
        out["variance"] = fraction_dict(res.variance)
    if res.mc is not None:
        out["mc"] = {
            "seed": str(res.mc.seed),
            "samples": str(res.mc.samples),
            "workers": str(res.mc.workers),
            "mean": res.mc.mean,
            "stderr_mean": res.mc.stderr_mean,
            "variance": res.mc.variance,
            "stderr_variance": res.mc.stderr_variance,
        }
    if res.binomial is not None:
        out["binomial_ref"] = [fraction_dict(b) for b in res.binomial]
    return out


def result_json(res: CensusResult) -> str:
    return json.dumps(result_to_dict(res), sort_keys=True, indent=2) + "\n"


def _fraction_csv(fr: Fraction) -> str:
    if fr.denominator == 1:
        return str(fr.numerator)
    return f"{fr.numerator}/{fr.denominator}"


def result_csv(res: CensusResult) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["k", "freq", "binomial_ref"])
    for k, count in enumerate(res.freq):
        ref = ""
        if res.binomial is not None and k < len(res.binomial):
            ref = _fraction_csv(res.binomial[k])
        writer.writerow([k, count, ref])
    return buf.getvalue()


def unlucky_to_dict(rep: UnluckyReport) -> dict:
    out = asdict(rep)
    out["schema"] = "rootcensus.unlucky.v1"
    out["frequency"] = rep.frequency
    out["stderr"] = rep.stderr
    out["reference"] = fraction_dict(rep.reference)
    out["sz_bound"] = fraction_dict(rep.sz_bound)
    out["slice_counts"] = {
        str(k): [str(v[0]), str(v[1])] for k, v in rep.slice_counts.items()
    }
    for key in ("p", "nvars", "samples", "seed", "unlucky", "deg_a", "deg_b",
                "deg_g", "coprime_draws", "coprime_unlucky"):
        if out.get(key) is not None:
            out[key] = str(out[key])
    return out


def unlucky_json(rep: UnluckyReport) -> str:
    return json.dumps(unlucky_to_dict(rep), sort_keys=True, indent=2) + "\n"


def manifest_dict(subcommand: str, params: dict, seed: int | None,
                  workers: int, version: str, duration_seconds: float) -> dict:
    return {
        "schema": MANIFEST_SCHEMA,
        "subcommand": subcommand,
        "params": {k: _encode(v) for k, v in params.items()},
        "seed": None if seed is None else str(seed),
        "workers": str(workers),
        "version": version,
        "duration_seconds": duration_seconds,
        "created_unix": time.time(),
    }


def manifest_json(*args, **kwargs) -> str:
    return json.dumps(manifest_dict(*args, **kwargs), sort_keys=True, indent=2) + "\n"
