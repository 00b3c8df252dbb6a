"""Batch driver: sweep instances, compute H^1 both ways, compare with the closed-form table.

    sl21-h1 --p 5 --chi zero --lambda all --module both --format csv

Exit status is 0 when every instance is internally consistent and every
applicable prediction matches (mismatches are ignored under --no-verify),
1 on a mismatch and 2 on bad input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from sl21 import __version__
from sl21.cohomology import h1_full, h1_weight_reduced
from sl21.field import Field, make_artin_schreier, make_prime_field
from sl21.modules import (HighestWeight, PChar, admissible_weights, build_kac, build_simple,
                          is_admissible, validate_rep)
from sl21.superalgebra import SuperAlgebra, build_sl21

CSV_HEADER = ("p", "chi_kind", "r", "s", "lambda1", "lambda2", "module",
              "dim_h1", "dim_even", "dim_odd", "predicted", "match")
NOT_APPLICABLE = "not-applicable"


class InconsistencyError(RuntimeError):
    """The full and weight-reduced computations disagree."""


@dataclass(frozen=True)
class InstanceSpec:
    p: int
    chi: str  # "zero", "ss:r,s" or "nilp:r"
    lam: tuple[str, str]
    module: str  # "kac" or "simple"
    verify: bool = True
    show_cocycles: bool = False


def _chi_parts(chi: str) -> tuple[str, list[str]]:
    if chi == "zero":
        return "zero", []
    kind, _, params = chi.partition(":")
    parts = params.split(",") if params else []
    if kind == "ss" and len(parts) == 2:
        return "ss", parts
    if kind == "nilp" and len(parts) == 1:
        return "nilp", parts
    raise ValueError(f"cannot parse p-character {chi!r}; use zero, ss:r,s or nilp:r")


def field_for(p: int, chi: str) -> Field:
    """F_p when chi vanishes on the Cartan subalgebra, else the Artin-Schreier field."""
    kind, parts = _chi_parts(chi)
    prime = make_prime_field(p)
    if any("t" in x for x in parts):
        return make_artin_schreier(p)
    if all(prime.parse(x).is_zero() for x in parts):
        return prime
    return make_artin_schreier(p)


def parse_chi(field: Field, chi: str) -> PChar:
    kind, parts = _chi_parts(chi)
    if kind == "zero":
        return PChar.zero(field)
    if kind == "ss":
        return PChar.semisimple(field.parse(parts[0]), field.parse(parts[1]))
    return PChar.nilpotent(field.parse(parts[0]))


@lru_cache(maxsize=None)
def _algebra(field: Field) -> SuperAlgebra:
    return build_sl21(field)


def predicted_dim(p: int, chi: PChar, lam: HighestWeight, module: str) -> int | str:
    """Closed-form prediction; p = 3 is compute-only."""
    if p == 3:
        return NOT_APPLICABLE
    if chi.kind != "zero":
        return 0
    pair = (lam.l1.lift_to_int(), lam.l2.lift_to_int())
    if module == "kac":
        return int(pair in {(p - 1, p - 2), (p - 2, 0)})
    if pair in {(p - 1, p - 1), (1, 0)}:
        return 1
    if pair in {(p - 1, 0), (p - 1, 1)}:
        return 2
    return 0


def run_instance(spec: InstanceSpec) -> dict:
    f = field_for(spec.p, spec.chi)
    alg = _algebra(f)
    chi = parse_chi(f, spec.chi)
    lam = HighestWeight(f.parse(spec.lam[0]), f.parse(spec.lam[1]))
    if not is_admissible(chi, lam):
        raise ValueError(f"lambda = {lam} is not admissible for chi = {chi.describe()}")
    if spec.module not in ("kac", "simple"):
        raise ValueError(f"unknown module kind {spec.module!r}")
    start = time.perf_counter()
    rep = (build_kac if spec.module == "kac" else build_simple)(alg, chi, lam)
    if spec.verify:
        report = validate_rep(alg, rep, stop_early=True)
        if not report:
            raise InconsistencyError(f"module {spec} failed validation: {report.first}")
    built = time.perf_counter()
    full = h1_full(alg, rep)
    reduced = h1_weight_reduced(alg, rep)
    done = time.perf_counter()
    if full.dims() != reduced.dims():
        raise InconsistencyError(f"{spec}: full route gives {full.dims()}, weight-reduced gives {reduced.dims()}")
    predicted = predicted_dim(spec.p, chi, lam, spec.module)
    row = {
        "p": spec.p,
        "field": repr(f),
        "chi": chi.describe(),
        "chi_kind": chi.kind,
        "r": repr(chi.r),
        "s": "" if chi.kind == "nilpotent" else repr(chi.s),
        "lambda": [repr(lam.l1), repr(lam.l2)],
        "module": spec.module,
        "module_dim": rep.dim,
        "dim_h1": full.dim_total,
        "dim_even": full.dim_even,
        "dim_odd": full.dim_odd,
        "predicted": predicted,
        "match": None if predicted == NOT_APPLICABLE else full.dim_total == predicted,
        "timings": {"build": round(built - start, 4), "h1": round(done - built, 4)},
    }
    if spec.show_cocycles:
        row["representatives"] = [c.to_dict() for c in full.representatives]
    return row


def instances(p: int, chis: list[str], lam: str, modules: list[str], verify: bool = True,
              show_cocycles: bool = False) -> list[InstanceSpec]:
    """Instances in sweep order: chi, then lambda (coefficient-lex), then module kind."""
    out = []
    for chi in chis:
        if lam == "all":
            f = field_for(p, chi)
            lams = [(repr(a), repr(b)) for a, b in admissible_weights(f, parse_chi(f, chi))]
        else:
            parts = lam.split(",")
            if len(parts) != 2:
                raise ValueError(f"cannot parse lambda {lam!r}; use l1,l2 or all")
            lams = [(parts[0].strip(), parts[1].strip())]
        for pair in lams:
            for module in modules:
                out.append(InstanceSpec(p, chi, pair, module, verify, show_cocycles))
    return out


def sweep(p: int, chis: list[str], modules: list[str], lam: str = "all", jobs: int = 1,
          verify: bool = True, show_cocycles: bool = False) -> dict:
    specs = instances(p, chis, lam, modules, verify, show_cocycles)
    if jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(run_instance, specs))  # map keeps input order
    else:
        rows = [run_instance(s) for s in specs]
    fields = sorted({row["field"] for row in rows}) or [repr(field_for(p, c)) for c in chis[:1]]
    return {
        "meta": {"p": p, "field": fields[0] if len(fields) == 1 else fields, "tool-version": __version__},
        "rows": rows,
        "summary": summarize(rows),
    }


def summarize(rows: list[dict]) -> dict:
    return {
        "instances": len(rows),
        "matches": sum(row["match"] is True for row in rows),
        "mismatches": sum(row["match"] is False for row in rows),
        "not_applicable": sum(row["match"] is None for row in rows),
    }


def emit(table: dict, fmt: str) -> bytes:
    if fmt == "json":
        return (json.dumps(table, indent=2, sort_keys=True) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in table["rows"]:
            match = "" if row["match"] is None else str(row["match"]).lower()
            writer.writerow([row["p"], row["chi_kind"], row["r"], row["s"], row["lambda"][0],
                             row["lambda"][1], row["module"], row["dim_h1"], row["dim_even"],
                             row["dim_odd"], row["predicted"], match])
        return buf.getvalue().encode()
    raise ValueError(f"unknown format {fmt!r}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sl21-h1", description="First cohomology of sl(2,1) with "
                                 "coefficients in chi-reduced Kac and simple modules.")
    ap.add_argument("--p", type=int, required=True, help="odd prime")
    ap.add_argument("--chi", default="zero", help="zero | ss:r,s | nilp:r")
    ap.add_argument("--lambda", dest="lam", default="all", help="l1,l2 or all")
    ap.add_argument("--module", choices=("kac", "simple", "both"), default="both")
    ap.add_argument("--format", choices=("json", "csv"), default="json")
    ap.add_argument("--verify", action=argparse.BooleanOptionalAction, default=True,
                    help="validate modules and fail on prediction mismatches")
    ap.add_argument("--show-cocycles", action="store_true", help="include H^1 representatives (json)")
    ap.add_argument("--out", help="write to this path instead of stdout")
    ap.add_argument("--jobs", type=int, default=1)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    modules = ["kac", "simple"] if args.module == "both" else [args.module]
    try:
        table = sweep(args.p, [args.chi], modules, args.lam, max(args.jobs, 1),
                      args.verify, args.show_cocycles)
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    data = emit(table, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
    summary = table["summary"]
    print(f"{summary['instances']} instances, {summary['matches']} match, "
          f"{summary['mismatches']} mismatch, {summary['not_applicable']} not applicable",
          file=sys.stderr)
    if args.verify and summary["mismatches"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
