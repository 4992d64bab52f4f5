"""Command-line front end.

Five commands: `radius` solves one radius problem, `zeros` prints a
certified zero table, `alpha` reports a target domain's inscribed-disk
radius (closed form and numeric oracle), `verify` runs the certification
suite around a solved radius, and `sweep` walks a grid of alpha or epsilon
values.  Records go to stdout (or --out) as one JSON object per line with
a `schema: 1` field, or as CSV with a fixed column set per command.

Exit status: 0 on success (for `verify`, all checks passed), 1 when a
computation fails or a certificate is violated, 2 on bad arguments.

Defaults: 100 zeros per table, 512 boundary samples, 1e-12 root residual,
4096 alpha-oracle grid points, 100000 Monte-Carlo trials.  The Monte-Carlo
seed comes from --seed, else the RADII_SEED environment variable, else a
fixed built-in.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass

from .errors import ComputationError, ParameterError
from .families import FAMILY_NAMES, FunctionFamily
from .normalizations import NormalizedFunction
from .radius_solver import (
    Convex,
    RadiusQuery,
    Starlike,
    StronglyStarlike,
    solve,
)
from .target_domains import (
    DOMAIN_NAMES,
    TargetDomain,
    alpha_numeric,
    alpha_of,
)
from .verification import (
    certify_radius,
    check_disk_lemma,
    check_lambda_inequality,
    check_sharpness,
    check_zero_sum_agreement,
)
from .zero_tables import positive_zeros

__all__ = ["RunConfig", "parse_args", "run", "main"]

SCHEMA = 1

_FAMILY_PARAMS: dict[str, tuple[str, ...]] = {
    "wright": ("rho", "beta"),
    "mittag-leffler": ("mu", "nu", "a"),
    "lommel": ("u",),
    "struve": ("beta",),
    "legendre": ("n",),
    "ramanujan-q": ("beta", "q", "a"),
}
_FAMILY_ALIASES = {"ml": "mittag-leffler", "ramanujanq": "ramanujan-q"}
_DOMAIN_PARAMS: dict[str, tuple[str, ...]] = {
    "janowski": ("d", "e"),
    "conic": ("kappa",),
    "disk": ("alpha",),
}
_CONVEX_KIND = {"f": "weighted_derivative", "g": "g_prime", "h": "h_prime"}

_COLUMNS = {
    "radius": (
        "schema", "family", "params", "form", "problem", "alpha_or_epsilon",
        "radius", "residual", "bracket_lo", "bracket_hi", "iterations",
        "source_notes",
    ),
    "zeros": (
        "schema", "family", "params", "kind", "index", "zero",
        "multiplicity", "residual", "variable",
    ),
    "alpha": (
        "schema", "domain", "params", "closed_form", "printed", "numeric",
        "difference",
    ),
    "verify": (
        "schema", "check", "claim", "samples", "max_violation", "passed",
        "witness",
    ),
    "sweep": (
        "schema", "family", "params", "form", "problem", "value", "radius",
        "residual",
    ),
}


@dataclass(frozen=True)
class RunConfig:
    """A fully validated invocation; family and domain objects are built
    (and range-checked) before dispatch."""

    command: str
    family: FunctionFamily | None = None
    form: str = "g"
    domain: TargetDomain | None = None
    epsilon: float | None = None
    problem: str = "starlike"
    kind: str = "base"
    count: int = 100
    n_zeros: int = 100
    samples: int = 512
    trials: int = 100000
    grid: int = 4096
    points: int = 20
    seed: int | None = None
    resid_tol: float = 1e-12
    lo: float = 0.1
    hi: float = 1.0
    steps: int = 10
    fmt: str = "json"
    out: str | None = None


def _build_family(args: argparse.Namespace) -> FunctionFamily:
    if args.family is None:
        raise ParameterError("pick a family with --family")
    name = _FAMILY_ALIASES.get(args.family, args.family)
    if name not in FAMILY_NAMES:
        raise ParameterError(
            f"unknown family {args.family!r}; choose from "
            f"{', '.join(sorted(FAMILY_NAMES))}"
        )
    wanted = _FAMILY_PARAMS[name]
    values = []
    for p in wanted:
        v = getattr(args, p)
        if v is None:
            flags = " ".join(f"--{q}" for q in wanted)
            raise ParameterError(f"family {name} needs {flags}")
        values.append(v)
    for p in ("rho", "beta", "mu", "nu", "a", "u", "n", "q"):
        if getattr(args, p, None) is not None and p not in wanted:
            raise ParameterError(f"--{p} does not apply to family {name}")
    return FAMILY_NAMES[name](*values)


def _build_domain(args: argparse.Namespace) -> TargetDomain:
    name = args.domain
    if name not in DOMAIN_NAMES:
        raise ParameterError(
            f"unknown domain {name!r}; choose from "
            f"{', '.join(sorted(DOMAIN_NAMES))}"
        )
    wanted = _DOMAIN_PARAMS.get(name, ())
    values = []
    for p in wanted:
        v = getattr(args, p)
        if v is None:
            flags = " ".join(f"--{q}" for q in wanted)
            raise ParameterError(f"domain {name} needs {flags}")
        values.append(v)
    for p in ("d", "e", "kappa", "alpha"):
        if getattr(args, p, None) is not None and p not in wanted:
            raise ParameterError(f"--{p} does not apply to domain {name}")
    return DOMAIN_NAMES[name](*values)


def _family_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("family")
    g.add_argument("--family", help="wright, mittag-leffler (ml), lommel, "
                                    "struve, legendre, ramanujan-q")
    g.add_argument("--rho", type=float, help="wright order")
    g.add_argument("--beta", type=float, help="wright / struve / ramanujan-q "
                                              "parameter")
    g.add_argument("--mu", type=float, help="mittag-leffler order")
    g.add_argument("--nu", type=float, help="mittag-leffler second parameter")
    g.add_argument("--a", type=float, help="mittag-leffler / ramanujan-q "
                                           "third parameter")
    g.add_argument("--u", type=float, help="lommel parameter")
    g.add_argument("--n", type=int, help="legendre index (degree 2n-1)")
    g.add_argument("--q", type=float, help="ramanujan-q base, 0 < q < 1")
    g.add_argument("--form", default="g",
                   help="f, g or h (struve aliases u/v/w; legendre p); "
                        "default g")


def _domain_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("target domain")
    g.add_argument("--domain", help=", ".join(sorted(DOMAIN_NAMES)))
    g.add_argument("--alpha", type=float, help="disk radius for --domain disk")
    g.add_argument("--d", type=float, help="janowski D")
    g.add_argument("--e", type=float, help="janowski E")
    g.add_argument("--kappa", type=float, help="conic shape parameter")


def _output_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("output")
    g.add_argument("--format", choices=("json", "csv"), default="json",
                   dest="fmt", help="json lines (default) or csv")
    g.add_argument("--out", help="write records here instead of stdout")


def parse_args(argv: list[str] | None = None) -> RunConfig:
    parser = argparse.ArgumentParser(
        prog="starradii",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("radius", allow_abbrev=False,
                       help="solve one radius problem")
    _family_flags(p)
    _domain_flags(p)
    p.add_argument("--epsilon", type=float,
                   help="sector exponent; selects the strongly-starlike "
                        "problem instead of --domain")
    p.add_argument("--problem", choices=("starlike", "convex"),
                   default="starlike", help="disk problem kind (default "
                                            "starlike)")
    p.add_argument("--n-zeros", type=int, default=100,
                   help="zero-table length for the sector cross-check "
                        "(default 100)")
    p.add_argument("--resid-tol", type=float, default=1e-12,
                   help="root residual target (default 1e-12)")
    _output_flags(p)

    p = sub.add_parser("zeros", allow_abbrev=False,
                       help="print a certified zero table")
    _family_flags(p)
    p.add_argument("--kind", default="base",
                   choices=("base", "g_prime", "h_prime",
                            "weighted_derivative"),
                   help="which kernel's zeros (default base)")
    p.add_argument("--count", type=int, default=100,
                   help="how many zeros (default 100)")
    _output_flags(p)

    p = sub.add_parser("alpha", allow_abbrev=False,
                       help="inscribed-disk radius of a target domain")
    _domain_flags(p)
    p.add_argument("--grid", type=int, default=4096,
                   help="boundary grid for the numeric oracle (default 4096)")
    _output_flags(p)

    p = sub.add_parser("verify", allow_abbrev=False,
                       help="solve a radius and run the certification suite")
    _family_flags(p)
    _domain_flags(p)
    p.add_argument("--epsilon", type=float,
                   help="sector exponent; selects the strongly-starlike "
                        "problem instead of --domain")
    p.add_argument("--problem", choices=("starlike", "convex"),
                   default="starlike", help="disk problem kind (default "
                                            "starlike)")
    p.add_argument("--n-zeros", type=int, default=100,
                   help="zero-table length (default 100)")
    p.add_argument("--samples", type=int, default=512,
                   help="boundary samples per circle (default 512)")
    p.add_argument("--trials", type=int, default=100000,
                   help="Monte-Carlo trials per inequality (default 100000)")
    p.add_argument("--points", type=int, default=20,
                   help="interior points for the zero-sum agreement check "
                        "(default 20)")
    p.add_argument("--seed", type=int,
                   help="Monte-Carlo seed (default: RADII_SEED env or "
                        "built-in)")
    p.add_argument("--resid-tol", type=float, default=1e-12,
                   help="root residual target (default 1e-12)")
    _output_flags(p)

    p = sub.add_parser("sweep", allow_abbrev=False,
                       help="radii over a grid of alpha or epsilon values")
    _family_flags(p)
    p.add_argument("--problem",
                   choices=("starlike", "convex", "sector"),
                   default="starlike",
                   help="what to sweep: disk alpha for starlike/convex, "
                        "epsilon for sector (default starlike)")
    p.add_argument("--lo", type=float, default=0.1,
                   help="grid start (default 0.1)")
    p.add_argument("--hi", type=float, default=1.0,
                   help="grid end, inclusive (default 1.0)")
    p.add_argument("--steps", type=int, default=10,
                   help="grid points (default 10)")
    p.add_argument("--n-zeros", type=int, default=100,
                   help="zero-table length for sector sweeps (default 100)")
    p.add_argument("--resid-tol", type=float, default=1e-12,
                   help="root residual target (default 1e-12)")
    _output_flags(p)

    args = parser.parse_args(argv)
    cmd = args.command

    family = None
    if cmd in ("radius", "zeros", "verify", "sweep"):
        family = _build_family(args)

    domain = None
    epsilon = getattr(args, "epsilon", None)
    if cmd == "alpha" or (
        cmd in ("radius", "verify") and args.domain is not None
    ):
        if cmd == "alpha" and args.domain is None:
            raise ParameterError("pick a domain with --domain")
        domain = _build_domain(args)
    if cmd in ("radius", "verify"):
        if (domain is None) == (epsilon is None):
            raise ParameterError(
                f"{cmd} needs exactly one of --domain or --epsilon"
            )

    seed = getattr(args, "seed", None)
    if seed is None:
        env = os.environ.get("RADII_SEED")
        if env is not None:
            try:
                seed = int(env)
            except ValueError:
                raise ParameterError(
                    f"RADII_SEED must be an integer, not {env!r}"
                ) from None

    return RunConfig(
        command=cmd,
        family=family,
        form=getattr(args, "form", "g"),
        domain=domain,
        epsilon=epsilon,
        problem=getattr(args, "problem", "starlike"),
        kind=getattr(args, "kind", "base"),
        count=getattr(args, "count", 100),
        n_zeros=getattr(args, "n_zeros", 100),
        samples=getattr(args, "samples", 512),
        trials=getattr(args, "trials", 100000),
        grid=getattr(args, "grid", 4096),
        points=getattr(args, "points", 20),
        seed=seed,
        resid_tol=getattr(args, "resid_tol", 1e-12),
        lo=getattr(args, "lo", 0.1),
        hi=getattr(args, "hi", 1.0),
        steps=getattr(args, "steps", 10),
        fmt=args.fmt,
        out=args.out,
    )


def _plain(value):
    """JSON-safe copy: complex becomes [re, im], odd objects become text."""
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, (tuple, list)):
        return [_plain(v) for v in value]
    return str(value)


def _family_fields(family: FunctionFamily) -> dict:
    wanted = _FAMILY_PARAMS[family.name]
    return {p: getattr(family, "n" if p == "n" else p) for p in wanted}


def _domain_fields(domain: TargetDomain) -> dict:
    name = next(k for k, v in DOMAIN_NAMES.items() if isinstance(domain, v))
    fields = {
        p: getattr(domain, {"d": "D", "e": "E"}.get(p, p))
        for p in _DOMAIN_PARAMS.get(name, ())
    }
    return {"name": name, "fields": fields}


def _problem_of(config: RunConfig):
    if config.epsilon is not None:
        return StronglyStarlike(config.epsilon)
    if config.problem == "convex":
        return Convex(config.domain)
    return Starlike(config.domain)


def _run_radius(config: RunConfig) -> tuple[list[dict], bool]:
    nf = NormalizedFunction(config.family, config.form)
    problem = _problem_of(config)
    res = solve(RadiusQuery(nf, problem), n_zeros=config.n_zeros,
                resid_tol=config.resid_tol)
    record = {
        "schema": SCHEMA,
        "family": config.family.name,
        "params": _family_fields(config.family),
        "form": nf.form,
        "problem": ("strongly_starlike" if config.epsilon is not None
                    else config.problem),
        "alpha_or_epsilon": res.alpha_used,
        "radius": res.radius,
        "residual": res.residual,
        "bracket_lo": res.bracket[0],
        "bracket_hi": res.bracket[1],
        "iterations": res.iterations,
        "source_notes": res.notes,
    }
    return [record], True


def _run_zeros(config: RunConfig) -> tuple[list[dict], bool]:
    table = positive_zeros(config.family, config.kind, config.count)
    records = [
        {
            "schema": SCHEMA,
            "family": config.family.name,
            "params": _family_fields(config.family),
            "kind": config.kind,
            "index": k + 1,
            "zero": z,
            "multiplicity": m,
            "residual": res,
            "variable": table.variable,
        }
        for k, (z, m, res) in enumerate(
            zip(table.zeros, table.multiplicities, table.residuals)
        )
    ]
    return records, True


def _run_alpha(config: RunConfig) -> tuple[list[dict], bool]:
    closed = alpha_of(config.domain)
    try:
        numeric = alpha_numeric(config.domain, config.grid).alpha
        difference = abs(closed.alpha - numeric)
    except ParameterError:
        numeric = None
        difference = None
    record = {
        "schema": SCHEMA,
        "domain": _domain_fields(config.domain)["name"],
        "params": _domain_fields(config.domain)["fields"],
        "closed_form": closed.alpha,
        "printed": closed.printed_alpha,
        "numeric": numeric,
        "difference": difference,
    }
    return [record], True


def _report_record(name: str, rep) -> dict:
    return {
        "schema": SCHEMA,
        "check": name,
        "claim": rep.claim,
        "samples": rep.samples,
        "max_violation": rep.max_violation,
        "passed": rep.passed,
        "witness": _plain(rep.witness),
    }


def _run_verify(config: RunConfig) -> tuple[list[dict], bool]:
    nf = NormalizedFunction(config.family, config.form)
    problem = _problem_of(config)
    res = solve(RadiusQuery(nf, problem), n_zeros=config.n_zeros,
                resid_tol=config.resid_tol)
    reports = [
        ("protocol", certify_radius(nf, problem, res.radius, config.samples)),
        ("sharpness", check_sharpness(nf, problem, res.radius)),
    ]
    if config.epsilon is None:
        kind = "base" if config.problem == "starlike" else _CONVEX_KIND[nf.form]
        table = positive_zeros(config.family, kind, config.n_zeros)
        base = (
            positive_zeros(config.family, "base", config.n_zeros)
            if config.problem == "convex" and nf.form == "f"
            else None
        )
        reports.append((
            "zero_sum_agreement",
            check_zero_sum_agreement(nf, table, config.points,
                                     which=config.problem, base_table=base),
        ))
    reports.append(("disk_lemma",
                    check_disk_lemma(config.trials, config.seed)))
    reports.append(("lambda_inequality",
                    check_lambda_inequality(config.trials, config.seed)))
    records = [_report_record(name, rep) for name, rep in reports]
    return records, all(rep.passed for _, rep in reports)


def _run_sweep(config: RunConfig) -> tuple[list[dict], bool]:
    if config.steps < 2:
        raise ParameterError("sweep needs at least 2 steps")
    nf = NormalizedFunction(config.family, config.form)
    table = (
        positive_zeros(config.family, "base", config.n_zeros)
        if config.problem == "sector"
        else None
    )
    records = []
    for k in range(config.steps):
        v = config.lo + (config.hi - config.lo) * k / (config.steps - 1)
        if config.problem == "sector":
            problem = StronglyStarlike(v)
        elif config.problem == "convex":
            problem = Convex(DOMAIN_NAMES["disk"](v))
        else:
            problem = Starlike(DOMAIN_NAMES["disk"](v))
        res = solve(RadiusQuery(nf, problem), table=table,
                    resid_tol=config.resid_tol)
        records.append({
            "schema": SCHEMA,
            "family": config.family.name,
            "params": _family_fields(config.family),
            "form": nf.form,
            "problem": config.problem,
            "value": v,
            "radius": res.radius,
            "residual": res.residual,
        })
    return records, True


def _emit(records: list[dict], config: RunConfig) -> None:
    stream = open(config.out, "w") if config.out else sys.stdout
    try:
        if config.fmt == "json":
            for rec in records:
                stream.write(json.dumps(rec) + "\n")
        else:
            columns = _COLUMNS[config.command]
            writer = csv.writer(stream, lineterminator="\n")
            writer.writerow(columns)
            for rec in records:
                writer.writerow([
                    json.dumps(rec[c]) if isinstance(rec[c], dict)
                    else ("" if rec[c] is None else rec[c])
                    for c in columns
                ])
    finally:
        if config.out:
            stream.close()


_RUNNERS = {
    "radius": _run_radius,
    "zeros": _run_zeros,
    "alpha": _run_alpha,
    "verify": _run_verify,
    "sweep": _run_sweep,
}


def run(config: RunConfig) -> int:
    """Execute a parsed invocation; returns the exit status."""
    records, ok = _RUNNERS[config.command](config)
    _emit(records, config)
    return 0 if ok else 1


def main(argv: list[str] | None = None) -> int:
    try:
        return run(parse_args(argv))
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ComputationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
