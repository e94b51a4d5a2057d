"""Command-line front end producing reproducible reports on cubic threefolds.

Every subcommand builds one document.  Its ``report`` section depends only
on the input polynomial, primes, trials and seed; wall-clock timings live in
a separate ``timings`` section so two runs can be compared byte for byte.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import __version__
from .cubic import (
    EXPECTED,
    EXPECTED_CHART,
    FORMS,
    WITNESS_LINE,
    CubicThreefold,
    ProjPoint,
    builtin,
    eckardt_count,
    eckardt_points_exact,
    elliptic_curve_at,
    galois_orbits,
    inflection_analysis,
    sample_no_eckardt,
    smoothness_check,
)
from .fano import line_type, main_component_model, triple_line_count
from .groebner import DEFAULT_TRIALS, GroebnerResourceError, resource_caps
from .primes import DEFAULT_PRIMES, NoConsensusError, validate_primes

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NO_CONSENSUS = 2
EXIT_INCONSISTENT = 3
EXIT_RESOURCE = 4

COMMANDS = ("check", "eckardt", "triple-lines", "elliptic", "fano-main", "generate", "report")


class InputError(ValueError):
    pass


class InconsistentReport(RuntimeError):
    pass


class StageError(Exception):
    """An error raised inside a pipeline stage, tagged with the stage name."""

    def __init__(self, stage: str, cause: BaseException) -> None:
        super().__init__(f"[{stage}] {type(cause).__name__}: {cause}")
        self.stage = stage
        self.cause = cause


@dataclass
class RunConfig:
    command: str
    source: str | None = None  # inline polynomial or path to a file holding one
    builtin: str | None = None
    primes: tuple[int, ...] = DEFAULT_PRIMES
    primes_given: bool = False
    trials: int = DEFAULT_TRIALS
    seed: int = 0
    coeff_bound: int = 3
    max_basis: int | None = None
    json_path: str | None = None
    list_rational: bool = False
    per_cell: bool = False
    chart_only: bool = False
    main_component: bool = False
    point: str | None = None

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise InputError(f"unknown command {self.command!r}")
        try:
            self.primes = validate_primes(self.primes)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        if self.trials < 1:
            raise InputError("trials must be at least 1")
        if self.max_basis is not None and self.max_basis < 1:
            raise InputError("max-basis must be positive")
        if self.command != "generate" and (self.source is None) == (self.builtin is None):
            raise InputError("give exactly one of a polynomial, an input file or --builtin")


def load_cubic(config: RunConfig) -> CubicThreefold:
    if config.builtin is not None:
        try:
            return builtin(config.builtin)
        except KeyError as exc:
            raise InputError(exc.args[0]) from exc
    text = config.source
    path = Path(text)
    if "\n" not in text and path.is_file():
        lines = [ln.split("#", 1)[0].strip() for ln in path.read_text().splitlines()]
        text = " ".join(ln for ln in lines if ln)
    try:
        return CubicThreefold(text)
    except ValueError as exc:
        raise InputError(f"cannot read cubic: {exc}") from exc


def identify(X: CubicThreefold) -> str | None:
    """Name of the builtin cubic with exactly this form, if any."""
    for name in FORMS:
        if builtin(name) == X:
            return name
    return None


def parse_point(text: str) -> ProjPoint:
    from fractions import Fraction

    parts = text.strip().strip("()").split(":")
    if len(parts) != 5:
        raise InputError(f"point {text!r} needs five coordinates separated by ':'")
    try:
        return ProjPoint([Fraction(p.strip()) for p in parts])
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad point {text!r}: {exc}") from exc


def paper_expectations() -> dict:
    out = {}
    for name, exp in EXPECTED.items():
        entry = dict(exp)
        if name in EXPECTED_CHART:
            entry.update(EXPECTED_CHART[name])
        out[name] = entry
    return out


def _key(pair: tuple[int, int]) -> str:
    return f"{pair[0]},{pair[1]}"


class Report:
    """Accumulates the comparable body and the timings of one run."""

    def __init__(self, config: RunConfig) -> None:
        self.config = config
        self.body: dict = {
            "command": config.command,
            "version": __version__,
            "settings": {"primes": list(config.primes), "trials": config.trials, "seed": config.seed},
        }
        self.timings: dict[str, float] = {}

    @contextmanager
    def stage(self, name: str):
        start = time.perf_counter()
        try:
            yield
        except (StageError, InputError):
            raise
        except Exception as exc:
            raise StageError(name, exc) from exc
        finally:
            self.timings[name] = round(time.perf_counter() - start, 3)

    def document(self) -> dict:
        return {"report": self.body, "timings": self.timings}


def dumps(doc: dict) -> str:
    """Canonical serialization: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def emit_report(doc: dict, path: str) -> None:
    text = dumps(doc)
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


# ---- stages -----------------------------------------------------------------


def smoothness_section(X: CubicThreefold, primes: Sequence[int]) -> dict:
    v = smoothness_check(X, primes)
    return {
        "smooth": v.smooth,
        "verdict": v.label,
        "primes": list(v.primes),
        "per_prime": {str(p): ok for p, ok in v.per_prime.items()},
        "witness_prime": v.witness_prime,
        "rational_singular_point": v.rational_singular_point.text() if v.rational_singular_point else None,
    }


def eckardt_section(X: CubicThreefold, config: RunConfig) -> dict:
    r = eckardt_count(X, config.primes, config.trials, config.seed, with_rational=config.list_rational)
    if sum(r.strata) != r.total:
        raise InconsistentReport(f"Eckardt strata {r.strata} do not sum to {r.total}")
    out = {
        "total": r.total,
        "strata": list(r.strata),
        "multiplicities": list(r.multiplicities),
        "primes": list(r.primes),
        "unanimous": not r.outliers and set(r.primes) == set(config.primes),
        "outliers": list(r.outliers),
    }
    if config.list_rational:
        out["rational_points"] = [p.text() for p in r.rational_points or []]
        out["rational_complete"] = r.rational_complete
    return out


def triple_section(X: CubicThreefold, config: RunConfig) -> dict:
    r = triple_line_count(X, config.primes, config.trials, config.seed, chart_only=config.chart_only)
    if sum(r.per_cell.values()) != r.total:
        raise InconsistentReport("per-cell triple-line counts do not sum to the total")
    out = {
        "total": None if config.chart_only else r.total,
        "chart01": r.chart01,
        "per_cell": dict(r.per_cell),
        "primes": list(r.primes),
        "outliers": list(r.outliers),
    }
    if config.per_cell:
        out["per_alpha_stratum"] = {k: list(v) for k, v in r.per_alpha.items()}
    return out


def elliptic_entry(X: CubicThreefold, p: ProjPoint, trials: int) -> dict:
    E = elliptic_curve_at(X, p)
    c = inflection_analysis(E, trials=trials)
    return {
        "point": p.text(),
        "field": "QQ" if p.field.kind == "rationals" else "QQ(xi)",
        "plane_cubic": str(E.cbar),
        "smooth_primes": list(E.smooth_primes),
        "inflection": {"distinct": c.distinct, "multiplicity": c.multiplicity, "primes": list(c.primes)},
    }


def elliptic_section(X: CubicThreefold, config: RunConfig, total: int | None = None) -> dict:
    if config.point is not None:
        points, complete = [parse_point(config.point)], True
    else:
        if total is None:
            total = eckardt_count(X, config.primes, config.trials, config.seed).total
        points, complete = eckardt_points_exact(X, total)
    entries = [elliptic_entry(X, p, config.trials) for p in points]
    chart = [p for p in points if not (p.field.is_zero(p[0]) and p.field.is_zero(p[1]))]
    return {
        "curves": entries,
        "complete": complete,
        "orbits": [[p.text() for p in orb] for orb in galois_orbits(points)],
        "chart_curves": len(galois_orbits(chart)),
    }


def main_section(X: CubicThreefold, config: RunConfig) -> dict:
    m = main_component_model(X, config.primes if config.primes_given else None, config.trials, config.seed)
    return {
        "points": [p.text() for p in m.points],
        "orbits": [[p.text() for p in orb] for orb in m.orbits],
        "per_point": [x.as_dict() for x in m.per_point],
        "triple_points": list(m.triple_points),
        "pairwise_points": {_key(k): v.as_dict() for k, v in m.pairwise_points.items()},
        "per_curve": [x.as_dict() for x in m.per_curve],
        "pairwise_curves": {_key(k): v.as_dict() for k, v in m.pairwise_curves.items()},
        "chart_triple_lines": m.chart_triple_lines,
        "primes": list(m.primes),
        "saturation_stable": m.stable,
        "contains_m": m.contains_m,
        "points_complete": m.complete,
    }


def generate_section(config: RunConfig) -> dict:
    s = sample_no_eckardt(config.seed, config.coeff_bound, config.primes)
    return {
        "polynomial": s.cubic.text(),
        "q0": str(s.q0),
        "q1": str(s.q1),
        "k": s.k,
        "seed": s.seed,
        "coeff_bound": config.coeff_bound,
        "attempts": s.attempts,
        "smooth": True,
        "eckardt_total": s.eckardt.total,
        "eckardt_primes": list(s.eckardt.primes),
        "witness_line": "x2 = x3 = x4 = 0",
        "witness_line_type": line_type(s.cubic, *WITNESS_LINE),
    }


def compare(name: str, body: dict) -> list[dict]:
    """Observed values against the known ones for a named cubic."""
    exp = paper_expectations().get(name, {})
    observed: dict = {}
    if "eckardt" in body:
        observed["n_E"] = body["eckardt"]["total"]
        observed["n_E_strata"] = body["eckardt"]["strata"]
    if "triple_lines" in body:
        if body["triple_lines"]["total"] is not None:
            observed["n_T"] = body["triple_lines"]["total"]
        observed["n_T_chart"] = body["triple_lines"]["chart01"]
    if "elliptic" in body:
        observed["n_Ep_chart"] = body["elliptic"]["chart_curves"]
    rows = []
    mc = body.get("main_component")
    for key in sorted(exp):
        if key in ("Ep.P", "Ep.Eq"):
            if mc is None:
                continue
            items = mc["per_curve"] if key == "Ep.P" else list(mc["pairwise_curves"].values())
            matched = []
            for conv in ("distinct", "multiplicity", "rational"):
                values = [x[conv] for x in items]
                if None not in values and sorted(values) == sorted(exp[key]):
                    matched.append(conv)
            rows.append({"quantity": key, "expected": exp[key], "conventions": matched, "match": bool(matched)})
            continue
        if key in observed:
            rows.append({"quantity": key, "expected": exp[key], "observed": observed[key], "match": observed[key] == exp[key]})
    return rows


def run(config: RunConfig) -> tuple[int, dict]:
    """Execute one subcommand; returns the exit status and the document."""
    rep = Report(config)
    with resource_caps(max_basis=config.max_basis):
        if config.command == "generate":
            with rep.stage("generate"):
                rep.body["generate"] = generate_section(config)
            return EXIT_OK, rep.document()
        with rep.stage("input"):
            X = load_cubic(config)
            name = identify(X)
            rep.body["input"] = {"polynomial": X.text(), "builtin": name}
        cmd = config.command
        if cmd in ("check", "report"):
            with rep.stage("smoothness"):
                rep.body["smoothness"] = smoothness_section(X, config.primes)
            if not rep.body["smoothness"]["smooth"]:
                return (EXIT_OK if cmd == "check" else EXIT_INPUT), rep.document()
        total = None
        if cmd in ("eckardt", "report"):
            with rep.stage("eckardt"):
                rep.body["eckardt"] = eckardt_section(X, config)
                total = rep.body["eckardt"]["total"]
        if cmd in ("triple-lines", "report"):
            with rep.stage("triple_lines"):
                rep.body["triple_lines"] = triple_section(X, config)
        if cmd in ("elliptic", "report"):
            with rep.stage("elliptic"):
                rep.body["elliptic"] = elliptic_section(X, config, total)
        if cmd == "fano-main" or (cmd == "report" and config.main_component):
            with rep.stage("main_component"):
                rep.body["main_component"] = main_section(X, config)
        if cmd == "report":
            rep.body["paper_expectations"] = paper_expectations()
            if name is not None:
                rep.body["comparison"] = compare(name, rep.body)
    return EXIT_OK, rep.document()


# ---- text output ------------------------------------------------------------


def summary_lines(body: dict) -> list[str]:
    out = []
    if "input" in body:
        tag = f" [{body['input']['builtin']}]" if body["input"]["builtin"] else ""
        out.append(f"cubic{tag}: {body['input']['polynomial']}")
    if "smoothness" in body:
        s = body["smoothness"]
        line = f"smoothness: {s['verdict']} (primes {s['primes']})"
        if s["rational_singular_point"]:
            line += f"; singular point {s['rational_singular_point']}"
        out.append(line)
    if "eckardt" in body:
        e = body["eckardt"]
        out.append(f"Eckardt points: {e['total']} strata {e['strata']} (primes {e['primes']})")
        for p in e.get("rational_points", []):
            out.append(f"  rational: {p}")
    if "triple_lines" in body:
        t = body["triple_lines"]
        total = "-" if t["total"] is None else t["total"]
        out.append(f"triple lines: {total}, in chart (0,1): {t['chart01']} (primes {t['primes']})")
        for cell, n in t["per_cell"].items():
            out.append(f"  {cell}: {n}")
    if "elliptic" in body:
        for c in body["elliptic"]["curves"]:
            inf = c["inflection"]
            out.append(f"E at {c['point']}: {c['plane_cubic']} = 0, {inf['distinct']} inflection points ({inf['multiplicity']} with multiplicity)")
    if "main_component" in body:
        m = body["main_component"]
        for orb, x in zip(m["orbits"], m["per_curve"]):
            out.append(f"E.P over {', '.join(orb)}: {x['distinct']} distinct, {x['multiplicity']} with multiplicity, {x['rational']} rational")
        for k, x in m["pairwise_curves"].items():
            out.append(f"E.E' for curves {k}: {x['distinct']}")
        out.append(f"saturation stable: {m['saturation_stable']} (primes {m['primes']})")
    if "generate" in body:
        g = body["generate"]
        out.append(f"generated (seed {g['seed']}, attempt {g['attempts']}): {g['polynomial']}")
        out.append(f"  Eckardt points: {g['eckardt_total']}, witness line {g['witness_line']}: {g['witness_line_type']}")
    for row in body.get("comparison", []):
        mark = "ok" if row["match"] else "MISMATCH"
        seen = row.get("observed", row.get("conventions"))
        out.append(f"check {row['quantity']}: expected {row['expected']}, got {seen} -> {mark}")
    return out


# ---- argument parsing -------------------------------------------------------


def _primes_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--primes", type=_primes_arg, default=None, help="comma-separated primes (default 32003,31013,30011)")
    common.add_argument("--trials", type=int, default=DEFAULT_TRIALS, help="random separating forms per count")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-basis", type=int, default=None, help="abort when a Groebner basis grows past this size")
    common.add_argument("--json", dest="json_path", metavar="PATH", help="write the report document here ('-' for stdout)")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("source", nargs="?", help="cubic form in x0..x4, or a file containing one")
    source.add_argument("--builtin", help=f"named cubic: {', '.join(FORMS)} (alias: canonero)")

    parser = argparse.ArgumentParser(prog="eckardt", description="Eckardt points and triple lines of cubic threefolds.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("check", parents=[common, source], help="smoothness test")
    p = sub.add_parser("eckardt", parents=[common, source], help="count Eckardt points")
    p.add_argument("--list-rational", action="store_true", help="also list the rational Eckardt points")
    p = sub.add_parser("triple-lines", parents=[common, source], help="count triple lines")
    p.add_argument("--chart-only", action="store_true", help="only the cell p01 = 1")
    p.add_argument("--per-cell", action="store_true", help="include the per-alpha-stratum breakdown")
    p = sub.add_parser("elliptic", parents=[common, source], help="elliptic curves at Eckardt points")
    p.add_argument("--point", help="a rational point a:b:c:d:e (default: every Eckardt point)")
    sub.add_parser("fano-main", parents=[common, source], help="main component against the elliptic curves")
    p = sub.add_parser("generate", parents=[common], help="sample a cubic with a triple line and no Eckardt points")
    p.add_argument("--coeff-bound", type=int, default=3)
    p = sub.add_parser("report", parents=[common, source], help="full pipeline")
    p.add_argument("--list-rational", action="store_true")
    p.add_argument("--chart-only", action="store_true")
    p.add_argument("--per-cell", action="store_true")
    p.add_argument("--main-component", action="store_true", help="include the main-component section")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        source=getattr(args, "source", None),
        builtin=getattr(args, "builtin", None),
        primes=args.primes or DEFAULT_PRIMES,
        primes_given=args.primes is not None,
        trials=args.trials,
        seed=args.seed,
        coeff_bound=getattr(args, "coeff_bound", 3),
        max_basis=args.max_basis,
        json_path=args.json_path,
        list_rational=getattr(args, "list_rational", False),
        per_cell=getattr(args, "per_cell", False),
        chart_only=getattr(args, "chart_only", False),
        main_component=getattr(args, "main_component", False),
        point=getattr(args, "point", None),
    )


def _status_for(exc: BaseException) -> int:
    if isinstance(exc, StageError):
        exc = exc.cause
    if isinstance(exc, NoConsensusError):
        return EXIT_NO_CONSENSUS
    if isinstance(exc, (InconsistentReport, AssertionError)):
        return EXIT_INCONSISTENT
    if isinstance(exc, GroebnerResourceError):
        return EXIT_RESOURCE
    if isinstance(exc, (ValueError, OSError)):
        return EXIT_INPUT
    return EXIT_INCONSISTENT


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
        status, doc = run(config)
    except Exception as exc:  # noqa: BLE001 - every failure maps to an exit status
        print(f"error: {exc}", file=sys.stderr)
        return _status_for(exc)
    if config.json_path != "-":
        print("\n".join(summary_lines(doc["report"])))
    if config.json_path:
        emit_report(doc, config.json_path)
    if status == EXIT_INPUT and "smoothness" in doc["report"]:
        print("error: the cubic is singular", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
