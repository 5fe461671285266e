"""Command-line front end: strat-euler.

Reads declarative JSON problem files, dispatches to the analysis modules and
emits human-readable tables plus machine-readable JSON reports.  Problem
files are looked up literally first, then as named fixtures in the directory
given by STRAT_EULER_FIXTURES (default: the fixtures shipped with the
package).

Exit codes: 0 success, 2 parse error, 3 validation error, 4 mathematical
inconsistency (pole residue, fiber-consistency violation).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from .covariants import covariant_generators, universal_variety_info
from .equivariant_classes import FiniteBasisRing, LineSummand, builtin_ring
from .errors import (
    ConsistencyViolationError,
    PoleCancellationError,
    ProblemParseError,
    StratEulerError,
    ValidationError,
)
from .group_lattice import AmbientGroup, Subgroup
from .localization import (
    BundleRestriction,
    FixedComponent,
    LocalizationProblem,
    TRANSVERSALITY_ASSUMPTION,
    abbv_integral,
    intersection_number,
    fixed_locus_pairing,
    product_formula_check,
)
from .moduli_partition import (
    EquivariantBundle,
    feasibility_json,
    feasibility_report,
    partition,
    trivial_bundle,
    validate_consistency,
)
from .representations import Representation
from .stratification import (
    StratifiedSpace,
    Stratum,
    sphere_stratification,
    stratification_records,
)

SCHEMA = "strat-euler/1"
REPORT_SCHEMA = "strat-euler/report/1"


# -- problem file loading -----------------------------------------------------


def fixtures_dir() -> Path:
    override = os.environ.get("STRAT_EULER_FIXTURES")
    if override:
        return Path(override)
    return Path(__file__).parent / "fixtures"


def resolve_problem_path(name_or_path: str) -> Path:
    direct = Path(name_or_path)
    if direct.is_file():
        return direct
    base = fixtures_dir()
    for candidate in (base / name_or_path, base / f"{name_or_path}.json"):
        if candidate.is_file():
            return candidate
    raise ProblemParseError(f"no such problem file or fixture: {name_or_path}")


def load_problem(name_or_path: str) -> dict:
    path = resolve_problem_path(name_or_path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ProblemParseError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemParseError(
            f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(data, dict):
        raise ProblemParseError(f"{path}: top-level value must be an object")
    schema = data.get("schema")
    if schema is not None and schema != SCHEMA:
        raise ProblemParseError(f"{path}: unsupported schema {schema!r}")
    return data


def _expect(data: dict, key: str, kind, where: str):
    if key not in data:
        raise ProblemParseError(f"{where}: missing key {key!r}")
    value = data[key]
    if kind is not None and not isinstance(value, kind):
        raise ProblemParseError(f"{where}: key {key!r} has the wrong type")
    return value


def _parse_group(spec) -> AmbientGroup:
    if isinstance(spec, str):
        if spec in ("circle", "S1"):
            return AmbientGroup.circle()
        if spec.startswith("Z") and spec[1:].isdigit():
            return AmbientGroup.cyclic(int(spec[1:]))
        raise ProblemParseError(f"unknown group spec {spec!r}")
    if isinstance(spec, dict):
        kind = _expect(spec, "kind", str, "group")
        if kind == "circle":
            return AmbientGroup.circle()
        if kind == "cyclic":
            return AmbientGroup.cyclic(_expect(spec, "order", int, "group"))
    raise ProblemParseError(f"unknown group spec {spec!r}")


def _parse_subgroup(ambient: AmbientGroup, spec: str) -> Subgroup:
    if spec == "e":
        return Subgroup.trivial(ambient)
    if spec == "S1":
        return Subgroup.full_circle(ambient)
    if isinstance(spec, str) and spec.startswith("Z") and spec[1:].isdigit():
        return Subgroup.cyclic(ambient, int(spec[1:]))
    raise ProblemParseError(f"unknown isotropy spec {spec!r}")


def _parse_rep_spec(group: Subgroup, spec: dict, where: str) -> Representation:
    if not isinstance(spec, dict):
        raise ProblemParseError(f"{where}: representation spec must be an object")
    weights = spec.get("weights", [])
    if not isinstance(weights, list) or not all(isinstance(w, int) for w in weights):
        raise ProblemParseError(f"{where}: weights must be a list of integers")
    trivial = spec.get("trivial_real_dim", 0)
    if not isinstance(trivial, int):
        raise ProblemParseError(f"{where}: trivial_real_dim must be an integer")
    return Representation(group, tuple(weights), trivial)


def _build_stratification_problem(data: dict):
    """Returns (space, bundles: {name: EquivariantBundle})."""
    ambient = _parse_group(_expect(data, "group", None, "problem"))
    whole = ambient.full_subgroup()
    reps = {}
    for name, spec in data.get("representations", {}).items():
        reps[name] = _parse_rep_spec(whole, spec, f"representations.{name}")

    base = _expect(data, "base", dict, "problem")
    base_type = _expect(base, "type", str, "base")
    if base_type == "sphere":
        rep_name = _expect(base, "rep", str, "base")
        if rep_name not in reps:
            raise ProblemParseError(f"base: unknown representation {rep_name!r}")
        space = sphere_stratification(reps[rep_name])
    elif base_type == "explicit":
        strata = []
        for entry in _expect(base, "strata", list, "base"):
            strata.append(
                Stratum(
                    id=_expect(entry, "id", str, "base.strata"),
                    isotropy=_parse_subgroup(
                        ambient, _expect(entry, "isotropy", str, "base.strata")
                    ),
                    dim=_expect(entry, "dim", int, "base.strata"),
                    component_index=entry.get("component_index", 0),
                )
            )
        closure = [tuple(p) for p in base.get("closure", [])]
        space = StratifiedSpace(
            strata,
            closure,
            total_dim=base.get("total_dim"),
            oriented=base.get("oriented", True),
        )
    else:
        raise ProblemParseError(f"base: unknown type {base_type!r}")

    bundles = {}
    for name, spec in data.get("bundles", {}).items():
        where = f"bundles.{name}"
        if not isinstance(spec, dict):
            raise ProblemParseError(f"{where}: bundle spec must be an object")
        oriented = spec.get("oriented", True)
        if "fiber" in spec:
            rep_name = spec["fiber"]
            if rep_name not in reps:
                raise ProblemParseError(f"{where}: unknown representation {rep_name!r}")
            bundles[name] = trivial_bundle(space, reps[rep_name], oriented)
        elif "fibers" in spec:
            fibers = {}
            for stratum_id, rep_spec in spec["fibers"].items():
                iso = space.stratum(stratum_id).isotropy
                fibers[stratum_id] = _parse_rep_spec(iso, rep_spec, where)
            rank = _expect(spec, "rank", int, where)
            bundles[name] = EquivariantBundle(space, fibers, rank, oriented)
        else:
            raise ProblemParseError(f"{where}: need 'fiber' or 'fibers'")
    return space, bundles


def _parse_summand(entry, where: str) -> LineSummand:
    if not isinstance(entry, dict):
        raise ProblemParseError(f"{where}: summand must be an object")
    weight = _expect(entry, "w", int, where)
    chern = entry.get("c")
    if chern is not None and not isinstance(chern, dict):
        raise ProblemParseError(f"{where}: chern part must be a label->rational object")
    return LineSummand(weight, chern)


def _parse_bundle_restriction(spec, where: str) -> BundleRestriction:
    if isinstance(spec, list):
        return BundleRestriction(tuple(_parse_summand(s, where) for s in spec))
    if isinstance(spec, dict):
        summands = tuple(
            _parse_summand(s, where) for s in _expect(spec, "summands", list, where)
        )
        extra = spec.get("extra_euler")
        rank = spec.get("extra_rank", 0)
        return BundleRestriction(summands, extra_euler=extra, extra_rank=rank)
    raise ProblemParseError(f"{where}: bundle restriction must be a list or object")


def _build_localization_problem(data: dict) -> LocalizationProblem:
    total_dim = _expect(data, "total_dim", int, "problem")
    components = []
    for idx, comp in enumerate(_expect(data, "components", list, "problem")):
        where = f"components[{idx}]"
        if not isinstance(comp, dict):
            raise ProblemParseError(f"{where}: must be an object")
        ring_spec = _expect(comp, "ring", None, where)
        if isinstance(ring_spec, str):
            ring = builtin_ring(ring_spec)
        elif isinstance(ring_spec, dict):
            basis = [
                (b["label"], b["degree"])
                for b in _expect(ring_spec, "basis", list, f"{where}.ring")
            ]
            products = {
                (key.split("|")[0], key.split("|")[1]): combo
                for key, combo in ring_spec.get("products", {}).items()
            }
            ring = FiniteBasisRing(
                basis, products, _expect(ring_spec, "top", str, f"{where}.ring")
            )
        else:
            raise ProblemParseError(f"{where}: ring must be a builtin name or a table")
        normal = tuple(
            _parse_summand(s, f"{where}.normal")
            for s in _expect(comp, "normal", list, where)
        )
        bundles = {
            name: _parse_bundle_restriction(spec, f"{where}.bundles.{name}")
            for name, spec in _expect(comp, "bundles", dict, where).items()
        }
        components.append(
            FixedComponent(
                ring=ring,
                dim=_expect(comp, "dim", int, where),
                normal=normal,
                bundles=bundles,
            )
        )
    ranks = data.get("ranks")
    if ranks is None:
        # infer from the first component
        ranks = {
            name: restriction.rank
            for name, restriction in components[0].bundles.items()
        }
    if not isinstance(ranks, dict):
        raise ProblemParseError("ranks must be an object")
    return LocalizationProblem(
        total_dim=total_dim, components=tuple(components), ranks=ranks
    )


def _is_localization_problem(data: dict) -> bool:
    return "components" in data


# -- output helpers -----------------------------------------------------------


def _format_table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip()]
    for row in rows:
        lines.append(
            "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
        )
    return "\n".join(lines)


def _write_json(args, payload: dict) -> None:
    if getattr(args, "json", None):
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
        try:
            Path(args.json).write_text(text)
        except OSError as exc:
            raise StratEulerError(f"cannot write report to {args.json}: {exc}") from exc


def _say(args, text: str) -> None:
    if not getattr(args, "quiet", False):
        print(text)


def _coindex_str(value) -> str:
    return "inf" if value == math.inf else str(value)


# -- subcommands ---------------------------------------------------------------


def _select_bundle(bundles: dict, requested: str | None) -> tuple[str, EquivariantBundle]:
    if not bundles:
        raise ValidationError("the problem file declares no bundles")
    if requested is not None:
        if requested not in bundles:
            raise ValidationError(f"no bundle named {requested!r} in the problem file")
        return requested, bundles[requested]
    if len(bundles) > 1:
        raise ValidationError(
            f"several bundles declared ({', '.join(sorted(bundles))}); "
            f"choose one with --bundle"
        )
    name = next(iter(bundles))
    return name, bundles[name]


def cmd_stratify(args) -> int:
    data = load_problem(args.problem)
    space, _ = _build_stratification_problem(data)
    records = stratification_records(space)
    rows = [
        [
            r["stratum_id"],
            r["isotropy"],
            str(r["dim"]),
            str(r["codim"]),
            ",".join(r["closure_parents"]) or "-",
        ]
        for r in records
    ]
    _say(args, f"stratification: total_dim={space.total_dim} strata={len(records)}")
    print(_format_table(["stratum", "isotropy", "dim", "codim", "closure_parents"], rows))
    _write_json(
        args,
        {
            "schema": REPORT_SCHEMA,
            "kind": "stratification",
            "total_dim": space.total_dim,
            "strata": records,
        },
    )
    return 0


def _partition_rows(report) -> list[list[str]]:
    return [
        [
            r.stratum_id,
            r.isotropy.label,
            str(r.base_dim),
            str(r.codim),
            str(r.fixed_rank),
            str(r.obstruction_rank),
            str(r.r_h),
        ]
        for r in report.rows
    ]


_PARTITION_HEADERS = ["stratum", "isotropy", "dim", "codim", "fixed", "obstr", "r_H"]


def cmd_partition(args) -> int:
    data = load_problem(args.problem)
    space, bundles = _build_stratification_problem(data)
    name, bundle = _select_bundle(bundles, args.bundle)
    report = partition(bundle)
    _say(args, f"partition of {name}: rank={bundle.real_rank} over total_dim={space.total_dim}")
    print(_format_table(_PARTITION_HEADERS, _partition_rows(report)))
    _write_json(
        args,
        {
            "schema": REPORT_SCHEMA,
            "kind": "partition",
            "bundle": name,
            "strata": [
                {
                    "id": r.stratum_id,
                    "isotropy": r.isotropy.label,
                    "dim": r.base_dim,
                    "codim": r.codim,
                    "fixed_rank": r.fixed_rank,
                    "obstruction_rank": r.obstruction_rank,
                    "r_H": r.r_h,
                }
                for r in report.rows
            ],
        },
    )
    return 0


def _run_feasibility(args) -> int:
    data = load_problem(args.problem)
    space, bundles = _build_stratification_problem(data)
    name, bundle = _select_bundle(bundles, args.bundle)
    report = feasibility_report(bundle)
    _say(args, f"bundle {name}: n={report.n} k={report.k} oriented={str(bundle.oriented).lower()}")
    if not args.quiet:
        print(
            _format_table(
                _PARTITION_HEADERS,
                [
                    [
                        r.stratum_id,
                        r.isotropy.label,
                        str(r.base_dim),
                        str(r.codim),
                        str(r.fixed_rank),
                        str(r.obstruction_rank),
                        str(r.r_h),
                    ]
                    for r in report.rows
                ],
            )
        )
    payload = feasibility_json(report)
    payload["schema"] = REPORT_SCHEMA
    payload["kind"] = "feasibility"
    payload["bundle"] = name
    _write_json(args, payload)
    print(
        f"coindex={_coindex_str(report.coind)} r_e={report.r_e} "
        f"cycle_ok={str(report.cycle_ok).lower()} verdict={report.verdict}"
    )
    return 0


def cmd_coindex(args) -> int:
    return _run_feasibility(args)


def cmd_feasibility(args) -> int:
    return _run_feasibility(args)


def _run_pair(args, problem: LocalizationProblem, pair) -> dict:
    alpha, beta = pair
    psi = intersection_number(problem, alpha, beta)
    rhs = fixed_locus_pairing(problem, alpha, beta)
    formula_ok = product_formula_check(problem, alpha) and product_formula_check(
        problem, beta
    )
    match = "match" if psi == rhs else "MISMATCH"
    print(f"Psi = {psi} (fixed-locus pipeline = {rhs}, {match})")
    return {
        "schema": REPORT_SCHEMA,
        "kind": "intersection",
        "pair": [alpha, beta],
        "value": str(psi),
        "residue_upowers": [],
        "fixed_locus_value": str(rhs),
        "match": psi == rhs,
        "product_formula_ok": formula_ok,
        "note": TRANSVERSALITY_ASSUMPTION,
    }


def cmd_localize(args) -> int:
    data = load_problem(args.problem)
    if not _is_localization_problem(data):
        raise ProblemParseError("localize expects a localization problem file")
    problem = _build_localization_problem(data)
    payload = None
    if "class" in data:
        value = abbv_integral(problem, data["class"])
        print(str(value))
        payload = {
            "schema": REPORT_SCHEMA,
            "kind": "localize",
            "class": data["class"],
            **value.to_json(),
        }
    if "pair" in data:
        pair = data["pair"]
        if not isinstance(pair, list) or len(pair) != 2:
            raise ProblemParseError("pair must be a two-element list of bundle names")
        payload = _run_pair(args, problem, pair)
    if payload is None:
        raise ProblemParseError("nothing to evaluate: the file has no 'class' or 'pair'")
    _write_json(args, payload)
    return 0


def cmd_intersect(args) -> int:
    data = load_problem(args.problem)
    if not _is_localization_problem(data):
        raise ProblemParseError("intersect expects a localization problem file")
    pair = data.get("pair")
    if not isinstance(pair, list) or len(pair) != 2:
        raise ProblemParseError("intersect needs a two-element 'pair' in the file")
    problem = _build_localization_problem(data)
    payload = _run_pair(args, problem, pair)
    _write_json(args, payload)
    return 0


def cmd_covariants(args) -> int:
    group = args.group
    if group in ("circle", "S1"):
        modulus = 0
    elif group.startswith("Z") and group[1:].isdigit():
        modulus = int(group[1:])
    else:
        raise ProblemParseError(f"unknown group spec {group!r}")
    try:
        weights = [int(w) for w in args.weights.split(",") if w.strip() != ""]
    except ValueError:
        raise ProblemParseError(f"weights must be a comma list of integers, got {args.weights!r}")
    generators = covariant_generators(modulus, weights, args.target, args.bound)
    info = universal_variety_info(modulus, weights, [args.target], args.bound)
    print(", ".join(g.monomial_string() for g in generators) or "(none)")
    print(f"saturated={str(info.saturated).lower()}")
    _write_json(
        args,
        {
            "schema": REPORT_SCHEMA,
            "kind": "covariants",
            "group": group,
            "weights": weights,
            "target": args.target,
            "bound": args.bound,
            "generators": [g.monomial_string() for g in generators],
            "saturated": info.saturated,
        },
    )
    return 0


def cmd_check(args) -> int:
    data = load_problem(args.problem)
    if _is_localization_problem(data):
        problem = _build_localization_problem(data)
        if "pair" in data:
            pair = data["pair"]
            if not isinstance(pair, list) or len(pair) != 2:
                raise ProblemParseError("pair must be a two-element list")
            intersection_number(problem, pair[0], pair[1])
        elif "class" in data:
            abbv_integral(problem, data["class"])
        _say(args, f"components={len(problem.components)} bundles={sorted(problem.ranks)}")
    else:
        space, bundles = _build_stratification_problem(data)
        for bundle in bundles.values():
            validate_consistency(bundle)
            partition(bundle)
        _say(args, f"strata={len(space.strata)} bundles={sorted(bundles)}")
    print("ok")
    return 0


# -- argument parsing -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strat-euler",
        description=(
            "Orbit-type stratifications, obstruction systems and exact "
            "circle-equivariant localization."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, needs_problem=True, needs_bundle=False):
        p = sub.add_parser(name, help=help_text)
        if needs_problem:
            p.add_argument("problem", help="problem file path or fixture name")
        if needs_bundle:
            p.add_argument("--bundle", default=None, help="bundle name to analyze")
        p.add_argument("--json", default=None, help="write a JSON report to this path")
        p.add_argument("--quiet", action="store_true", help="only print the result lines")
        p.set_defaults(func=func)
        return p

    add("stratify", cmd_stratify, "orbit-type stratification table")
    add("partition", cmd_partition, "fixed/obstruction rank table", needs_bundle=True)
    add("coindex", cmd_coindex, "partition, coindex and feasibility verdict", needs_bundle=True)
    add("feasibility", cmd_feasibility, "full feasibility report", needs_bundle=True)
    add("localize", cmd_localize, "evaluate equivariant integrals")
    add("intersect", cmd_intersect, "intersection number of a declared pair")
    p = sub.add_parser("covariants", help="minimal equivariant monomial generators")
    p.add_argument("group", help="Z<m> or circle")
    p.add_argument("weights", help="comma-separated source weights, e.g. 1,2")
    p.add_argument("target", type=int, help="target weight")
    p.add_argument("bound", type=int, help="degree bound")
    p.add_argument("--json", default=None)
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_covariants)
    add("check", cmd_check, "validate a problem file end to end")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ProblemParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ConsistencyViolationError, PoleCancellationError) as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        value = getattr(exc, "value", None)
        if value is not None:
            print(f"residue: {value}", file=sys.stderr)
        return 4
    except (ValidationError, StratEulerError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
