"""Command line front end.

Subcommands:
  compute  order profile and weighted invariants of one group
  verify   sweep the claim suite over a catalog, emit a JSON report
  match    divisibility matching between element orders and cyclic slots
  example  the inversion semidirect product family, counts and excess
  ingest   validate group files and print what they contain

Exit codes: 0 clean, 1 inconsistency or anomaly, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .catalog import (
    DEFAULT_ORDER_CAP,
    CatalogSpec,
    build_catalog,
    default_catalog_spec,
    group_from_label,
    load_group_file,
)
from .numtheory import (
    divisor_count,
    divisor_power_sum,
    divisors,
    exact_exponents,
    totient,
)
from .matching import find_divisibility_matching, verify_matching
from .order_stats import (
    FrobeniusViolated,
    cyclic_excess,
    cyclic_profile,
    cyclic_subgroup_count,
    frobenius_table,
    order_profile,
    product_of_orders,
    weighted_order_sum,
)
from .report import (
    DEFAULT_GRID_BOUND,
    run_sweep,
    semidirect_label_parts,
    verdict_as_json,
)
from .structure import count_cyclic_subgroups, is_cyclic, is_nilpotent, is_solvable
from .theorems import (
    APPROX_SIGN_MARGIN,
    EqualityRouteMismatch,
    check_semidirect_count,
)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return value


def _exponent(text: str):
    """Exponents: ints evaluate exactly, anything else as a float-backed scalar."""
    try:
        return int(text)
    except ValueError:
        pass
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    return int(value) if value.denominator == 1 else value


def _scalar_text(value):
    if isinstance(value, Fraction):
        return str(value)
    return value


def _sign_label(value, mode: str) -> str:
    margin = 0 if mode == "exact" else APPROX_SIGN_MARGIN
    if value > margin:
        return "pos"
    if value < -margin:
        return "neg"
    return "zero"


def _factored_text(exponents: dict) -> str:
    pairs = sorted(exponents.items(), key=lambda kv: int(kv[0]))
    return " * ".join(f"{p}^{e}" for p, e in pairs) if pairs else "1"


def _resolve_group(spec: str):
    """A group argument is either a file on disk or a catalog label."""
    if os.path.exists(spec) or spec.endswith(".json"):
        return load_group_file(spec)
    return group_from_label(spec)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8") as handle:
        handle.write(text)


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _kv_table(rows: list[tuple[str, object]]) -> str:
    width = max(len(key) for key, _ in rows)
    return "".join(f"{key.ljust(width)}  {value}\n" for key, value in rows)


def _run_compute(args) -> int:
    group = _resolve_group(args.group)
    n = args.n if args.n is not None else group.order
    profile = order_profile(group)
    table = frobenius_table(profile)
    r, s = args.r, args.s
    mode = "exact" if exact_exponents(r, s) else "approximate"
    excess = cyclic_excess(profile, n, r, s)
    payload = {
        "group": group.label,
        "order": group.order,
        "n": n,
        "r": _scalar_text(r),
        "s": _scalar_text(s),
        "mode": mode,
        "weighted_order_sum": _scalar_text(weighted_order_sum(profile, n, r, s)),
        "cyclic_baseline": _scalar_text(divisor_power_sum(n, r, s)),
        "cyclic_excess": _scalar_text(excess),
        "sign": _sign_label(excess, mode),
        "cyclic_subgroup_count": cyclic_subgroup_count(profile, n),
        "divisor_count": divisor_count(n),
        "solution_counts": {str(m): table.counts[m] for m in divisors(n)},
        "order_product": product_of_orders(profile).as_json(),
        "cyclic_order_product": product_of_orders(cyclic_profile(group.order)).as_json(),
        "is_cyclic": is_cyclic(group),
        "is_nilpotent": is_nilpotent(group),
        "is_solvable": is_solvable(group),
    }
    if args.format == "json":
        text = _json_text(payload)
    else:
        counts = " ".join(f"{m}={b}" for m, b in sorted(
            payload["solution_counts"].items(), key=lambda kv: int(kv[0])))
        text = _kv_table([
            ("group", payload["group"]),
            ("order", payload["order"]),
            ("n", payload["n"]),
            ("exponents", f"r={payload['r']} s={payload['s']} ({mode})"),
            ("weighted order sum", payload["weighted_order_sum"]),
            ("cyclic baseline", payload["cyclic_baseline"]),
            ("cyclic excess", f"{payload['cyclic_excess']} ({payload['sign']})"),
            ("cyclic subgroups", f"{payload['cyclic_subgroup_count']}"
             f" (divisor floor {payload['divisor_count']})"),
            ("solution counts", counts),
            ("order product", _factored_text(payload["order_product"])),
            ("cyclic order product", _factored_text(payload["cyclic_order_product"])),
            ("cyclic", payload["is_cyclic"]),
            ("nilpotent", payload["is_nilpotent"]),
            ("solvable", payload["is_solvable"]),
        ])
    _emit(text, args.out)
    return 0


def _load_catalog_spec(path: str, order_cap: int | None) -> tuple[CatalogSpec, list[str]]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise ValueError(f"{path}: cannot read file ({exc})") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise ValueError(f"{path}: expected a JSON object")
    families = data.get("families", {})
    if not isinstance(families, dict):
        raise ValueError(f"{path}: 'families' must map family names to parameter lists")
    ingested = data.get("ingested", [])
    if not isinstance(ingested, list) or not all(isinstance(p, str) for p in ingested):
        raise ValueError(f"{path}: 'ingested' must be a list of file paths")
    cap = order_cap if order_cap is not None else data.get("order_cap", DEFAULT_ORDER_CAP)
    if not isinstance(cap, int) or cap < 1:
        raise ValueError(f"{path}: 'order_cap' must be a positive integer")
    base = os.path.dirname(os.path.abspath(path))
    paths = [p if os.path.isabs(p) else os.path.join(base, p) for p in ingested]
    spec = CatalogSpec(
        families=tuple((name, tuple(params)) for name, params in families.items()),
        ingested=(),
        order_cap=cap,
    )
    return spec, paths


def _run_verify(args) -> int:
    if args.catalog == "default":
        cap = args.order_cap if args.order_cap is not None else DEFAULT_ORDER_CAP
        spec = default_catalog_spec(order_cap=cap)
        ingested_paths: list[str] = []
    else:
        spec, ingested_paths = _load_catalog_spec(args.catalog, args.order_cap)
    groups = build_catalog(spec, paranoid=args.paranoid)
    labels = {g.label for g in groups}
    input_errors = []
    for path in ingested_paths:
        try:
            group = load_group_file(path)
            if group.order > spec.order_cap:
                raise ValueError(
                    f"{path}: order {group.order} is above the catalog cap {spec.order_cap}"
                )
            if group.label in labels:
                raise ValueError(f"{path}: duplicate label {group.label!r}")
        except ValueError as exc:
            input_errors.append({"path": path, "error": str(exc)})
            continue
        labels.add(group.label)
        groups.append(group)
    claims = None
    if args.claims is not None:
        claims = [c.strip() for c in args.claims.split(",") if c.strip()]
        if not claims:
            raise ValueError("--claims given but no claim ids found")
    report = run_sweep(
        groups, claims=claims, bound=args.grid, input_errors=input_errors
    )
    if args.format == "table":
        text = _verify_table(report)
    else:
        text = report.to_json()
    _emit(text, args.out)
    return report.exit_status


def _verify_table(report) -> str:
    summary = report.payload["summary"]
    lines = [_kv_table([
        ("groups", summary["groups"]),
        ("verdicts", summary["verdicts"]),
        ("inconsistent", summary["inconsistent"]),
        ("anomalies", summary["anomalies"]),
        ("input errors", summary["input_errors"]),
        ("matchings found", summary["matchings_found"]),
        ("matchings violated", summary["matchings_violated"]),
        ("exit status", report.exit_status),
    ])]
    for record in report.payload["groups"]:
        for verdict in record.get("verdicts", ()):
            if not verdict["consistent"]:
                params = " ".join(
                    f"{k}={v}" for k, v in sorted(verdict["parameters"].items()))
                lines.append(
                    f"INCONSISTENT {verdict['group']} {verdict['claim']} {params}"
                    f" {verdict['witness']}\n")
    for anomaly in report.payload["anomalies"]:
        lines.append(
            f"ANOMALY {anomaly['group']} {anomaly['claim']} {anomaly['error']}\n")
    for err in report.payload["input_errors"]:
        lines.append(f"INPUT ERROR {err['path']}: {err['error']}\n")
    for label in summary["conjecture_events"]:
        lines.append(f"CONJECTURE EVENT {label}: no divisibility matching\n")
    return "".join(lines)


def _run_match(args) -> int:
    group = _resolve_group(args.group)
    profile = order_profile(group)
    matching = find_divisibility_matching(profile)
    found = matching.status == "found"
    verified = verify_matching(profile, matching) if found else False
    solvable = is_solvable(group)
    payload = {
        "group": group.label,
        "order": group.order,
        "status": matching.status,
        "assignment": {
            str(d): {str(e): c for e, c in sorted(row.items())}
            for d, row in sorted(matching.assignment.items())
        },
        "violator": sorted(matching.violator) if matching.violator is not None else None,
        "verified": verified,
        "is_solvable": solvable,
    }
    if args.format == "json":
        text = _json_text(payload)
    else:
        lines = [f"group {group.label} (order {group.order}): {matching.status}\n"]
        if found:
            lines[0] = lines[0].rstrip("\n") + (" and verified\n" if verified else
                                                " but FAILED verification\n")
            for d, row in sorted(matching.assignment.items()):
                for e, count in sorted(row.items()):
                    lines.append(f"  {count} element(s) of order {d} -> slots of C{e}\n")
        else:
            blockers = sorted(matching.violator)
            demand = sum(profile.counts[d] for d in blockers)
            slots = [e for e in divisors(group.order)
                     if any(e % d == 0 for d in blockers)]
            capacity = sum(totient(e) for e in slots)
            lines.append(f"  blocking orders {blockers}: "
                         f"{demand} elements but only {capacity} cyclic slots\n")
            if not solvable:
                lines.append("  group is not solvable; recorded as a conjecture event,"
                             " not a violation\n")
        text = "".join(lines)
    _emit(text, args.out)
    if found:
        return 0 if verified else 1
    return 0 if not solvable else 1


def _run_example(args) -> int:
    parts = semidirect_label_parts(args.group)
    if parts is None:
        raise ValueError(
            f"{args.group!r} is not an inversion semidirect label of the form"
            " C{m}:C{2^u * beta} with odd m"
        )
    m, beta, u = parts
    verdict = check_semidirect_count(m, beta, u, grid=args.grid)
    order = m * beta * 2**u
    payload = verdict_as_json(verdict)
    if args.format == "json":
        text = _json_text(payload)
    else:
        surplus = divisor_count(beta) * (m - divisor_count(m))
        text = _kv_table([
            ("group", args.group),
            ("order", order),
            ("divisor floor", divisor_count(order)),
            ("cyclic subgroup surplus", surplus),
            ("expected count", divisor_count(order) + surplus),
            ("checks", verdict.witness),
            ("closed-form excess grid", f"[-{args.grid}, {args.grid}]^2"),
            ("consistent", verdict.consistent),
        ])
    _emit(text, args.out)
    return 0 if verdict.consistent else 1


def _run_ingest(args) -> int:
    rows, errors = [], []
    for path in args.files:
        try:
            group = load_group_file(path)
        except ValueError as exc:
            errors.append({"path": path, "error": str(exc)})
            continue
        profile = order_profile(group)
        rows.append({
            "path": path,
            "label": group.label,
            "order": group.order,
            "profile": {str(d): c for d, c in profile.counts.items()},
        })
    if args.format == "json":
        text = _json_text({"groups": rows, "errors": errors})
    else:
        lines = []
        for row in rows:
            counts = " ".join(f"{d}:{c}" for d, c in sorted(
                row["profile"].items(), key=lambda kv: int(kv[0])))
            lines.append(f"OK {row['path']}: {row['label']} order {row['order']}"
                         f" profile {counts}\n")
        for err in errors:
            lines.append(f"ERROR {err['path']}: {err['error']}\n")
        text = "".join(lines)
    _emit(text, args.out)
    return 2 if errors else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orderinv",
        description="Order-profile invariants of finite groups, with a claim"
        " verification sweep.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_format: str) -> None:
        p.add_argument("--format", choices=("json", "table"), default=default_format,
                       help=f"output format (default: {default_format})")
        p.add_argument("--out", metavar="FILE", default=None,
                       help="write output to FILE instead of stdout")

    p = sub.add_parser("compute", help="order profile and invariants of one group")
    p.add_argument("--group", required=True,
                   help="catalog label (S4, C3:C10, C2xC6, ...) or a group JSON file")
    p.add_argument("--n", type=_positive_int, default=None,
                   help="restrict to divisors of n (default: the group order)")
    p.add_argument("--r", type=_exponent, default=1, help="totient exponent (default 1)")
    p.add_argument("--s", type=_exponent, default=0, help="order exponent (default 0)")
    common(p, "table")
    p.set_defaults(run=_run_compute)

    p = sub.add_parser("verify", help="sweep every claim over a catalog of groups")
    p.add_argument("--catalog", default="default",
                   help="'default' or a catalog spec JSON file")
    p.add_argument("--order-cap", type=_positive_int, default=None,
                   help=f"largest group order to include (default {DEFAULT_ORDER_CAP})")
    p.add_argument("--grid", type=_positive_int, default=DEFAULT_GRID_BOUND,
                   help="exponent bound G for the [-G, G]^2 sweeps (default"
                   f" {DEFAULT_GRID_BOUND})")
    p.add_argument("--claims", default=None,
                   help="comma separated claim ids to run (default: all)")
    p.add_argument("--paranoid", action="store_true",
                   help="fully re-validate constructed Cayley tables")
    common(p, "json")
    p.set_defaults(run=_run_verify)

    p = sub.add_parser("match", help="match elements to cyclic-subgroup slots by"
                       " divisibility")
    p.add_argument("--group", required=True,
                   help="catalog label or a group JSON file")
    common(p, "table")
    p.set_defaults(run=_run_match)

    p = sub.add_parser("example", help="inversion semidirect products: subgroup"
                       " counts and excess, closed form vs brute force")
    p.add_argument("--group", default="C3:C10",
                   help="semidirect label C{m}:C{2^u * beta} (default C3:C10)")
    p.add_argument("--grid", type=_positive_int, default=DEFAULT_GRID_BOUND,
                   help="exponent bound for the closed-form comparison")
    common(p, "table")
    p.set_defaults(run=_run_example)

    p = sub.add_parser("ingest", help="validate group files and show their profiles")
    p.add_argument("files", nargs="+", metavar="FILE")
    common(p, "table")
    p.set_defaults(run=_run_ingest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except (EqualityRouteMismatch, FrobeniusViolated) as exc:
        print(f"anomaly: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
