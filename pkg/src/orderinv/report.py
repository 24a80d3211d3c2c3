"""Catalog sweeps: run every claim over every group, emit a deterministic report.

The report is plain JSON with sorted keys and no timestamps, so two runs
over the same catalog are byte-identical.  Exit status is part of the
payload: 1 means some exact-mode verdict came back inconsistent (or a
worker crashed), 2 means the only defects were malformed input files.
"""

from __future__ import annotations

import json
import os
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .groups import FiniteGroup
from .matching import DivisibilityMatching, find_divisibility_matching, verify_matching
from .numtheory import divisors
from .order_stats import (
    cyclic_excess,
    cyclic_profile,
    frobenius_table,
    order_profile,
    product_of_orders,
)
from .structure import (
    DEFAULT_SUBGROUP_CAP,
    count_cyclic_subgroups,
    is_cyclic,
    is_nilpotent,
    is_solvable,
)
from .theorems import (
    TheoremVerdict,
    check_cyclic_part_equivalence,
    check_diagonal_gap,
    check_frobenius_divisibility,
    check_min_cyclic_subgroups,
    check_nilpotent_sign,
    check_nonnegative_gap,
    check_nonpositive_gap,
    check_order_product_maximal,
    check_semidirect_count,
)

TOOL_VERSION = "0.1.0"

ALL_CLAIMS = (
    "frobenius-divisibility",
    "min-cyclic-count",
    "gap-nonneg",
    "gap-diagonal",
    "gap-nonpos",
    "nilpotent-sign",
    "cyclic-part-equivalence",
    "order-product-max",
    "inversion-semidirect-count",
    "divisibility-matching",
)

DEFAULT_GRID_BOUND = 3
# full-divisor sweeps only below this order; above it n = |G| alone
DIVISOR_SWEEP_LIMIT = 48

_SEMIDIRECT_LABEL = re.compile(r"^C(\d+):C(\d+)$")


def integer_pairs(bound: int) -> list[tuple[int, int]]:
    """All integer exponent pairs (r, s) with |r|, |s| <= bound."""
    span = range(-bound, bound + 1)
    return [(r, s) for r in span for s in span]


def nonneg_pairs(bound: int) -> list[tuple[int, int]]:
    """Integer pairs in the nonnegative-excess domain: s < r, s <= 0."""
    return [(r, s) for r, s in integer_pairs(bound) if s < r and s <= 0]


def nonpos_pairs(bound: int) -> list[tuple[int, int]]:
    """Integer pairs in the nonpositive-excess domain: r <= s - 1, s >= 1."""
    return [(r, s) for r, s in integer_pairs(bound) if r <= s - 1 and s >= 1]


def diagonal_exponents(bound: int) -> list[int]:
    """Negative diagonal exponents r = s = -1, ..., -bound."""
    return list(range(-1, -bound - 1, -1))


def resolve_workers(explicit: int | None = None) -> int:
    """Worker count: explicit argument, then ORDERINV_WORKERS, then a default."""
    if explicit is not None:
        count = explicit
    else:
        raw = os.environ.get("ORDERINV_WORKERS")
        if raw is None:
            return min(8, os.cpu_count() or 1)
        try:
            count = int(raw)
        except ValueError:
            raise ValueError(
                f"ORDERINV_WORKERS must be a positive integer, got {raw!r}"
            ) from None
    if count < 1:
        raise ValueError(f"worker count must be at least 1, got {count}")
    return count


@lru_cache(maxsize=512)
def _matching_for(profile) -> DivisibilityMatching:
    # profile objects are interned per group by order_profile's cache
    return find_divisibility_matching(profile)


def _sweep_orders(group: FiniteGroup, divisor_limit: int) -> list[int]:
    if group.order <= divisor_limit:
        return list(divisors(group.order))
    return [group.order]


def semidirect_label_parts(label: str) -> tuple[int, int, int] | None:
    """Split a label of the form C{m}:C{2^u * beta} into (m, beta, u).

    Returns None when the label is not of that form or the twisting
    factor is odd (the construction needs at least one factor of 2).
    """
    hit = _SEMIDIRECT_LABEL.match(label)
    if not hit:
        return None
    m, alpha = int(hit.group(1)), int(hit.group(2))
    if alpha % 2:
        return None
    u = 0
    beta = alpha
    while beta % 2 == 0:
        beta //= 2
        u += 1
    return m, beta, u


def _matching_verdict(group: FiniteGroup) -> TheoremVerdict:
    """Solvable groups always admit a divisibility matching.

    For non-solvable groups the claim is an open question, so a missing
    matching there is recorded but never counted as an inconsistency.
    """
    profile = order_profile(group)
    matching = _matching_for(profile)
    found = matching.status == "found"
    verified = verify_matching(profile, matching) if found else False
    solvable = is_solvable(group)
    if found:
        witness = "assignment verified" if verified else "assignment failed check"
    else:
        assert matching.violator is not None
        witness = f"no matching, blocking orders {sorted(matching.violator)}"
        if not solvable:
            witness += " (non-solvable, conjecture event)"
    return TheoremVerdict(
        claim="divisibility-matching",
        group=group.label,
        parameters=(("n", group.order),),
        sign="zero" if found else "pos",
        inequality_holds=found,
        equality_condition_holds=solvable,
        consistent=(found and verified) or (not found and not solvable),
        mode="exact",
        witness=witness,
    )


def evaluate_claim(
    group: FiniteGroup,
    claim: str,
    bound: int = DEFAULT_GRID_BOUND,
    subgroup_cap: int = DEFAULT_SUBGROUP_CAP,
    divisor_limit: int = DIVISOR_SWEEP_LIMIT,
) -> list[TheoremVerdict]:
    """All verdicts one claim produces for one group, [] when it does not apply."""
    if claim == "frobenius-divisibility":
        return [check_frobenius_divisibility(group)]
    if claim == "min-cyclic-count":
        return [check_min_cyclic_subgroups(group)]
    if claim == "gap-nonneg":
        return [
            check_nonnegative_gap(group, n, r, s)
            for n in _sweep_orders(group, divisor_limit)
            for r, s in nonneg_pairs(bound)
        ]
    if claim == "gap-diagonal":
        return [
            check_diagonal_gap(group, n, r, cap=subgroup_cap)
            for n in _sweep_orders(group, divisor_limit)
            for r in diagonal_exponents(bound)
        ]
    if claim == "gap-nonpos":
        return [check_nonpositive_gap(group, r, s) for r, s in nonpos_pairs(bound)]
    if claim == "nilpotent-sign":
        if not is_nilpotent(group) or is_cyclic(group):
            return []
        return [check_nilpotent_sign(group, r, s) for r, s in integer_pairs(bound)]
    if claim == "cyclic-part-equivalence":
        return [
            check_cyclic_part_equivalence(group, n)
            for n in _sweep_orders(group, divisor_limit)
        ]
    if claim == "order-product-max":
        return [check_order_product_maximal(group)]
    if claim == "inversion-semidirect-count":
        parts = semidirect_label_parts(group.label)
        if parts is None:
            return []
        m, beta, u = parts
        return [check_semidirect_count(m, beta, u, grid=bound)]
    if claim == "divisibility-matching":
        return [_matching_verdict(group)]
    raise ValueError(f"unknown claim {claim!r}")


def _scalar_json(value):
    if isinstance(value, bool) or isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return value
    return str(value)


def verdict_as_json(verdict: TheoremVerdict) -> dict:
    return {
        "claim": verdict.claim,
        "group": verdict.group,
        "parameters": {key: _scalar_json(value) for key, value in verdict.parameters},
        "sign": verdict.sign,
        "inequality_holds": verdict.inequality_holds,
        "equality_condition_holds": verdict.equality_condition_holds,
        "consistent": verdict.consistent,
        "mode": verdict.mode,
        "witness": verdict.witness,
    }


def _matching_as_json(profile) -> dict:
    matching = _matching_for(profile)
    found = matching.status == "found"
    return {
        "status": matching.status,
        "assignment": {
            str(d): {str(e): count for e, count in sorted(row.items())}
            for d, row in sorted(matching.assignment.items())
        },
        "violator": sorted(matching.violator) if matching.violator is not None else None,
        "verified": verify_matching(profile, matching) if found else False,
    }


def group_record(group: FiniteGroup, bound: int = DEFAULT_GRID_BOUND) -> dict:
    """Static per-group facts: profile, structure flags, invariants, excess grid."""
    profile = order_profile(group)
    table = frobenius_table(profile)
    baseline = cyclic_profile(group.order)
    grid = [
        [r, s, str(cyclic_excess(profile, group.order, r, s))]
        for r, s in integer_pairs(bound)
    ]
    return {
        "label": group.label,
        "order": group.order,
        "profile": {str(d): c for d, c in profile.counts.items()},
        "solution_counts": {str(m): b for m, b in table.counts.items()},
        "solution_ratios": {str(m): q for m, q in table.ratios.items()},
        "is_cyclic": is_cyclic(group),
        "is_nilpotent": is_nilpotent(group),
        "is_solvable": is_solvable(group),
        "cyclic_subgroup_count": count_cyclic_subgroups(group),
        "order_product": product_of_orders(profile).as_json(),
        "cyclic_order_product": product_of_orders(baseline).as_json(),
        "excess_grid": grid,
        "matching": _matching_as_json(profile),
    }


@dataclass(frozen=True)
class Report:
    payload: dict
    exit_status: int

    def to_json(self) -> str:
        return json.dumps(self.payload, indent=2, sort_keys=True) + "\n"


def run_sweep(
    groups,
    claims=None,
    bound: int = DEFAULT_GRID_BOUND,
    workers: int | None = None,
    subgroup_cap: int = DEFAULT_SUBGROUP_CAP,
    divisor_limit: int = DIVISOR_SWEEP_LIMIT,
    input_errors=(),
) -> Report:
    """Evaluate the selected claims on every group and assemble the report."""
    if claims is None:
        selected = list(ALL_CLAIMS)
    else:
        unknown = sorted(set(claims) - set(ALL_CLAIMS))
        if unknown:
            raise ValueError(f"unknown claims: {', '.join(unknown)}")
        selected = [c for c in ALL_CLAIMS if c in set(claims)]
    ordered = sorted(groups, key=lambda g: (g.order, g.label))
    labels = [g.label for g in ordered]
    if len(set(labels)) != len(labels):
        raise ValueError("group labels must be unique within a sweep")

    worker_count = resolve_workers(workers)
    anomalies: list[dict] = []
    records: dict[str, dict] = {}
    verdicts: dict[str, list[dict]] = {label: [] for label in labels}

    def run_static(group: FiniteGroup):
        return group_record(group, bound)

    def run_claim(group: FiniteGroup, claim: str):
        return [
            verdict_as_json(v)
            for v in evaluate_claim(
                group, claim, bound=bound, subgroup_cap=subgroup_cap,
                divisor_limit=divisor_limit,
            )
        ]

    with ThreadPoolExecutor(max_workers=worker_count) as pool:
        static_futures = [(g, pool.submit(run_static, g)) for g in ordered]
        claim_futures = [
            (g, claim, pool.submit(run_claim, g, claim))
            for g in ordered
            for claim in selected
        ]
        for group, future in static_futures:
            try:
                records[group.label] = future.result()
            except Exception as exc:  # noqa: BLE001 - report and flag, never hide
                records[group.label] = {"label": group.label, "order": group.order}
                anomalies.append({
                    "group": group.label,
                    "claim": "group-record",
                    "error": f"{type(exc).__name__}: {exc}",
                })
        for group, claim, future in claim_futures:
            try:
                verdicts[group.label].extend(future.result())
            except Exception as exc:  # noqa: BLE001
                anomalies.append({
                    "group": group.label,
                    "claim": claim,
                    "error": f"{type(exc).__name__}: {exc}",
                })

    for label in labels:
        rows = verdicts[label]
        rows.sort(key=lambda v: (v["claim"], json.dumps(v["parameters"], sort_keys=True)))
        records[label]["verdicts"] = rows
    anomalies.sort(key=lambda a: (a["group"], a["claim"], a["error"]))

    flat = [v for label in labels for v in verdicts[label]]
    inconsistent = [v for v in flat if not v["consistent"]]
    inconsistent_exact = [v for v in inconsistent if v["mode"] == "exact"]
    matching_rows = [records[label].get("matching") for label in labels]
    found = sum(1 for m in matching_rows if m and m["status"] == "found")
    violated = sum(1 for m in matching_rows if m and m["status"] == "violated")
    conjecture_events = sorted(
        label
        for label in labels
        if records[label].get("matching", {}).get("status") == "violated"
        and not records[label].get("is_solvable", True)
    )
    errors = [dict(e) for e in input_errors]
    errors.sort(key=lambda e: (e.get("path", ""), e.get("error", "")))

    if inconsistent_exact or anomalies:
        exit_status = 1
    elif errors:
        exit_status = 2
    else:
        exit_status = 0

    payload = {
        "schema_version": 1,
        "tool_version": TOOL_VERSION,
        "grid_bound": bound,
        "claims": selected,
        "groups": [records[label] for label in labels],
        "anomalies": anomalies,
        "input_errors": errors,
        "summary": {
            "groups": len(labels),
            "verdicts": len(flat),
            "inconsistent": len(inconsistent),
            "inconsistent_exact": len(inconsistent_exact),
            "matchings_found": found,
            "matchings_violated": violated,
            "conjecture_events": conjecture_events,
            "anomalies": len(anomalies),
            "input_errors": len(errors),
        },
        "exit_status": exit_status,
    }
    return Report(payload=payload, exit_status=exit_status)
