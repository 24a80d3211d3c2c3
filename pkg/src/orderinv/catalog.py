"""Catalog assembly, label parsing, and group-file ingestion.

The default catalog covers every stock family up to order 64 plus the
order-60 alternating group; ingested files extend it.  Labels double as
addresses: anything the catalog can build, ``group_from_label`` can
rebuild from its label alone.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from math import gcd

from .groups import (
    FiniteGroup,
    GroupConstructionError,
    PermutationGenSet,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    from_cayley_table,
    from_permutations,
    inversion_semidirect,
    quaternion_generalized,
    symmetric,
)
from .numtheory import factorize, is_prime

DEFAULT_ORDER_CAP = 64

ALTERNATING5_GENERATORS = PermutationGenSet(5, ((1, 2, 0, 3, 4), (1, 2, 3, 4, 0)))

# grid the semidirect family is sampled on (coprimality filters it further)
SEMIDIRECT_M = (3, 5, 9, 15)
SEMIDIRECT_BETA = (1, 3, 5)
SEMIDIRECT_U = (1, 2)


class UnknownFamily(ValueError):
    """A catalog family name with no registered builder."""


@dataclass(frozen=True)
class CatalogSpec:
    """What to build: named families plus files to ingest, under a cap."""

    families: tuple[tuple[str, tuple[int, ...]], ...]
    ingested: tuple[str, ...] = ()
    order_cap: int = DEFAULT_ORDER_CAP


def default_catalog_spec(order_cap: int = DEFAULT_ORDER_CAP) -> CatalogSpec:
    return CatalogSpec(
        families=(
            ("cyclic", (1, order_cap)),
            ("dihedral", (3, order_cap // 2)),
            ("quaternion", (8, order_cap)),
            ("elementary_abelian", ()),
            ("symmetric", (1, 5)),
            ("semidirect", ()),
            ("prime_products", ()),
            ("alternating", (5,)),
        ),
        order_cap=order_cap,
    )


def _squarefree_composites(cap: int) -> list[tuple[int, ...]]:
    out = []
    for n in range(6, cap + 1):
        fact = factorize(n)
        if len(fact.factors) >= 2 and all(e == 1 for _, e in fact.factors):
            out.append(fact.primes())
    return out


def _build_family(name: str, params: tuple[int, ...], cap: int, paranoid: bool):
    if name == "cyclic":
        lo, hi = params
        return [cyclic(n, paranoid=paranoid) for n in range(lo, hi + 1) if n <= cap]
    if name == "dihedral":
        lo, hi = params
        return [
            dihedral(n, paranoid=paranoid) for n in range(lo, hi + 1) if 2 * n <= cap
        ]
    if name == "quaternion":
        lo, hi = params
        out = []
        m = 8
        while m <= hi and m <= cap:
            if m >= lo:
                out.append(quaternion_generalized(m, paranoid=paranoid))
            m *= 2
        return out
    if name == "elementary_abelian":
        out = []
        for p in range(2, cap + 1):
            if not is_prime(p):
                continue
            k = 1
            while p**k <= cap:
                out.append(elementary_abelian(p, k, paranoid=paranoid))
                k += 1
        return out
    if name == "symmetric":
        lo, hi = params
        out = []
        order = 1
        for k in range(1, hi + 1):
            order *= k
            if k >= lo and order <= cap:
                out.append(symmetric(k, paranoid=paranoid))
        return out
    if name == "semidirect":
        out = []
        for m in SEMIDIRECT_M:
            for beta in SEMIDIRECT_BETA:
                for u in SEMIDIRECT_U:
                    alpha = 2**u * beta
                    if gcd(m, alpha) == 1 and m * alpha <= cap:
                        out.append(inversion_semidirect(m, beta, u, paranoid=paranoid))
        return out
    if name == "prime_products":
        out = []
        for primes in _squarefree_composites(cap):
            group = cyclic(primes[0], paranoid=paranoid)
            for p in primes[1:]:
                group = direct_product(group, cyclic(p, paranoid=paranoid))
            out.append(group)
        return out
    if name == "alternating":
        (k,) = params
        if k != 5:
            raise UnknownFamily(f"only the degree-5 alternating group is built, got {k}")
        if 60 > cap:
            return []
        return [from_permutations(ALTERNATING5_GENERATORS, "A5")]
    raise UnknownFamily(f"no catalog family named {name!r}")


def build_catalog(spec: CatalogSpec, paranoid: bool = False) -> list[FiniteGroup]:
    """Resolve a CatalogSpec into concrete groups, unique by label.

    Ingested files are loaded after the families; any validation error
    they raise propagates (callers wanting isolation load files one by
    one with load_group_file and hand survivors to the sweep).
    """
    groups: list[FiniteGroup] = []
    for name, params in spec.families:
        groups.extend(_build_family(name, params, spec.order_cap, paranoid))
    for path in spec.ingested:
        groups.append(load_group_file(path))
    seen: dict[str, int] = {}
    for g in groups:
        if g.order > spec.order_cap:
            raise GroupConstructionError(
                f"{g.label} has order {g.order}, above the catalog cap {spec.order_cap}"
            )
        if g.label in seen:
            raise ValueError(f"duplicate catalog label {g.label!r}")
        seen[g.label] = g.order
    groups.sort(key=lambda g: (g.order, g.label))
    return groups


_LABEL_PATTERNS: tuple[tuple[re.Pattern, object], ...] = (
    (re.compile(r"^C(\d+)$"), lambda m: cyclic(int(m.group(1)))),
    (re.compile(r"^D(\d+)$"), lambda m: dihedral(int(m.group(1)))),
    (re.compile(r"^Q(\d+)$"), lambda m: quaternion_generalized(int(m.group(1)))),
    (re.compile(r"^S(\d+)$"), lambda m: symmetric(int(m.group(1)))),
    (
        re.compile(r"^E(\d+)\^(\d+)$"),
        lambda m: elementary_abelian(int(m.group(1)), int(m.group(2))),
    ),
    (
        re.compile(r"^A5$"),
        lambda m: from_permutations(ALTERNATING5_GENERATORS, "A5"),
    ),
)


def _semidirect_from_label(text: str) -> FiniteGroup | None:
    match = re.fullmatch(r"C(\d+):C(\d+)", text)
    if not match:
        return None
    m, alpha = int(match.group(1)), int(match.group(2))
    u = 0
    beta = alpha
    while beta % 2 == 0:
        beta //= 2
        u += 1
    if u == 0:
        raise ValueError(f"{text}: the acting factor must have even order")
    return inversion_semidirect(m, beta, u)


def group_from_label(label: str) -> FiniteGroup:
    """Rebuild a catalog group from its label (e.g. C12, D6, Q16, S4,
    E3^2, A5, C3:C10, C2xC3)."""
    text = label.strip()
    semi = _semidirect_from_label(text)
    if semi is not None:
        return semi
    if "x" in text:
        parts = text.split("x")
        group = group_from_label(parts[0])
        for part in parts[1:]:
            group = direct_product(group, group_from_label(part))
        return group
    for pattern, build in _LABEL_PATTERNS:
        match = pattern.match(text)
        if match:
            return build(match)
    raise ValueError(f"unrecognized group label {label!r}")


def load_group_file(path: str) -> FiniteGroup:
    """Read one group from a JSON file: either a Cayley table
    {"label", "order", "table"} or permutation generators
    {"label", "degree", "generators"}.  Everything is validated; Cayley
    tables get the full associativity check since files are untrusted."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise ValueError(f"{path}: cannot read file ({exc})") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise ValueError(f"{path}: expected a JSON object at top level")
    label = data.get("label")
    if not isinstance(label, str) or not label:
        raise ValueError(f"{path}: missing or empty 'label'")
    if "table" in data:
        table = data["table"]
        order = data.get("order")
        if not isinstance(table, list) or (order is not None and order != len(table)):
            raise ValueError(
                f"{path}: 'order' ({order}) does not match the table size ({len(table) if isinstance(table, list) else 'not a list'})"
            )
        return from_cayley_table(table, label)
    if "generators" in data:
        degree = data.get("degree")
        gens = data["generators"]
        if not isinstance(degree, int) or not isinstance(gens, list):
            raise ValueError(f"{path}: permutation files need 'degree' and 'generators'")
        genset = PermutationGenSet(degree, tuple(tuple(g) for g in gens))
        return from_permutations(genset, label)
    raise ValueError(f"{path}: neither a Cayley-table nor a permutation-group file")
