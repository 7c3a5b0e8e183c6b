"""Search driver: enumeration and targeted hunts over small-order loops.

The cell-fill kernel (compiled when available, pure Python otherwise)
explores normalized tables and emits canonical class representatives.
This module splits the tree into independent subtrees at the row-1
boundary, runs them sequentially or on a process pool, merges results,
and re-verifies every emitted table with the property checkers - the
kernel's incremental pruning is never trusted for final verdicts.

Determinism: subtrees are processed in lexicographic order of their
row-1 prefix and candidate values ascend, so the representative list
and any witness are identical for every worker count.  The node budget
applies to each subtree independently (and to the prefix scan), which
keeps budget-limited runs reproducible across worker counts as well.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Callable

from ..errors import OrderTooLargeForExact, SearchSelfCheckError
from ..props import (
    Verdict,
    commutant,
    is_associative,
    is_left_bol,
    is_moufang,
    is_right_bol,
    is_subloop,
    is_uniquely_2_divisible,
    square_roots,
)
from ..table import LoopTable
from . import get_kernel

CONSTRAINT_IDS = {
    "none": 0,
    "left-bol": 1,
    "right-bol": 2,
    "moufang": 3,
    "associative": 4,
}

#: Largest order with exact isomorph rejection (and thus exact search).
EXACT_ORDER_LIMIT = 10

DEFAULT_NODE_BUDGET = 10**8
DEFAULT_WALL_BUDGET = 600.0


@dataclass(frozen=True)
class SearchSpec:
    """What to search: order, class constraint, mode, target, budgets."""

    order: int
    constraint: str = "none"
    mode: str = "enumerate"  # "enumerate" | "find-first"
    target: str | None = None
    node_budget: int = DEFAULT_NODE_BUDGET
    wall_budget_s: float = DEFAULT_WALL_BUDGET
    jobs: int = 1
    iso_rows: int = -1  # -1: minimality rejection at every row boundary; 0: off
    nonassociative_only: bool = False
    debug_leaf_check: bool = False
    backend: str | None = None

    def __post_init__(self):
        if self.order < 1:
            raise ValueError(f"order must be >= 1, got {self.order}")
        if self.constraint not in CONSTRAINT_IDS:
            raise ValueError(f"unknown class constraint {self.constraint!r}")
        if self.mode not in ("enumerate", "find-first"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "find-first":
            if self.target not in TARGET_CHECKS:
                raise ValueError(
                    f"unknown target {self.target!r}; known: {', '.join(sorted(TARGET_CHECKS))}"
                )
        if self.node_budget < 1 or self.wall_budget_s <= 0:
            raise ValueError("budgets must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")


@dataclass(frozen=True)
class SearchStats:
    nodes: int = 0
    latin_prunes: int = 0
    identity_prunes: int = 0
    iso_prunes: int = 0
    leaves: int = 0
    canonical: int = 0
    subtrees: int = 0

    def to_json_dict(self) -> dict:
        return {
            "nodes": self.nodes,
            "latin_prunes": self.latin_prunes,
            "identity_prunes": self.identity_prunes,
            "iso_prunes": self.iso_prunes,
            "leaves": self.leaves,
            "canonical": self.canonical,
            "subtrees": self.subtrees,
        }


@dataclass(frozen=True)
class SearchWitness:
    """A loop satisfying a find-first target, with the concrete evidence."""

    table: LoopTable
    target: str
    data: dict


@dataclass(frozen=True)
class SearchResult:
    spec: SearchSpec
    representatives: tuple[LoopTable, ...]
    witnesses: tuple[SearchWitness, ...]
    stats: SearchStats
    exhausted: bool
    found: bool


# -- find-first targets ------------------------------------------------------


def target_commutant_not_subloop(table: LoopTable) -> dict | None:
    """Commutant fails closure under product or a division."""
    members = commutant(table)
    verdict = is_subloop(table, members)
    if verdict.holds:
        return None
    op, a, b = verdict.witnesses[0]
    return {
        "commutant": list(members),
        "operation": op,
        "pair": [a, b],
    }


def target_conjecture_witness(table: LoopTable) -> dict | None:
    """Uniquely 2-divisible with a commutant element whose root is outside.

    On a finite uniquely 2-divisible loop the squaring map is a
    bijection, so each commutant element has exactly one square root;
    the target asks for one whose root is not in the commutant.
    """
    if not is_uniquely_2_divisible(table).holds:
        return None
    members = set(commutant(table))
    for a in sorted(members):
        root = square_roots(table, a)[0]
        if root not in members:
            return {"element": a, "square_root": root, "commutant": sorted(members)}
    return None


TARGET_CHECKS: dict[str, Callable[[LoopTable], dict | None]] = {
    "commutant-not-subloop": target_commutant_not_subloop,
    "conjecture-witness": target_conjecture_witness,
}

CONSTRAINT_VERDICTS: dict[str, Callable[[LoopTable], Verdict]] = {
    "left-bol": is_left_bol,
    "right-bol": is_right_bol,
    "moufang": is_moufang,
    "associative": is_associative,
}


# -- subtree execution ---------------------------------------------------------


def _make_leaf_cb(target: str, n: int):
    check = TARGET_CHECKS[target]
    return lambda flat: check(LoopTable.from_flat(flat, n)) is not None


def _subtree_task(args: tuple) -> dict:
    (backend, n, constraint_id, prefix, find_mode, target, node_budget, deadline,
     iso_rows, debug_leaf) = args
    kernel = get_kernel(backend)
    leaf_cb = _make_leaf_cb(target, n) if find_mode else None
    out = kernel.run(
        n,
        constraint_id,
        prefix=prefix,
        find_mode=find_mode,
        leaf_cb=leaf_cb,
        node_budget=node_budget,
        deadline=deadline,
        iso_rows=iso_rows,
        debug_leaf=debug_leaf,
    )
    out["tables"] = list(out["tables"])
    return out


def _merge_stats(parts: list[dict], subtrees: int) -> SearchStats:
    return SearchStats(
        nodes=sum(p["nodes"] for p in parts),
        latin_prunes=sum(p["latin_prunes"] for p in parts),
        identity_prunes=sum(p["identity_prunes"] for p in parts),
        iso_prunes=sum(p["iso_prunes"] for p in parts),
        leaves=sum(p.get("leaves", 0) for p in parts),
        canonical=sum(p.get("canonical", 0) for p in parts),
        subtrees=subtrees,
    )


def _reverify(table: LoopTable, spec: SearchSpec, kernel) -> None:
    """Independent check of an emitted representative (bug trap)."""
    if spec.constraint != "none":
        verdict = CONSTRAINT_VERDICTS[spec.constraint](table)
        if not verdict.holds:
            raise SearchSelfCheckError(
                f"emitted table violates {spec.constraint}: witness {verdict.witnesses[:1]}"
            )
    flat = table.flat_bytes()
    if kernel.canonical_form_bytes(flat, table.order) != flat:
        raise SearchSelfCheckError("emitted table is not in canonical form")


def _run_search(spec: SearchSpec) -> SearchResult:
    n = spec.order
    if n > EXACT_ORDER_LIMIT:
        raise OrderTooLargeForExact(
            f"search relies on exact isomorph rejection, available for order <= {EXACT_ORDER_LIMIT}"
        )
    kernel = get_kernel(spec.backend)
    cid = CONSTRAINT_IDS[spec.constraint]
    find_mode = spec.mode == "find-first"
    deadline = time.monotonic() + spec.wall_budget_s

    pre = kernel.collect_prefixes(
        n, cid, node_budget=spec.node_budget, deadline=deadline, iso_rows=spec.iso_rows
    )
    prefixes: list[bytes] = list(pre["tables"])
    parts: list[dict] = [pre]
    tasks = [
        (spec.backend, n, cid, prefix, find_mode, spec.target, spec.node_budget,
         deadline, spec.iso_rows, spec.debug_leaf_check)
        for prefix in prefixes
    ]

    found_table: bytes | None = None
    if spec.jobs > 1 and len(tasks) > 1:
        workers = min(spec.jobs, len(tasks))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_subtree_task, tasks))
        for out in results:
            parts.append(out)
            if find_mode and found_table is None and out["found"]:
                found_table = out["tables"][0]
    else:
        for task in tasks:
            out = _subtree_task(task)
            parts.append(out)
            if find_mode and out["found"]:
                found_table = out["tables"][0]
                break

    stats = _merge_stats(parts, subtrees=len(prefixes))
    exhausted = all(p["exhausted"] for p in parts)

    if find_mode:
        if found_table is None:
            return SearchResult(spec, (), (), stats, exhausted, found=False)
        table = LoopTable.from_flat(found_table, n)
        _reverify(table, spec, kernel)
        data = TARGET_CHECKS[spec.target](table)
        if data is None:
            raise SearchSelfCheckError("found table does not satisfy the target predicate")
        witness = SearchWitness(table, spec.target, data)
        return SearchResult(spec, (table,), (witness,), stats, exhausted=False, found=True)

    flats = [flat for out in parts[1:] for flat in out["tables"]]
    flats.sort()
    tables = []
    for flat in flats:
        table = LoopTable.from_flat(flat, n)
        _reverify(table, spec, kernel)
        tables.append(table)
    if spec.nonassociative_only:
        tables = [t for t in tables if not is_associative(t).holds]
    return SearchResult(spec, tuple(tables), (), stats, exhausted, found=False)


def enumerate_loops(spec: SearchSpec) -> SearchResult:
    """All isomorphism classes of order-n loops satisfying the constraint."""
    if spec.mode != "enumerate":
        spec = replace(spec, mode="enumerate", target=None)
    return _run_search(spec)


def find_first(spec: SearchSpec) -> SearchResult:
    """First (in canonical order) loop satisfying the constraint and target."""
    if spec.mode != "find-first":
        raise ValueError("find_first requires a find-first SearchSpec")
    return _run_search(spec)
