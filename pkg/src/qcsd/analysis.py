"""Single-polynomial analysis producing the report used by the CLI."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .data import TABLE_ENTRIES, EntryStatus, TableEntry, is_novel
from .gf2poly import poly_from_string
from .qccode import (
    build_code,
    generator_matrix,
    gram_is_zero,
    rank_gaussian,
    rank_theorem,
    try_systematic,
)
from .search import canonical_form
from .weights import Family, classify_enumerator, weight_distribution

REPORT_KEYS = (
    "poly", "k", "K", "weight_p", "q", "rank", "self_dual", "systematic_f",
    "d", "beta", "gamma", "family", "parity", "novel", "a12", "a14", "a16",
    "distribution", "elapsed_ms",
)


def analyze(poly: str, k: int = 35, workers: int = 1) -> dict:
    """Build, check and fully enumerate the code of one tap polynomial.

    Raises InputError on a bad polynomial and CapacityError when k is too
    large to enumerate.
    """
    start = time.perf_counter()
    p = poly_from_string(poly)
    code = build_code(p, k)
    rank = rank_theorem(code)
    if rank != rank_gaussian(generator_matrix(code)):
        raise RuntimeError(f"rank mismatch for {poly}: row reduction disagrees with gcd rank")
    self_dual = gram_is_zero(code) and rank == k
    f = try_systematic(code)
    dist = weight_distribution(code, workers)
    rep = classify_enumerator(dist)
    novel = is_novel(rep.family, rep.gamma, rep.beta) if self_dual else None
    elapsed = (time.perf_counter() - start) * 1000.0
    return {
        "poly": poly,
        "k": k,
        "K": code.K,
        "weight_p": p.weight(),
        "q": code.q.to_string(code.K),
        "rank": rank,
        "self_dual": self_dual,
        "systematic_f": None if f is None else f.to_string(),
        "d": rep.d,
        "beta": rep.beta,
        "gamma": rep.gamma,
        "family": rep.family.value,
        "parity": rep.parity.value,
        "novel": novel,
        "a12": rep.a12,
        "a14": rep.a14,
        "a16": rep.a16,
        "distribution": list(dist.counts),
        "elapsed_ms": round(elapsed, 3),
    }


@dataclass
class TableCheck:
    entry: TableEntry
    outcome: str  # PASS, FAIL or DATA_SUSPECT
    report: dict | None = None
    problems: tuple[str, ...] = ()


def check_entry(entry: TableEntry, workers: int = 1, force: bool = False) -> TableCheck:
    """Compare one published entry against a fresh analysis."""
    if entry.status is EntryStatus.DATA_SUSPECT:
        report = analyze(entry.poly, 35, workers) if force else None
        return TableCheck(entry, EntryStatus.DATA_SUSPECT.value, report)
    report = analyze(entry.poly, 35, workers)
    expected = {
        "self_dual": True,
        "d": 12,
        "beta": entry.beta,
        "gamma": 0,
        "family": Family.W70_1.value,
    }
    problems = tuple(
        f"{key}: expected {want}, computed {report[key]}"
        for key, want in expected.items()
        if report[key] != want
    )
    return TableCheck(entry, "FAIL" if problems else "PASS", report, problems)


def table_entries(K_filter: set[int] | None = None) -> list[TableEntry]:
    return [e for e in TABLE_ENTRIES if K_filter is None or e.K in K_filter]


def table_canonical_forms() -> set[str]:
    """Canonical strings of every length-consistent published polynomial."""
    out = set()
    for e in TABLE_ENTRIES:
        if e.valid:
            out.add(canonical_form(poly_from_string(e.poly), e.K).to_string(e.K))
    return out
