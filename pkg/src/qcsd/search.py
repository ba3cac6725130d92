"""Exhaustive search over tap polynomials for self-dual [2k, k, d] codes."""

from __future__ import annotations

import enum
import itertools
import logging
from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import gf2poly as gp
from .errors import InputError
from .gf2poly import Gf2Poly
from .qccode import build_code, is_self_dual
from .weights import (
    CodeReport,
    classify_enumerator,
    information_set_screen,
    prescreen_min_weight,
    weight_distribution,
)

log = logging.getLogger(__name__)


class DivisorMode(str, enum.Enum):
    REQUIRE_NONTRIVIAL = "nontrivial"
    ANY = "any"


@dataclass(frozen=True)
class SearchConfig:
    k: int = 35
    K_min: int = 11
    K_max: int = 16
    weights: tuple[int, ...] = (7, 9)
    divisor_mode: DivisorMode = DivisorMode.REQUIRE_NONTRIVIAL
    target_d: int = 12
    prescreen_info_weight: int = 4
    isd_iterations: int = 300
    seed: int = 0
    workers: int = 1

    def __post_init__(self) -> None:
        if not 2 <= self.K_min <= self.K_max <= self.k:
            raise InputError(f"need 2 <= K_min <= K_max <= k, got {self.K_min}, {self.K_max}, {self.k}")
        if not self.weights:
            raise InputError("at least one polynomial weight is required")
        bad = [w for w in self.weights if not 1 <= w <= self.K_max]
        if bad:
            raise InputError(f"weights {bad} outside 1..{self.K_max}")
        if not 1 <= self.prescreen_info_weight <= 5:
            raise InputError("prescreen_info_weight must be in 1..5")
        if self.isd_iterations < 0:
            raise InputError("isd_iterations must be >= 0")
        if self.workers < 1:
            raise InputError("workers must be >= 1")
        object.__setattr__(self, "weights", tuple(sorted(set(self.weights))))
        object.__setattr__(self, "divisor_mode", DivisorMode(self.divisor_mode))


@dataclass
class SearchHit:
    poly: str
    K: int
    weight: int
    report: CodeReport
    found_as: list[str] = field(default_factory=list)


def enumerate_candidates(cfg: SearchConfig) -> Iterator[Gf2Poly]:
    """K-term patterns with both end bits set and the requested weight.

    Interior bits are produced in lexicographic order of their text form.
    """
    for K in range(cfg.K_min, cfg.K_max + 1):
        for w in cfg.weights:
            if w < 2 or w > K:
                continue
            for ones in itertools.combinations(range(1, K - 1), w - 2):
                bits = 1 | (1 << (K - 1))
                for i in ones:
                    bits |= 1 << i
                yield Gf2Poly(bits)


def divisor_filter(p: Gf2Poly, k: int, mode: DivisorMode = DivisorMode.REQUIRE_NONTRIVIAL) -> bool:
    """Check the gcds of p and its reversal against x^k + 1.

    Coprime gcds force gcd(p, q, x^k + 1) = 1, i.e. full rank. The default
    mode additionally requires each gcd to be a proper divisor, so neither
    p nor q is invertible modulo x^k + 1.
    """
    modulus = gp.x_pow_k_minus_1(k)
    K = p.degree + 1
    g1 = gp.gcd(p, modulus)
    g2 = gp.gcd(gp.reverse_window(p, K), modulus)
    if not gp.gcd(g1, g2).is_one():
        return False
    if DivisorMode(mode) is DivisorMode.REQUIRE_NONTRIVIAL:
        return not g1.is_one() and not g2.is_one()
    return True


def canonical_form(p: Gf2Poly, K: int) -> Gf2Poly:
    """The lexicographically smaller text of p and its K-window reversal."""
    a = p.to_string(K)
    b = gp.reverse_window(p, K).to_string(K)
    return gp.poly_from_string(min(a, b))


def _screen(p: Gf2Poly, cfg: SearchConfig) -> bool:
    if not divisor_filter(p, cfg.k, cfg.divisor_mode):
        return False
    code = build_code(p, cfg.k)
    if prescreen_min_weight(code, cfg.prescreen_info_weight, cfg.target_d) is not None:
        return False
    if cfg.isd_iterations:
        found = information_set_screen(code, cfg.target_d, cfg.isd_iterations, cfg.seed)
        return found is None
    return True


def run_search(cfg: SearchConfig, progress=None) -> list[SearchHit]:
    """Filter and screen candidates, then fully enumerate each survivor.

    Screens only discard a candidate after exhibiting a codeword lighter
    than ``cfg.target_d``; every reported number comes from the exact
    enumeration.

    ``progress`` (optional) is called with a message string per survivor.
    """
    candidates = list(enumerate_candidates(cfg))
    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            keep = list(pool.map(lambda p: _screen(p, cfg), candidates))
    else:
        keep = [_screen(p, cfg) for p in candidates]
    survivors = [p for p, ok in zip(candidates, keep) if ok]
    log.info("%d candidates, %d survive prescreen", len(candidates), len(survivors))

    hits: dict[str, SearchHit] = {}
    seen: set[str] = set()
    for idx, p in enumerate(survivors):
        K = p.degree + 1
        canon = canonical_form(p, K).to_string(K)
        if canon in seen:
            if canon in hits:
                hits[canon].found_as.append(p.to_string(K))
            continue
        seen.add(canon)
        code = build_code(p, cfg.k)
        if not is_self_dual(code):
            continue
        dist = weight_distribution(code, cfg.workers)
        report = classify_enumerator(dist)
        report.extra["distribution"] = list(dist.counts)
        if progress is not None:
            progress(f"[{idx + 1}/{len(survivors)}] {p.to_string(K)} d={report.d} beta={report.beta}")
        if report.d is None or report.d < cfg.target_d:
            continue
        hits[canon] = SearchHit(poly=canon, K=K, weight=p.weight(), report=report, found_as=[p.to_string(K)])
    return sorted(hits.values(), key=lambda h: (h.K, h.weight, h.poly))
