"""Seeded fuzz campaigns cross-checking the classifier against brute force.

Every instance is derived from ``mix64(master_seed, index)`` alone, so a
campaign is reproducible instance by instance. Reports are plain dicts,
serialized one per line with sorted keys; a summary closes the stream.
"""
from __future__ import annotations

import json
import random
import time
from collections import Counter
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .classifier import cross_validate, cycle_psi_prefilter
from .errors import GraphError, InvariantViolation
from .generators import GeneratorSpec, generate_random_unicycle, mix64
from .graph import components, size_limits
from .greedoid import chain_for_forest, chain_via_triangle
from .matching import all_max_matchings_ur, matching_to_json
from .stability import enumerate_psi

CYCLE_MODES = ("three", "even", "odd", "forest", "any")
MAX_CYCLE = 8


@dataclass(frozen=True)
class Campaign:
    count: int
    max_n: int
    cycle: str = "any"
    seed: int = 0
    disconnected: bool = False
    timing: bool = False

    def __post_init__(self):
        if self.cycle not in CYCLE_MODES:
            raise GraphError(f"cycle mode must be one of {', '.join(CYCLE_MODES)}")
        if self.count < 0:
            raise GraphError("count must be non-negative")
        if not self.cycle_choices() and self.cycle != "forest":
            raise GraphError(f"max_n={self.max_n} admits no {self.cycle} cycle")
        if self.max_n < 1:
            raise GraphError("max_n must be positive")

    def cycle_choices(self) -> list[int]:
        top = min(self.max_n, MAX_CYCLE)
        ks = range(3, top + 1)
        if self.cycle == "three":
            return [3] if top >= 3 else []
        if self.cycle == "even":
            return [k for k in ks if k % 2 == 0]
        if self.cycle == "odd":
            return [k for k in ks if k % 2 == 1 and k > 3]
        if self.cycle == "forest":
            return []
        return list(ks)

    def spec(self, index: int) -> GeneratorSpec:
        seed = mix64(self.seed, index)
        rng = random.Random(seed)
        if self.cycle == "forest":
            k = None
            n = rng.randint(1, self.max_n)
        else:
            k = rng.choice(self.cycle_choices())
            n = rng.randint(k, self.max_n)
        return GeneratorSpec(n, k, "any", seed, not self.disconnected)


def _extra_checks(g, branch: str, psi) -> dict:
    """Branch-specific theorem checks; raises InvariantViolation on failure."""
    out: dict = {}
    if branch == "forest":
        for s in psi:
            chain_for_forest(g, s)
        out["forest_chains"] = len(psi)
    elif branch == "k3":
        for s in psi:
            chain_via_triangle(g, s)
        out["triangle_chains"] = len(psi)
    elif branch == "odd_cycle":
        ok, bad = all_max_matchings_ur(g)
        if not ok:
            raise InvariantViolation(f"odd unicycle graph with non-UR matching {matching_to_json(bad)}")
        out["all_max_matchings_ur"] = True
    elif branch == "even_cycle":
        out["all_max_matchings_ur"] = all_max_matchings_ur(g)[0]
    return out


def run_instance(campaign: Campaign, index: int) -> dict:
    spec = campaign.spec(index)
    g = generate_random_unicycle(spec)
    report: dict = {
        "index": index,
        "seed": spec.seed,
        "n": g.order,
        "k": spec.cycle_length,
        "connected": len(components(g)) <= 1,
        "edges": [list(e) for e in g.edges],
    }
    start = time.perf_counter()
    try:
        agreement = cross_validate(g)
        report.update(agreement.to_json())
        pre_ok, pre_w = cycle_psi_prefilter(g)
        report["prefilter"] = {"result": pre_ok, "witness": pre_w.to_json() if pre_w else None}
        if not pre_ok and agreement.oracle.is_greedoid:
            raise InvariantViolation("prefilter fired on a greedoid")
        if agreement.agree:
            report["checks"] = _extra_checks(g, agreement.classifier.branch, enumerate_psi(g))
        report["error"] = None
    except InvariantViolation as exc:
        report.setdefault("agree", False)
        report["error"] = str(exc)
    if campaign.timing:
        report["seconds"] = round(time.perf_counter() - start, 6)
    return report


def _run_chunk(args: tuple[Campaign, list[int], tuple[int, int] | None]) -> list[dict]:
    campaign, indices, limits = args
    if limits is None:
        return [run_instance(campaign, i) for i in indices]
    with size_limits(*limits):
        return [run_instance(campaign, i) for i in indices]


def iter_reports(campaign: Campaign, jobs: int = 1, limits: tuple[int, int] | None = None) -> Iterator[dict]:
    """Reports in index order; ``jobs > 1`` fans out to worker processes."""
    if jobs <= 1:
        yield from _run_chunk((campaign, list(range(campaign.count)), limits))
        return
    chunk = 16
    work = [
        (campaign, list(range(lo, min(lo + chunk, campaign.count))), limits)
        for lo in range(0, campaign.count, chunk)
    ]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for reports in pool.map(_run_chunk, work):
            yield from reports


def summarize(campaign: Campaign, reports: list[dict]) -> dict:
    branches = Counter(r.get("classifier", {}).get("branch", "error") for r in reports)
    disagreements = [r["index"] for r in reports if r["error"] is None and not r["agree"]]
    violations = [r["index"] for r in reports if r["error"] is not None]
    return {
        "summary": True,
        "campaign": {
            "count": campaign.count,
            "max_n": campaign.max_n,
            "cycle": campaign.cycle,
            "seed": campaign.seed,
            "disconnected": campaign.disconnected,
        },
        "instances": len(reports),
        "agreements": sum(1 for r in reports if r["agree"] and r["error"] is None),
        "disagreements": disagreements,
        "invariant_violations": violations,
        "greedoid_true": sum(1 for r in reports if r.get("oracle", {}).get("is_greedoid")),
        "prefilter_fired": sum(1 for r in reports if r.get("prefilter", {}).get("result") is False),
        "disconnected_instances": sum(1 for r in reports if not r["connected"]),
        "branches": dict(sorted(branches.items())),
        "ok": not disagreements and not violations,
    }


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


@dataclass
class FuzzResult:
    reports: list[dict]
    summary: dict

    @property
    def ok(self) -> bool:
        return self.summary["ok"]

    def jsonl(self) -> str:
        return "".join(dumps(r) + "\n" for r in [*self.reports, self.summary])


def run_fuzz(
    count: int,
    max_n: int,
    cycle: str = "any",
    seed: int = 0,
    disconnected: bool = False,
    *,
    timing: bool = False,
    jobs: int = 1,
) -> FuzzResult:
    campaign = Campaign(count, max_n, cycle, seed, disconnected, timing)
    reports = list(iter_reports(campaign, jobs))
    return FuzzResult(reports, summarize(campaign, reports))
