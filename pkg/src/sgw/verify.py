"""Machine-checked reproduction reports for the headline results.

Each verifier returns a Report whose entries carry the expected value,
the computed value, and a pass flag set only after the supporting
certificate (homomorphism, coloring, or exhaustion record) has been
re-validated independently of the solver that produced it.
"""

from __future__ import annotations

import json
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from .constructions import (
    build_grid,
    coloring_target,
    fig1c_grid,
    grid_hom_spal5star,
    kpq_coloring,
    make,
)
from .core import SignedGraph
from .errors import BoundExceededError, GuardExceededError
from .homomorphism import (
    chromatic_number,
    enumerate_targets,
    find_homomorphism,
    signed_isomorphic,
    validate,
)
from .product import cartesian_product
from .switching import CycleClass

CYCLE_TABLE = {
    # (row class, column class) -> chromatic number, per the cycle table
    (CycleClass.BC_EVEN, CycleClass.BC_EVEN): 2,
    (CycleClass.BC_EVEN, CycleClass.BC_ODD): 3,
    (CycleClass.BC_EVEN, CycleClass.UC_EVEN): 4,
    (CycleClass.BC_EVEN, CycleClass.UC_ODD): 3,
    (CycleClass.BC_ODD, CycleClass.BC_EVEN): 3,
    (CycleClass.BC_ODD, CycleClass.BC_ODD): 3,
    (CycleClass.BC_ODD, CycleClass.UC_EVEN): 5,
    (CycleClass.BC_ODD, CycleClass.UC_ODD): 5,
    (CycleClass.UC_EVEN, CycleClass.BC_EVEN): 4,
    (CycleClass.UC_EVEN, CycleClass.BC_ODD): 5,
    (CycleClass.UC_EVEN, CycleClass.UC_EVEN): 4,
    (CycleClass.UC_EVEN, CycleClass.UC_ODD): 5,
    (CycleClass.UC_ODD, CycleClass.BC_EVEN): 3,
    (CycleClass.UC_ODD, CycleClass.BC_ODD): 5,
    (CycleClass.UC_ODD, CycleClass.UC_EVEN): 5,
    (CycleClass.UC_ODD, CycleClass.UC_ODD): 3,
}

_CLASS_LENGTHS = {
    CycleClass.BC_EVEN: (4, 6),
    CycleClass.BC_ODD: (3, 5),
    CycleClass.UC_EVEN: (4, 6),
    CycleClass.UC_ODD: (3, 5),
}


@dataclass(frozen=True)
class ReportEntry:
    claim: str
    parameters: dict
    expected: object
    computed: object
    passed: bool
    elapsed: float


@dataclass
class Report:
    name: str
    entries: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def summary(self) -> dict:
        ok = sum(1 for e in self.entries if e.passed)
        return {"total": len(self.entries), "passed": ok,
                "failed": len(self.entries) - ok}

    def to_dict(self) -> dict:
        return {
            "report": self.name,
            "summary": self.summary(),
            "entries": [
                {
                    "claim": e.claim,
                    "parameters": e.parameters,
                    "expected": e.expected,
                    "computed": e.computed,
                    "pass": e.passed,
                    "elapsed": round(e.elapsed, 3),
                }
                for e in self.entries
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"report: {self.name}"]
        for e in self.entries:
            mark = "PASS" if e.passed else "FAIL"
            params = ", ".join(f"{k}={v}" for k, v in e.parameters.items())
            lines.append(
                f"  [{mark}] {e.claim} ({params}): "
                f"expected {e.expected}, computed {e.computed} "
                f"[{e.elapsed:.2f}s]"
            )
        s = self.summary()
        lines.append(f"  {s['passed']}/{s['total']} passed")
        return "\n".join(lines)


def _worker_count() -> int:
    try:
        return max(1, int(os.environ.get("SGW_THREADS", "1")))
    except ValueError:
        return 1


def _run_entries(tasks: list[Callable[[], ReportEntry]]) -> list:
    workers = _worker_count()
    if workers == 1:
        return [task() for task in tasks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda task: task(), tasks))


def _timed(fn) -> tuple[object, float]:
    start = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - start


def _checked_chi(g: SignedGraph, expected: int) -> tuple[int, bool]:
    """Exact chromatic number with certificate re-validation."""
    cert = chromatic_number(g)
    if not validate(g, cert.target, cert.hom):
        return cert.k, False
    # the lower-bound evidence must cover every smaller order
    exhausted = cert.lower_bound_evidence["exhausted_orders"]
    base = cert.lower_bound_evidence["underlying_chromatic"]
    covered = all(k in exhausted or k < base or k < 1
                  for k in range(1, cert.k))
    return cert.k, covered and cert.k == expected


def verify_cycle_table(max_len: int = 6) -> Report:
    """Chromatic numbers of products of signed cycles versus the table."""
    if max_len > 6:
        raise GuardExceededError("cycle table guarded at lengths <= 6")
    if max_len < 3:
        raise GuardExceededError("cycles need length >= 3")
    report = Report("cycle_table")
    chi_cache: dict = {}

    def cycle(cls: CycleClass, length: int) -> SignedGraph:
        return make("UC" if cls.value.startswith("UC") else "BC", length)

    def entry(ca, la, cb, lb) -> ReportEntry:
        expected = CYCLE_TABLE[(ca, cb)]

        def work():
            key = tuple(sorted([(ca.value, la), (cb.value, lb)]))
            if key not in chi_cache:
                g, _ = cartesian_product(cycle(ca, la), cycle(cb, lb))
                chi_cache[key] = _checked_chi(g, expected)
            return chi_cache[key]

        (computed, ok), elapsed = _timed(work)
        return ReportEntry(
            claim="chi_s of signed cycle product",
            parameters={"left": f"{ca.value}({la})", "right": f"{cb.value}({lb})"},
            expected=expected,
            computed=computed,
            passed=ok,
            elapsed=elapsed,
        )

    tasks = []
    for ca, lens_a in _CLASS_LENGTHS.items():
        for cb, lens_b in _CLASS_LENGTHS.items():
            for la in lens_a:
                if la > max_len:
                    continue
                for lb in lens_b:
                    if lb > max_len:
                        continue
                    tasks.append(lambda a=ca, x=la, b=cb, y=lb: entry(a, x, b, y))
    report.entries = _run_entries(tasks)
    return report


def verify_kpq(max_p: int, max_q: int) -> Report:
    """chi_s(K_p+ box K_q-) = ceil(pq/2): constructive upper bound plus
    exhaustive lower bound."""
    if max_p * max_q > 12:
        raise GuardExceededError("exact lower bounds guarded at pq <= 12")
    report = Report("kpq")

    def entry(p, q) -> ReportEntry:
        expected = math.ceil(p * q / 2)

        def work():
            g, _ = cartesian_product(make("K_plus", p), make("K_minus", q))
            colors, switch = kpq_coloring(p, q)
            target, hom = coloring_target(g, colors, switch)
            upper_ok = validate(g, target, hom) and len(set(colors)) == expected
            computed, lower_ok = _checked_chi(g, expected)
            return computed, upper_ok and lower_ok

        (computed, ok), elapsed = _timed(work)
        return ReportEntry(
            claim="chi_s(K_p+ box K_q-) = ceil(pq/2)",
            parameters={"p": p, "q": q},
            expected=expected,
            computed=computed,
            passed=ok,
            elapsed=elapsed,
        )

    tasks = [
        lambda p=p, q=q: entry(p, q)
        for p in range(2, max_p + 1)
        for q in range(2, max_q + 1)
        if p * q <= 12
    ]
    report.entries = _run_entries(tasks)
    return report


def verify_uc_bc_gap(max_q: int, max_p: int) -> Report:
    """chi_s(UC_q box BC_odd) > 4: no homomorphism to any order-4 target."""
    if max_q * max_p > 30:
        raise GuardExceededError("gap verification guarded at products <= 30 vertices")
    report = Report("uc_bc_gap")

    def entry(q, odd) -> ReportEntry:
        def work():
            g, _ = cartesian_product(make("UC", q), make("BC", odd))
            try:
                cert = chromatic_number(g, hi=4)
            except BoundExceededError as exc:
                return f"no target of order <= 4 (chi_s >= {exc.lo})", exc.lo >= 5
            return cert.k, False

        (computed, ok), elapsed = _timed(work)
        return ReportEntry(
            claim="chi_s(UC_q box BC_odd) > 4",
            parameters={"q": q, "odd": odd},
            expected="> 4",
            computed=computed,
            passed=ok,
            elapsed=elapsed,
        )

    tasks = [
        lambda q=q, odd=odd: entry(q, odd)
        for q in range(3, max_q + 1)
        for odd in range(3, max_p + 1, 2)
        if q * odd <= 30
    ]
    report.entries = _run_entries(tasks)
    return report


def verify_grid_fig1c() -> Report:
    """The 3x4 grid of the counterexample has chromatic number exactly 5."""
    report = Report("grid_fig1c")

    def chi_entry() -> ReportEntry:
        def work():
            return _checked_chi(fig1c_grid(), 5)

        (computed, ok), elapsed = _timed(work)
        return ReportEntry(
            claim="chi_s of the counterexample grid",
            parameters={"rows": 3, "cols": 4},
            expected=5,
            computed=computed,
            passed=ok,
            elapsed=elapsed,
        )

    def positive_entry() -> ReportEntry:
        def work():
            return _checked_chi(build_grid(3, 4), 2)

        (computed, ok), elapsed = _timed(work)
        return ReportEntry(
            claim="chi_s of the all-positive grid",
            parameters={"rows": 3, "cols": 4},
            expected=2,
            computed=computed,
            passed=ok,
            elapsed=elapsed,
        )

    def palette_entry() -> ReportEntry:
        def work():
            g = fig1c_grid()
            hom = grid_hom_spal5star(g, 3, 4)
            return validate(g, make("SPal5_star"), hom)

        valid, elapsed = _timed(work)
        return ReportEntry(
            claim="counterexample grid maps into SPal5*",
            parameters={"rows": 3, "cols": 4},
            expected=True,
            computed=valid,
            passed=valid is True,
            elapsed=elapsed,
        )

    report.entries = _run_entries([chi_entry, positive_entry, palette_entry])
    return report


def verify_k4_classes() -> Report:
    """All 64 signatures of K4 fall into exactly 3 switching classes."""
    report = Report("k4_classes")

    def entry() -> ReportEntry:
        def work():
            pairs = [(u, v) for u in range(4) for v in range(u + 1, 4)]
            reps: list[SignedGraph] = []
            for bits in range(64):
                g = SignedGraph(
                    4,
                    [(u, v, -1 if bits >> i & 1 else 1)
                     for i, (u, v) in enumerate(pairs)],
                )
                if not any(signed_isomorphic(g, r) for r in reps):
                    reps.append(g)
            named = [make("K_plus", 4), make("K_minus", 4), make("K4_mixed")]
            matched = all(
                sum(1 for r in reps if signed_isomorphic(r, h)) == 1 for h in named
            )
            return len(reps), matched

        (count, matched), elapsed = _timed(work)
        return ReportEntry(
            claim="switching classes of K4",
            parameters={"signatures": 64},
            expected=3,
            computed=count,
            passed=count == 3 and matched,
            elapsed=elapsed,
        )

    report.entries = _run_entries([entry])
    return report


def verify_k18(unbounded: bool = False) -> Report:
    """The chi_s(K18 box K2) = 25 claim; far beyond desk scale.

    Without ``unbounded`` this refuses to run.  With it, the data is
    checked and the solver reports the best interval it can prove, which
    stops at the underlying-chromatic lower bound; the entry is honestly
    marked failed because the claim itself stays unverified here.
    """
    if not unbounded:
        raise GuardExceededError(
            "verify_k18 needs order-25 targets; rerun with unbounded=True "
            "to attempt it anyway"
        )
    report = Report("k18")

    def data_entry() -> ReportEntry:
        def work():
            g = make("K18")
            return (g.n, g.m, len(g.negative_edges()))

        computed, elapsed = _timed(work)
        return ReportEntry(
            claim="K18 data integrity",
            parameters={},
            expected=(18, 153, 69),
            computed=computed,
            passed=computed == (18, 153, 69),
            elapsed=elapsed,
        )

    def chi_entry() -> ReportEntry:
        def work():
            g, _ = cartesian_product(make("K18"), make("K_plus", 2))
            try:
                cert = chromatic_number(g)
                return f"chi_s = {cert.k}"
            except BoundExceededError as exc:
                return f"interval [{exc.lo}, unknown]"

        computed, elapsed = _timed(work)
        return ReportEntry(
            claim="chi_s(K18 box K2) = 25",
            parameters={"note": "beyond desk scale; order-25 targets needed"},
            expected=25,
            computed=computed,
            passed=False,
            elapsed=elapsed,
        )

    report.entries = _run_entries([data_entry, chi_entry])
    return report
