"""Sweep harness: compare closed-form claims and constructions with the exact oracle."""

from __future__ import annotations

import csv
import dataclasses
import enum
import io
import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable

from .constructions import CaseDescriptor, Claim, ClaimKind, ConstructionResult, classify, construct_2tds
from .domination import BoundsRecord, is_ktds, lower_bounds
from .errors import ParameterError
from .harary import HararyParams, ParityClass, VertexSet, build_harary
from .solver import Method, solve_exact

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
WORKERS_ENV = "HARARYTDS_WORKERS"

__all__ = [
    "Verdict",
    "OracleRecord",
    "InstanceReport",
    "SkipRecord",
    "SCHEMA_VERSION",
    "decide_verdict",
    "evaluate_instance",
    "plan_sweep",
    "sweep",
    "ResultCache",
    "reports_to_json",
    "reports_to_csv",
    "report_from_dict",
    "CSV_COLUMNS",
]


class Verdict(str, enum.Enum):
    CONFIRMS = "CONFIRMS"
    WITHIN_BRACKET = "WITHIN_BRACKET"
    CONSTRUCTION_INVALID = "CONSTRUCTION_INVALID"
    CLAIM_CONTRADICTED = "CLAIM_CONTRADICTED"
    UNRESOLVED = "UNRESOLVED"
    NO_CLAIM = "NO_CLAIM"


@dataclass(frozen=True)
class OracleRecord:
    gamma: int | None
    lo: int
    hi: int
    witness: tuple[int, ...]  # 1-based labels
    method: str
    nodes: int
    ms: float | None = field(default=None, compare=False)


@dataclass(frozen=True)
class InstanceReport:
    d: int
    n: int
    k: int
    case: CaseDescriptor
    bounds: BoundsRecord
    constructions: tuple[ConstructionResult, ...]
    oracle: OracleRecord
    verdict: Verdict
    reasons: tuple[str, ...] = ()

    def best_valid_size(self) -> int | None:
        sizes = [c.cardinality for c in self.constructions if c.validated]
        return min(sizes) if sizes else None

    def to_dict(self, timing: bool = True) -> dict[str, Any]:
        c = self.case
        return {
            "params": {"d": self.d, "n": self.n, "k": self.k},
            "case": {
                "l": c.l,
                "r": c.r,
                "lp": c.lp,
                "rp": c.rp,
                "m": c.m,
                "parity": c.parity_class.value,
                "claim": {"kind": c.claim.kind.value, "lo": c.claim.lo, "hi": c.claim.hi, "reason": c.claim.reason},
                "alt": c.candidate_alt,
            },
            "bounds": {
                "trivial": self.bounds.lb_trivial,
                "degree": self.bounds.lb_degree,
                "degree_sum": self.bounds.lb_degree_sum,
                "upper": self.bounds.ub_trivial,
            },
            "constructions": [
                {
                    "id": r.formula_id,
                    "labels": r.set.labels(),
                    "size": r.cardinality,
                    "expected": r.expected_size,
                    "validated": r.validated,
                    "collapsed": r.collapsed,
                    "variant": r.variant,
                }
                for r in self.constructions
            ],
            "oracle": {
                "gamma": self.oracle.gamma,
                "lo": self.oracle.lo,
                "hi": self.oracle.hi,
                "witness": list(self.oracle.witness),
                "method": self.oracle.method,
                "nodes": self.oracle.nodes,
                "ms": self.oracle.ms if timing else None,
            },
            "verdict": self.verdict.value,
            "reasons": list(self.reasons),
        }


def report_from_dict(data: dict[str, Any]) -> InstanceReport:
    p, c, b, o = data["params"], data["case"], data["bounds"], data["oracle"]
    claim = Claim(ClaimKind(c["claim"]["kind"]), c["claim"]["lo"], c["claim"]["hi"], c["claim"]["reason"])
    case = CaseDescriptor(p["d"], p["n"], c["l"], c["r"], c["lp"], c["rp"], c["m"], ParityClass(c["parity"]), claim, c["alt"])
    cons = tuple(
        ConstructionResult(
            formula_id=r["id"],
            set=VertexSet.from_labels(r["labels"], p["n"]),
            cardinality=r["size"],
            validated=r["validated"],
            expected_size=r["expected"],
            collapsed=r["collapsed"],
            variant=r["variant"],
        )
        for r in data["constructions"]
    )
    return InstanceReport(
        d=p["d"],
        n=p["n"],
        k=p["k"],
        case=case,
        bounds=BoundsRecord(b["trivial"], b["degree"], b["degree_sum"], b["upper"]),
        constructions=cons,
        oracle=OracleRecord(o["gamma"], o["lo"], o["hi"], tuple(o["witness"]), o["method"], o["nodes"], o["ms"]),
        verdict=Verdict(data["verdict"]),
        reasons=tuple(data["reasons"]),
    )


@dataclass(frozen=True)
class SkipRecord:
    d: int
    n: int
    reason: str


def decide_verdict(
    claim: Claim,
    bounds: BoundsRecord,
    constructions: Iterable[ConstructionResult],
    oracle: OracleRecord,
) -> tuple[Verdict, tuple[str, ...]]:
    """Verdict plus the facts that justify it.

    Precedence: CLAIM_CONTRADICTED (also provable from a timed-out interval),
    UNRESOLVED, CONSTRUCTION_INVALID, then CONFIRMS / WITHIN_BRACKET. Invalid non-variant formulas are always listed
    in the reasons, whatever the verdict.
    """
    constructions = list(constructions)
    invalid = [f"invalid:{c.formula_id}" for c in constructions if not c.validated and not c.variant]

    if claim.kind is ClaimKind.NONE:
        return Verdict.NO_CLAIM, tuple(invalid)

    contradictions = []
    if claim.hi < bounds.best:
        contradictions.append(f"claim_hi={claim.hi}<lower_bound={bounds.best}")
    if oracle.gamma is not None:
        if not claim.lo <= oracle.gamma <= claim.hi:
            contradictions.append(f"gamma={oracle.gamma}_outside_[{claim.lo},{claim.hi}]")
    elif claim.hi < oracle.lo or claim.lo > oracle.hi:
        contradictions.append(f"oracle=[{oracle.lo},{oracle.hi}]_disjoint_[{claim.lo},{claim.hi}]")
    if contradictions:
        return Verdict.CLAIM_CONTRADICTED, tuple(contradictions + invalid)

    if oracle.gamma is None:
        decided = claim.kind is ClaimKind.BRACKET and claim.lo <= oracle.lo and oracle.hi <= claim.hi
        if not decided:
            return Verdict.UNRESOLVED, (f"oracle=[{oracle.lo},{oracle.hi}]", *invalid)
    if invalid:
        return Verdict.CONSTRUCTION_INVALID, tuple(invalid)
    if claim.kind is ClaimKind.BRACKET:
        return Verdict.WITHIN_BRACKET, ()
    if not any(c.validated and c.cardinality == oracle.gamma for c in constructions):
        return Verdict.CONSTRUCTION_INVALID, (f"no_valid_construction_of_size={oracle.gamma}",)
    return Verdict.CONFIRMS, ()


def evaluate_instance(
    d: int,
    n: int,
    k: int = 2,
    budget: float | None = None,
    method: Method | str = Method.BNB,
    backend: str | None = None,
) -> InstanceReport:
    p = HararyParams(d, n)
    g = build_harary(p)
    bounds = lower_bounds(g, k)
    if k == 2:
        case = classify(p, 2)
        cons = tuple(construct_2tds(p, g))
    else:
        case = dataclasses.replace(classify(p, 2), claim=Claim(ClaimKind.NONE, reason=f"no closed form for k={k}"), candidate_alt=None)
        cons = ()
    res = solve_exact(g, k, method, budget, backend)
    oracle = OracleRecord(
        gamma=res.gamma,
        lo=res.lo,
        hi=res.hi,
        witness=tuple(res.witness.labels()),
        method=res.method.value,
        nodes=res.nodes,
        ms=round(res.elapsed * 1000, 3),
    )
    assert is_ktds(g, res.witness, k)
    verdict, reasons = decide_verdict(case.claim, bounds, cons, oracle)
    return InstanceReport(d, n, k, case, bounds, cons, oracle, verdict, reasons)


def plan_sweep(d_range: Iterable[int], n_range: Iterable[int], k: int) -> tuple[list[tuple[int, int]], list[SkipRecord]]:
    """Valid ``(d, n)`` pairs in ``(n, d)`` order, plus skip records for the rest."""
    if k < 2:
        raise ParameterError(f"sweep needs k >= 2, got {k}")
    todo, skipped = [], []
    for n in sorted(set(n_range)):
        for d in sorted(set(d_range)):
            if d < 2:
                skipped.append(SkipRecord(d, n, "d<2"))
            elif d >= n:
                skipped.append(SkipRecord(d, n, "d>=n"))
            elif d < k:
                skipped.append(SkipRecord(d, n, f"min_degree<{k}"))
            else:
                todo.append((d, n))
    return todo, skipped


class ResultCache:
    """Append-only JSON-lines store of finished reports.

    Keyed by ``(d, n, k, schema version, method)``. Unresolved reports are not
    stored, so a later run with a larger budget recomputes them.
    """

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        self._entries: dict[tuple, dict] = {}
        if self.path.exists():
            for line in self.path.read_text(encoding="utf-8").splitlines():
                if line.strip():
                    rec = json.loads(line)
                    self._entries[tuple(rec["key"])] = rec["report"]

    @staticmethod
    def key(d: int, n: int, k: int, method: str) -> tuple:
        return (d, n, k, SCHEMA_VERSION, method)

    def get(self, d: int, n: int, k: int, method: str) -> InstanceReport | None:
        rec = self._entries.get(self.key(d, n, k, method))
        return report_from_dict(rec) if rec is not None else None

    def put(self, report: InstanceReport) -> None:
        if report.verdict is Verdict.UNRESOLVED:
            return
        key = self.key(report.d, report.n, report.k, report.oracle.method)
        if key in self._entries:
            return
        data = report.to_dict()
        self._entries[key] = data
        with self.path.open("a", encoding="utf-8", newline="\n") as fh:
            fh.write(json.dumps({"key": list(key), "report": data}, ensure_ascii=False) + "\n")


def _worker_count() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        return max(1, int(raw))
    return os.cpu_count() or 1


def _evaluate_args(args: tuple) -> InstanceReport:
    return evaluate_instance(*args)


def sweep(
    d_range: Iterable[int],
    n_range: Iterable[int],
    k: int = 2,
    budget: float | None = None,
    method: Method | str = Method.BNB,
    workers: int | None = None,
    cache: ResultCache | None = None,
) -> list[InstanceReport]:
    method = Method(method.upper() if isinstance(method, str) else method)
    todo, skipped = plan_sweep(d_range, n_range, k)
    for s in skipped:
        log.debug("skip d=%d n=%d: %s", s.d, s.n, s.reason)

    done: dict[tuple[int, int], InstanceReport] = {}
    pending = []
    for d, n in todo:
        hit = cache.get(d, n, k, method.value) if cache is not None else None
        if hit is not None:
            done[(d, n)] = hit
        else:
            pending.append((d, n, k, budget, method))

    workers = workers or _worker_count()
    if workers > 1 and len(pending) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            fresh = list(pool.map(_evaluate_args, pending))
    else:
        fresh = [_evaluate_args(a) for a in pending]
    for rep in fresh:
        done[(rep.d, rep.n)] = rep
        if cache is not None:
            cache.put(rep)
    return [done[dn] for dn in todo]


CSV_COLUMNS = [
    "d", "n", "k",
    "l", "r", "lp", "rp", "m", "claim_kind", "claim_lo", "claim_hi",
    "bound_trivial", "bound_degree", "bound_degree_sum",
    "best_valid_size",
    "gamma", "oracle_lo", "oracle_hi", "method", "nodes", "ms",
    "verdict", "reasons",
]


def _blank(x: Any) -> Any:
    return "" if x is None else x


def reports_to_csv(reports: Iterable[InstanceReport], timing: bool = True) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for rep in reports:
        c, b, o = rep.case, rep.bounds, rep.oracle
        w.writerow([_blank(x) for x in (
            rep.d, rep.n, rep.k,
            c.l, c.r, c.lp, c.rp, c.m, c.claim.kind.value, c.claim.lo, c.claim.hi,
            b.lb_trivial, b.lb_degree, b.lb_degree_sum,
            rep.best_valid_size(),
            o.gamma, o.lo, o.hi, o.method, o.nodes, o.ms if timing else None,
            rep.verdict.value, ";".join(rep.reasons),
        )])
    return buf.getvalue()


def reports_to_json(
    reports: Iterable[InstanceReport],
    k: int,
    skipped: Iterable[SkipRecord] = (),
    timing: bool = True,
) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "k": k,
        "reports": [r.to_dict(timing) for r in reports],
        "skipped": [dataclasses.asdict(s) for s in skipped],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
