import json

import pytest

from hararytds.conformance import (
    InstanceReport,
    OracleRecord,
    ResultCache,
    Verdict,
    decide_verdict,
    evaluate_instance,
    plan_sweep,
    report_from_dict,
    reports_to_csv,
    reports_to_json,
    sweep,
)
from hararytds.constructions import Claim, ClaimKind, ConstructionResult
from hararytds.domination import BoundsRecord
from hararytds.harary import VertexSet


def oracle(gamma=None, lo=None, hi=None):
    lo = gamma if lo is None else lo
    hi = gamma if hi is None else hi
    return OracleRecord(gamma, lo, hi, (), "BNB", 1, 0.0)


def cons(fid, size, valid, variant=False):
    return ConstructionResult(fid, VertexSet(tuple(range(size))), size, valid, size, False, variant)


BOUNDS = BoundsRecord(3, 4, 4, 10)


@pytest.mark.parametrize(
    "claim, constructions, orc, verdict",
    [
        (Claim(ClaimKind.EXACT, 4, 4), [cons("A", 4, True)], oracle(4), Verdict.CONFIRMS),
        (Claim(ClaimKind.EXACT, 4, 4), [cons("A", 5, True)], oracle(4), Verdict.CONSTRUCTION_INVALID),
        (Claim(ClaimKind.EXACT, 4, 4), [cons("A", 4, False)], oracle(4), Verdict.CONSTRUCTION_INVALID),
        (Claim(ClaimKind.EXACT, 5, 5), [cons("A", 5, True)], oracle(4), Verdict.CLAIM_CONTRADICTED),
        (Claim(ClaimKind.SUSPECT, 2, 2), [cons("T22", 2, False)], oracle(4), Verdict.CLAIM_CONTRADICTED),
        (Claim(ClaimKind.BRACKET, 4, 5), [cons("A", 5, True)], oracle(4), Verdict.WITHIN_BRACKET),
        (Claim(ClaimKind.BRACKET, 4, 5), [cons("A", 5, True)], oracle(6), Verdict.CLAIM_CONTRADICTED),
        (Claim(ClaimKind.BRACKET, 4, 5), [cons("A", 5, True)], oracle(None, 4, 5), Verdict.WITHIN_BRACKET),
        (Claim(ClaimKind.EXACT, 4, 4), [cons("A", 4, True)], oracle(None, 4, 5), Verdict.UNRESOLVED),
        (Claim(ClaimKind.EXACT, 4, 4), [cons("A", 6, True)], oracle(None, 5, 6), Verdict.CLAIM_CONTRADICTED),
        (Claim(ClaimKind.EXACT, 4, 4), [cons("A", 4, True), cons("V", 3, False, True)], oracle(4), Verdict.CONFIRMS),
        (Claim(ClaimKind.NONE), [cons("A", 5, True)], oracle(5), Verdict.NO_CLAIM),
    ],
)
def test_decide_verdict(claim, constructions, orc, verdict):
    got, reasons = decide_verdict(claim, BOUNDS, constructions, orc)
    assert got is verdict
    if verdict in (Verdict.CLAIM_CONTRADICTED, Verdict.CONSTRUCTION_INVALID, Verdict.UNRESOLVED):
        assert reasons


def test_claim_below_lower_bound_is_contradiction():
    v, reasons = decide_verdict(Claim(ClaimKind.SUSPECT, 2, 2), BOUNDS, [], oracle(None, 4, 6))
    assert v is Verdict.CLAIM_CONTRADICTED
    assert "claim_hi=2<lower_bound=4" in reasons


def test_invalid_formula_listed_alongside_contradiction():
    _, reasons = decide_verdict(Claim(ClaimKind.EXACT, 5, 5), BOUNDS, [cons("B", 5, False)], oracle(4))
    assert "invalid:B" in reasons


def test_small_sweep_examples():
    reports = sweep([3], [4, 5, 6], 2, workers=1)
    assert [(r.n, r.verdict, r.oracle.gamma) for r in reports] == [
        (4, Verdict.CONFIRMS, 3),
        (5, Verdict.WITHIN_BRACKET, 3),
        (6, Verdict.CONFIRMS, 4),
    ]


def test_h48_contradicts_printed_even_value():
    rep = evaluate_instance(4, 8)
    assert rep.verdict is Verdict.CLAIM_CONTRADICTED
    assert rep.oracle.gamma == 4
    t22x = next(c for c in rep.constructions if c.formula_id == "T22X")
    assert t22x.validated and t22x.cardinality == 4


def test_cycle_without_claim():
    rep = evaluate_instance(2, 5)
    assert rep.verdict is Verdict.NO_CLAIM
    assert rep.oracle.gamma == 5


def test_k3_reports_carry_no_claim():
    rep = evaluate_instance(4, 9, k=3)
    assert rep.case.claim.kind is ClaimKind.NONE
    assert rep.constructions == ()
    assert rep.verdict is Verdict.NO_CLAIM


def test_plan_sweep_order_and_skips():
    todo, skipped = plan_sweep(range(1, 6), range(4, 7), 2)
    assert todo == sorted(todo, key=lambda dn: (dn[1], dn[0]))
    assert (4, 4) not in todo and (1, 5) not in todo
    assert {(s.d, s.n) for s in skipped} >= {(1, 4), (4, 4), (5, 4), (5, 5)}


def test_json_round_trip():
    reports = sweep(range(2, 8), range(4, 10), 2, workers=1)
    for rep in reports:
        data = json.loads(json.dumps(rep.to_dict()))
        assert report_from_dict(data) == rep
        assert report_from_dict(data).oracle.ms == rep.oracle.ms


def test_output_determinism_without_timing():
    a = sweep(range(2, 6), range(4, 11), 2, workers=1)
    b = sweep(range(2, 6), range(4, 11), 2, workers=1)
    assert reports_to_json(a, 2, timing=False) == reports_to_json(b, 2, timing=False)
    assert reports_to_csv(a, timing=False) == reports_to_csv(b, timing=False)
    text = reports_to_csv(a, timing=False)
    assert "\r" not in text and all(line == line.rstrip() for line in text.split("\n"))


def test_parallel_sweep_matches_serial():
    serial = sweep(range(2, 7), range(4, 12), 2, workers=1)
    parallel = sweep(range(2, 7), range(4, 12), 2, workers=2)
    assert serial == parallel


def test_cache_hits_do_not_change_results(tmp_path):
    path = tmp_path / "cache.jsonl"
    fresh = sweep(range(3, 6), range(4, 10), 2, workers=1, cache=ResultCache(path))
    lines = path.read_text().splitlines()
    assert len(lines) == len(fresh)
    cached = sweep(range(3, 6), range(4, 10), 2, workers=1, cache=ResultCache(path))
    assert cached == fresh
    # append-only: a second run adds nothing
    assert path.read_text().splitlines() == lines


def test_cache_skips_unresolved(tmp_path):
    cache = ResultCache(tmp_path / "c.jsonl")
    rep = evaluate_instance(3, 6)
    unresolved = InstanceReport(**{**rep.__dict__, "verdict": Verdict.UNRESOLVED})
    cache.put(unresolved)
    assert not (tmp_path / "c.jsonl").exists()
