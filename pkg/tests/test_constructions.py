import pytest
from hypothesis import given, strategies as st

from hararytds.constructions import ClaimKind, classify, construct_2tds, translate_set
from hararytds.domination import is_ktds
from hararytds.errors import ParameterError
from hararytds.harary import HararyParams, ParityClass, VertexSet, build_harary

from conftest import naive_harary_edges, naive_is_ktds, naive_neighbourhoods

ALL_PARAMS = [HararyParams(d, n) for n in range(3, 31) for d in range(2, n)]


def by_id(p):
    return {r.formula_id: r for r in construct_2tds(p)}


# ---- classify -------------------------------------------------------------

def test_classify_h36():
    c = classify(HararyParams(3, 6))
    assert (c.l, c.r, c.m) == (2, 0, 1)
    assert (c.claim.kind, c.claim.lo) == (ClaimKind.EXACT, 4)


def test_classify_k4():
    c = classify(HararyParams(3, 4))
    assert (c.l, c.r) == (1, 1)
    assert (c.claim.kind, c.claim.lo, c.claim.hi) == (ClaimKind.EXACT, 3, 3)


def test_classify_h35():
    c = classify(HararyParams(3, 5))
    assert (c.l, c.r, c.lp, c.rp) == (1, 2, 1, 1)
    assert (c.claim.kind, c.claim.lo, c.claim.hi) == (ClaimKind.BRACKET, 3, 4)


def test_classify_even_degree_is_suspect():
    c = classify(HararyParams(4, 8))
    assert (c.claim.kind, c.claim.lo) == (ClaimKind.SUSPECT, 2)
    assert c.candidate_alt == 4
    assert classify(HararyParams(4, 9)).claim.kind is ClaimKind.NONE


def test_classify_rejects_other_k():
    with pytest.raises(ParameterError):
        classify(HararyParams(3, 6), k=3)


@pytest.mark.parametrize("p", ALL_PARAMS, ids=lambda p: f"H{p.d},{p.n}")
def test_classify_identities(p):
    c = classify(p)
    assert c == classify(p)
    assert p.n == p.d * c.l + c.r and 0 <= c.r < p.d
    assert c.l + c.r == 2 * c.m * c.lp + c.rp and 0 <= c.rp < 2 * c.m
    if c.parity_class is ParityClass.ODD_D_EVEN_N:
        assert c.r % 2 == c.l % 2
    elif c.parity_class is ParityClass.ODD_D_ODD_N:
        assert (c.l % 2 == 1) == (c.r % 2 == 0)


# ---- formula evaluation ----------------------------------------------------

@pytest.mark.parametrize(
    "d, n, fid, labels, valid",
    [
        (3, 6, "T23_R0", [1, 2, 4, 5], True),
        (3, 4, "T23_K4", [1, 2, 3], True),
        (7, 8, "T23_LP0", [1, 4, 6], True),
        (3, 8, "T23_EVEN", [1, 2, 4, 5, 6, 8], True),
        (3, 10, "T23_ODD", [1, 2, 3, 4, 5, 6, 7, 9], False),
        (3, 10, "T23_ODD_ALT", [1, 2, 4, 5, 6, 7, 9, 10], True),
        (3, 5, "T24_EVEN", [1, 2, 4, 5], True),
        (3, 9, "T24_R0", [1, 2, 4, 5, 6, 8, 9], True),
        (3, 7, "T24_R1", [1, 2, 4, 5, 7], True),
        (7, 9, "T24_LP0", [1, 4, 7], True),
        (5, 13, "T24_ODD", [1, 3, 6, 7, 9, 12], True),
        (4, 8, "T22", [1, 3], False),
        (4, 8, "T22X", [1, 3, 5, 7], True),
    ],
)
def test_formula_values(d, n, fid, labels, valid):
    res = by_id(HararyParams(d, n))[fid]
    assert res.set.labels() == labels
    assert res.validated is valid
    nbrs = naive_neighbourhoods(n, naive_harary_edges(d, n))
    assert naive_is_ktds(nbrs, set(res.set), 2) is valid


def test_t23_lp0_boundary_is_attempted():
    # H(13, 18): l=1, r=5, lp=0, rp=6=m -> both readings are produced
    ids = by_id(HararyParams(13, 18))
    assert {"T23_LP0_BOUNDARY", "T23_ODD", "T23_ODD_ALT"} <= set(ids)
    assert ids["T23_LP0_BOUNDARY"].validated and ids["T23_LP0_BOUNDARY"].cardinality == 3


def test_collapse_is_recorded():
    res = by_id(HararyParams(7, 10))["T23_ODD"]
    assert res.collapsed
    assert res.cardinality < res.expected_size


@pytest.mark.parametrize("p", ALL_PARAMS, ids=lambda p: f"H{p.d},{p.n}")
def test_results_are_self_consistent(p):
    nbrs = naive_neighbourhoods(p.n, naive_harary_edges(p.d, p.n))
    results = construct_2tds(p)
    assert results, "every Harary instance has at least one applicable formula"
    for r in results:
        assert r.cardinality == len(r.set)
        assert r.validated == naive_is_ktds(nbrs, set(r.set), 2)
        if r.collapsed:
            assert r.cardinality < r.expected_size
        else:
            assert r.cardinality == r.expected_size


@pytest.mark.parametrize("p", [p for p in ALL_PARAMS if p.d % 2 == 0], ids=lambda p: f"H{p.d},{p.n}")
def test_t22x_always_valid(p):
    assert by_id(p)["T22X"].validated


@pytest.mark.parametrize("p", [p for p in ALL_PARAMS if p.parity_class is ParityClass.ODD_D_EVEN_N], ids=lambda p: f"H{p.d},{p.n}")
def test_odd_even_has_valid_construction_within_claim(p):
    claim = classify(p).claim
    sizes = [r.cardinality for r in construct_2tds(p) if r.validated]
    assert sizes and min(sizes) <= claim.hi


# ---- translation -----------------------------------------------------------

def test_translate_examples():
    g = build_harary(HararyParams(3, 6))
    s = VertexSet((0, 1, 3, 4))
    assert translate_set(g, s, 0) == s
    assert translate_set(g, s, 6) == s
    shifted = translate_set(g, s, 2)
    assert shifted.positions == (0, 2, 3, 5)
    assert is_ktds(g, shifted, 2)


@given(st.integers(4, 14).flatmap(lambda n: st.tuples(st.just(n), st.integers(2, n - 1))), st.integers(-30, 30), st.randoms())
def test_translation_preserves_ktds_on_rotation_invariant_graphs(nd, t, rnd):
    n, d = nd
    p = HararyParams(d, n)
    if p.parity_class is ParityClass.ODD_D_ODD_N:
        return
    g = build_harary(p)
    s = VertexSet.of(v for v in range(n) if rnd.random() < 0.6)
    shifted = translate_set(g, s, t)
    assert len(shifted) == len(s)
    for k in (1, 2):
        assert is_ktds(g, s, k) == is_ktds(g, shifted, k)


def test_translation_on_odd_odd_can_break():
    # The single degree-(d+1) vertex breaks rotation symmetry.
    g = build_harary(HararyParams(3, 5))
    s = VertexSet((0, 1, 2))
    assert is_ktds(g, s, 2)
    assert not is_ktds(g, translate_set(g, s, 3), 2)
