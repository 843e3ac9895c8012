import math

import pytest
from hypothesis import given

from weaves.core import CrossingMatrix, Kind, Warp, Weft, transpose_dual
from weaves.hyperbolicity import (
    V_OCT,
    PieceKind,
    Verdict,
    find_parallel_arc,
    hyperbolic_flag,
    is_hyperbolic,
    is_layered,
    is_pi_hyperbolic,
    jsj_report,
    layer_digraph,
    no_adjacent_comparable,
    parallel_pair_oracle,
    parallel_pair_reachable,
    strongly_connected_components,
    volume_upper_bound,
)
from weaves.isotopy import orbit
from weaves.oracles import hyperbolic_oracle, layered_by_partition, parallel_reachable_by_bfs

from helpers import M, all_matrices, matrices, small_shapes


def grid(A):
    return tuple(tuple(r) for r in A.to_lists())


# -- layer digraph ------------------------------------------------------------

def test_layer_digraph_examples():
    g = layer_digraph(M("1"))
    assert g.edges == ((Weft(1), Warp(1)),)
    g = layer_digraph(M("01", "10"))
    assert len(g.edges) == 4
    assert len(strongly_connected_components(g.vertices, g.successors())) == 1
    g = layer_digraph(M("11", "11"))
    assert all(src.kind is Kind.WEFT for src, _ in g.edges)
    assert len(strongly_connected_components(g.vertices, g.successors())) == 4


def test_is_layered_examples():
    for key in range(8):
        assert is_layered(CrossingMatrix.from_key(3, 1, key)).layered
    assert not is_layered(M("01", "10")).layered
    lv = is_layered(M("11", "11"))
    assert lv.layered and lv.check(M("11", "11"))
    # bottom layer first: both wefts lie below both warps
    assert {c.kind for c in lv.layers[0]} == {Kind.WEFT}
    assert {c.kind for c in lv.layers[-1]} == {Kind.WARP}


def test_single_component_is_not_layered():
    assert not is_layered(CrossingMatrix.from_lists([[]])).layered
    with pytest.raises(ValueError):
        is_layered(CrossingMatrix.from_lists([], n=0))


@pytest.mark.parametrize("m, n", [(m, n) for m in range(1, 6) for n in range(1, 6) if m + n <= 7])
def test_scc_layering_matches_partition_oracle(m, n):
    for A in all_matrices(m, n):
        lv = is_layered(A)
        assert lv.layered == (layered_by_partition(grid(A), m, n) is not None)
        if lv.layered:
            assert lv.check(A)


# -- parallel pairs -----------------------------------------------------------

def test_two_equal_warps_are_parallel():
    w = parallel_pair_reachable(M("10", "10"))
    assert w.kind is Kind.WARP and w.indices == (1, 2) and w.moves == ()
    o = parallel_pair_oracle(M("10", "10"))
    assert o.kind is Kind.WARP and o.indices == (1, 2)


def test_blocked_arcs_give_no_witness():
    A = M("10", "01", "10", "01")
    assert find_parallel_arc(A.rows) is None
    assert parallel_pair_oracle(A) is None
    assert parallel_pair_reachable(A) is None
    assert is_hyperbolic(A).hyperbolic


def test_comparable_arc_gives_witness():
    A = M("10", "00", "10", "01")
    a, b, _, arc = find_parallel_arc(A.rows)
    assert (a, b) == (0, 2) and arc == [1]
    w = parallel_pair_reachable(A)
    assert w.kind is Kind.WARP and w.indices == (1, 3) and w.arc == (2,)
    assert w.check(A)
    assert parallel_pair_oracle(A).check(A)


def test_plain_2x2_has_no_parallel_pair():
    assert parallel_pair_reachable(M("01", "10")) is None
    assert parallel_pair_oracle(M("01", "10")) is None


@pytest.mark.parametrize("m, n", small_shapes(1, 3))
def test_arc_criterion_matches_orbit_search(m, n):
    for A in all_matrices(m, n):
        w = parallel_pair_reachable(A)
        o = parallel_pair_oracle(A)
        assert (w is None) == (o is None)
        if w is not None:
            assert w.check(A) and o.check(A)


@pytest.mark.parametrize("m, n", small_shapes(1, 3))
def test_factored_search_matches_full_orbit_search(m, n):
    for A in all_matrices(m, n):
        assert (parallel_pair_oracle(A) is None) == (not parallel_reachable_by_bfs(grid(A), m, n))


@given(matrices(min_side=3, max_side=4))
def test_factored_search_matches_full_orbit_search_sampled(A):
    assert (parallel_pair_oracle(A) is None) == (not parallel_reachable_by_bfs(grid(A), A.m, A.n))


@given(matrices(min_side=4, max_side=5))
def test_arc_criterion_matches_orbit_search_sampled(A):
    w = parallel_pair_reachable(A)
    assert (w is None) == (parallel_pair_oracle(A) is None)
    if w is not None:
        assert w.check(A)


# -- verdicts -----------------------------------------------------------------

def test_verdict_examples():
    v = is_hyperbolic(M("01", "10"))
    assert v.verdict is Verdict.HYPERBOLIC and str(v) == "hyperbolic"
    v = is_hyperbolic(M("0", "1", "1"))
    assert v.verdict is Verdict.LAYERED and str(v) == "not hyperbolic: layered"
    v = is_hyperbolic(M("01", "11"))
    assert v.verdict is Verdict.LAYERED
    assert v.layering.layers[-1] == (Warp(2),)
    assert is_hyperbolic(CrossingMatrix.from_lists([], n=3)).verdict is Verdict.NOT_APPLICABLE


def test_parallel_verdict_carries_witness():
    # strongly connected; warp 4 (1101) is comparable with 0001, so warp 3
    # can be swapped past it to sit beside warp 1
    A = M("0001", "0010", "0001", "1101")
    v = is_hyperbolic(A)
    assert v.verdict is Verdict.PARALLEL and str(v) == "not hyperbolic: parallel"
    w = v.parallel
    assert w.indices == (1, 3) and w.arc == (4,) and len(w.moves) == 1
    assert w.check(A)


@pytest.mark.parametrize("m, n", small_shapes(1, 3) + [(2, 4), (4, 2)])
def test_verdict_matches_oracle(m, n):
    for A in all_matrices(m, n):
        h = is_hyperbolic(A).hyperbolic
        assert h == hyperbolic_oracle(grid(A), m, n)
        assert h == hyperbolic_flag(A.rows, A.columns, m, n)
        assert is_pi_hyperbolic(A) == h


@given(matrices(max_side=4))
def test_transpose_dual_preserves_hyperbolicity(A):
    assert is_hyperbolic(A).hyperbolic == is_hyperbolic(transpose_dual(A)).hyperbolic


@pytest.mark.parametrize("m, n", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_no_adjacent_comparable_implies_hyperbolic(m, n):
    for A in all_matrices(m, n):
        if no_adjacent_comparable(A):
            assert is_hyperbolic(A).hyperbolic


def test_no_adjacent_comparable_examples():
    assert no_adjacent_comparable(M("01", "10"))
    assert not no_adjacent_comparable(M("11", "11"))
    with pytest.raises(ValueError):
        no_adjacent_comparable(M("0", "1"))


@pytest.mark.parametrize("m, n", small_shapes(1, 3))
def test_verdict_variant_is_an_isotopy_invariant(m, n):
    done = set()
    for A in all_matrices(m, n):
        if A.rows in done:
            continue
        orb = orbit(A)
        done |= set(orb.parent)
        assert len({is_hyperbolic(X).verdict for X in orb}) == 1


# -- volume bound -------------------------------------------------------------

def test_volume_upper_bound():
    assert math.isclose(volume_upper_bound(2, 2), 14.6554, abs_tol=1e-3)
    assert volume_upper_bound(M("01", "10")) == 4 * V_OCT
    assert volume_upper_bound(0, 5) == 0
    assert 24.0921 < volume_upper_bound(3, 3) and 26.7879 < volume_upper_bound(3, 3)
    assert 0 <= V_OCT - 3.6638 < 1e-4


# -- JSJ report ---------------------------------------------------------------

def test_jsj_plain_2x2_is_one_hyperbolic_piece():
    rep = jsj_report(M("01", "10"))
    assert len(rep.pieces) == 1
    p = rep.pieces[0]
    assert p.kind is PieceKind.HYPERBOLIC_WEAVE and p.matrix == M("01", "10")


def test_jsj_1x1_is_two_axis_pieces():
    for A in (M("0"), M("1")):
        rep = jsj_report(A)
        assert [p.kind for p in rep.pieces] == [PieceKind.AXIS_ONLY_WEAVE] * 2
        assert sorted(c for p in rep.pieces for c in p.components) == [Warp(1), Weft(1)]


def test_jsj_all_ones():
    rep = jsj_report(M("11", "11"))
    kinds = [p.kind for p in rep.pieces]
    assert kinds.count(PieceKind.PARALLEL_FAMILY) == 2
    assert kinds.count(PieceKind.AXIS_ONLY_WEAVE) == 2
    fams = [p for p in rep.pieces if p.kind is PieceKind.PARALLEL_FAMILY]
    assert {p.family_kind for p in fams} == {Kind.WARP, Kind.WEFT}
    assert all(p.multiplicity == 2 for p in fams)
    assert rep.conserves(M("11", "11"))


@pytest.mark.parametrize("m, n", small_shapes(1, 3))
def test_jsj_conserves_components(m, n):
    allowed = set(PieceKind)
    for A in all_matrices(m, n):
        rep = jsj_report(A)
        assert rep.conserves(A)
        assert {p.kind for p in rep.pieces} <= allowed
        hyp = [p for p in rep.pieces if p.kind is PieceKind.HYPERBOLIC_WEAVE]
        for p in hyp:
            assert is_hyperbolic(p.matrix).hyperbolic
        if is_hyperbolic(A).hyperbolic:
            assert len(rep.pieces) == 1 and hyp


@given(matrices(min_side=3, max_side=5))
def test_jsj_conserves_components_sampled(A):
    assert jsj_report(A).conserves(A)
