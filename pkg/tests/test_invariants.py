import random
import warnings

import pytest

from knotinv import (
    DiagramError,
    LaurentPoly,
    aa_adjacency,
    aa_closures,
    aa_extreme_coefficients,
    conway_determinant,
    determinant,
    dl_coefficients,
    genus_one_knot_signature,
    giller_mod4_check,
    is_reduced,
    jones,
    jones_obstruction,
    kauffman_bracket,
    mark_almost_alternating,
    mirror,
    orient,
    parse_pd,
    recognize_genus_one,
    reduce_kinks,
    signature_bounds,
    state_graph,
    tangle_sum_signature,
    traczyk_signature,
    validate,
)
from knotinv.invariants import _check_aa_reduced
from knotinv.sampling import random_almost_alternating_diagram, random_alternating_diagram


def test_traczyk_trefoil(trefoil):
    assert traczyk_signature(orient(trefoil)) == 2
    assert traczyk_signature(orient(mirror(trefoil))) == -2


def test_traczyk_fig8(fig8):
    assert traczyk_signature(orient(fig8)) == 0


def test_traczyk_unknot():
    assert traczyk_signature(orient(parse_pd(""))) == 0


def test_traczyk_rejects_nonalternating(aa_trefoil):
    with pytest.raises(DiagramError):
        traczyk_signature(orient(aa_trefoil))


def test_traczyk_rejects_nugatory():
    kinked = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,7,3] X[7,6,8,8]")
    assert not is_reduced(kinked)
    with pytest.raises(DiagramError):
        traczyk_signature(orient(kinked))


def test_reduce_kinks():
    kinked = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,7,3] X[7,6,8,8]")
    red = reduce_kinks(orient(kinked))
    assert red.diagram.crossing_count == 3
    assert traczyk_signature(red) == 2
    # a single kinked circle reduces to the unknot
    lone = reduce_kinks(orient(parse_pd("X[1,2,2,1]")))
    assert lone.diagram.crossing_count == 0 and lone.diagram.free_loops == 1


def test_signature_bounds(trefoil, aa_trefoil, k12n888_mirror):
    rep = signature_bounds(orient(trefoil))
    assert rep.lower == rep.upper == 2
    rep = signature_bounds(orient(aa_trefoil))
    assert rep.upper - rep.lower == 2
    rep = signature_bounds(orient(k12n888_mirror))
    assert (rep.lower, rep.upper) == (8, 10)


def test_giller():
    assert giller_mod4_check(8, 45)
    assert giller_mod4_check(0, 1)
    assert giller_mod4_check(2, 3)
    assert not giller_mod4_check(0, 3)
    with pytest.raises(ValueError):
        giller_mod4_check(1, 3)
    with pytest.raises(ValueError):
        giller_mod4_check(0, 4)


def test_theorem1_12n888(k12n888_mirror):
    rep = genus_one_knot_signature(orient(k12n888_mirror))
    assert rep.exact == 8
    assert (rep.lower, rep.upper) == (8, 10)
    assert rep.det == 45 and rep.mod4_ok and rep.method == "theorem1"


def test_theorem1_rejects_alternating(trefoil):
    with pytest.raises(DiagramError):
        genus_one_knot_signature(orient(trefoil))


def test_theorem2_12n888(k12n888_mirror):
    gs = recognize_genus_one(k12n888_mirror)
    od = orient(k12n888_mirror)
    rep = tangle_sum_signature(gs, od)
    assert rep.exact == 8 and rep.method == "theorem2"
    assert rep.mod4_ok


def test_conway_determinant_12n888(k12n888_mirror):
    gs = recognize_genus_one(k12n888_mirror)
    assert conway_determinant(gs) == 45
    assert conway_determinant(gs) == determinant(orient(k12n888_mirror))


def test_dl_trefoil(trefoil):
    terms = dl_coefficients(trefoil)
    br = kauffman_bracket(trefoil)
    assert all(br.coefficient(e) == c for e, c in terms)
    # with this chirality: v = 3, e = 3 leading; vbar = 2, ebar = 1 trailing
    assert terms[0] == (br.max_exponent(), 1)
    assert terms[3] == (br.min_exponent(), -1)


def test_dl_fig8(fig8):
    br = kauffman_bracket(fig8)
    assert all(br.coefficient(e) == c for e, c in dl_coefficients(fig8))


def test_dl_rejects(aa_trefoil):
    with pytest.raises(DiagramError):
        dl_coefficients(aa_trefoil)
    with pytest.raises(DiagramError):
        dl_coefficients(parse_pd(""))


def test_mark_almost_alternating(aa_trefoil, trefoil):
    aa = mark_almost_alternating(aa_trefoil, 2)
    assert aa.dealternator == 2
    assert len({aa.u1, aa.u2, aa.v1, aa.v2}) == 4
    with pytest.raises(DiagramError):
        mark_almost_alternating(trefoil, 0)


def test_aa_closures_smoothings(aa_trefoil):
    aa = mark_almost_alternating(aa_trefoil, 2)
    dr, nr = aa_closures(aa)
    assert dr.crossing_count == nr.crossing_count == 2
    from knotinv import nonalternating_edges

    assert not nonalternating_edges(dr) and not nonalternating_edges(nr)


def test_aa_trefoil_closures_unreduced(aa_trefoil):
    # both smoothings of the dealternator are kinked twists here
    aa = mark_almost_alternating(aa_trefoil, 2)
    with pytest.raises(DiagramError):
        aa_adjacency(aa)


def test_aa_generated_predictions():
    rng = random.Random(4)
    for _ in range(25):
        d, deal = random_almost_alternating_diagram(rng.randint(5, 12), rng)
        aa = mark_almost_alternating(d, deal)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            adj_u, adj_v = aa_adjacency(aa)
            (e0, a0), (ek, ak) = aa_extreme_coefficients(aa)
        br = kauffman_bracket(d)
        assert br.coefficient(e0) == a0
        assert br.coefficient(ek) == ak
        assert br.max_exponent() <= e0 and br.min_exponent() >= ek
        assert all((e0 - e) % 4 == 0 for e, _ in br.terms())
        # the face count equals the parallel-edge collapse in the state graphs
        dr, nr = _check_aa_reduced(aa)
        assert adj_u == state_graph(nr, "A").reduced_edge_count - state_graph(dr, "A").reduced_edge_count
        assert adj_v == state_graph(dr, "B").reduced_edge_count - state_graph(nr, "B").reduced_edge_count


def test_adj_duality():
    rng = random.Random(5)
    for _ in range(40):
        d, deal = random_almost_alternating_diagram(rng.randint(5, 12), rng)
        aa = mark_almost_alternating(d, deal)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            adj_u, adj_v = aa_adjacency(aa)
        assert not (adj_u >= 3 and adj_v >= 3)
        if adj_u >= 3:
            assert adj_v == 0
        if adj_v >= 3:
            assert adj_u == 0


def test_obstruction_verdicts():
    fires = jones_obstruction(LaurentPoly("t_half", {0: -2, 4: 3, 8: -2}))
    assert fires.fires and fires.a_m == -2 and fires.a_M == -2
    assert set(fires.implied) == {
        "not_almost_alternating",
        "turaev_genus_ge_2",
        "dealternating_number_ge_2",
    }
    quiet = jones_obstruction(LaurentPoly("t_half", {0: 1, 4: -7}))
    assert not quiet.fires and quiet.implied == ()
    with pytest.raises(ValueError):
        jones_obstruction(LaurentPoly("t_half", {}))


def test_obstruction_trefoil(trefoil):
    assert not jones_obstruction(jones(orient(trefoil))).fires


def test_alternating_never_fires():
    rng = random.Random(6)
    for _ in range(30):
        d = random_alternating_diagram(rng.randint(2, 9), rng)
        if not is_reduced(d):
            continue
        assert not jones_obstruction(jones(orient(d))).fires
