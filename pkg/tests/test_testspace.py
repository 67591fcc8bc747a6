"""Test spaces: events, perspectivity, weights, and the two correspondences."""

import itertools

import pytest

import partlogic as P
from conftest import corpus_entry

fs = frozenset


def pts_firefly():
    return corpus_entry("pts-firefly").payload


def wright_test_space():
    return P.TestSpace.from_greechie(corpus_entry("wright").payload)


def firefly_test_space():
    return P.TestSpace.from_greechie(corpus_entry("firefly").payload)


def fano_test_space():
    return P.TestSpace.from_greechie(corpus_entry("fano").payload)


def triangle_test_space():
    return P.TestSpace("a b c".split(), [{"a", "b"}, {"b", "c"}, {"c", "a"}])


# verification -----------------------------------------------------------------


def test_pts_firefly_is_a_test_space():
    report = P.verify_test_space(pts_firefly().as_test_space())
    assert report.passed


def test_single_test_space_is_valid():
    ts = P.TestSpace(["a", "b"], [{"a", "b"}])
    assert P.verify_test_space(ts).passed


def test_antichain_violation():
    ts = P.TestSpace(["a", "b"], [{"a"}, {"a", "b"}])
    report = P.verify_test_space(ts)
    assert not report.passed
    assert report.violations[0].axiom == "test-space-antichain"


def test_covering_violation():
    ts = P.TestSpace(["a", "b"], [{"a"}])
    report = P.verify_test_space(ts)
    assert not report.passed
    assert report.violations[0].axiom == "test-space-covering"


def test_all_partition_test_spaces_are_test_spaces():
    for pl_id in ("pl-wright", "pl-fig12"):
        pts = P.partition_logic_to_pts(corpus_entry(pl_id).payload)
        assert P.verify_test_space(pts.as_test_space()).passed
    assert P.verify_test_space(pts_firefly().as_test_space()).passed


# event relations ---------------------------------------------------------------


def test_triangle_relations():
    ts = triangle_test_space()
    rel = P.event_relations(ts, {"a"}, {"b"})
    assert rel.loc and rel.orthogonal
    rel = P.event_relations(ts, {"a"}, {"c"})
    assert rel.perspective
    assert fs({"b"}) in rel.axes


def test_firefly_event_perspectivity():
    ts = firefly_test_space()
    rel = P.event_relations(ts, {"l", "r"}, {"f", "b"})
    assert rel.perspective
    assert rel.axes == (fs({"n"}),)
    assert not rel.orthogonal


def test_empty_event_loc_full_test():
    ts = triangle_test_space()
    for t in ts.tests:
        rel = P.event_relations(ts, frozenset(), t)
        assert rel.loc


def test_non_event_rejected():
    ts = triangle_test_space()
    with pytest.raises(P.StructureError):
        P.event_relations(ts, {"a", "b", "c"}, {"a"})


# algebraicity -------------------------------------------------------------------


def test_triangle_not_algebraic():
    check = P.is_algebraic(triangle_test_space())
    assert not check
    f, g, h = check.witness
    assert (f, g, h) == (fs({"a"}), fs({"b"}), fs({"b"}))
    # and the witness is a genuine violation
    ts = triangle_test_space()
    assert P.event_relations(ts, f, g).perspective
    assert P.event_relations(ts, f, h).loc
    assert not P.event_relations(ts, g, h).loc


def test_complete_pts_is_algebraic():
    assert P.is_complete(pts_firefly())
    assert P.is_algebraic(pts_firefly().as_test_space())


def test_single_test_is_algebraic():
    assert P.is_algebraic(P.TestSpace(["a", "b"], [{"a", "b"}]))


# the class logic ----------------------------------------------------------------


def test_pts_firefly_class_logic_is_firefly(firefly):
    pi = P.pi_logic(pts_firefly().as_test_space())
    assert P.verify_oa(pi).structure_class == "orthoalgebra"
    assert P.isomorphic(pi, firefly) is not None


def test_ex72_class_logic_is_triangle_logic(wright):
    pts = P.partition_logic_to_pts(corpus_entry("pl-wright").payload)
    pi = P.pi_logic(pts.as_test_space())
    assert P.isomorphic(pi, wright) is not None


def test_single_test_class_logic_is_boolean():
    ts = P.TestSpace(["a", "b", "c"], [{"a", "b", "c"}])
    pi = P.pi_logic(ts)
    assert len(pi.elements) == 8
    assert P.classify(pi) == "boolean"


def test_non_algebraic_input_refused():
    with pytest.raises(P.AlgebraicityError):
        P.pi_logic(triangle_test_space())


def test_class_logic_consistent_with_pasted_logic(firefly):
    for pts in (
        pts_firefly(),
        P.partition_logic_to_pts(corpus_entry("pl-wright").payload),
        P.partition_logic_to_pts(corpus_entry("pl-fig12").payload),
    ):
        pi = P.pi_logic(pts.as_test_space())
        pasted = P.pasting_to_oa(P.pts_to_partition_logic(pts))
        assert P.isomorphic(pi, pasted) is not None


# weights -------------------------------------------------------------------------


def test_wright_weights_match_state_table():
    ts = wright_test_space()
    weights = P.enumerate_two_valued_weights(ts)
    rows = sorted(w.row("abcdef") for w in weights)
    assert rows == sorted(
        [
            (1, 0, 0, 1, 0, 0),
            (0, 0, 1, 0, 0, 1),
            (0, 1, 0, 0, 1, 0),
            (0, 1, 0, 1, 0, 1),
        ]
    )


def test_firefly_has_five_weights():
    assert len(P.enumerate_two_valued_weights(firefly_test_space())) == 5


def test_singleton_test_weight():
    ts = P.TestSpace(["x"], [{"x"}])
    weights = P.enumerate_two_valued_weights(ts)
    assert len(weights) == 1
    assert weights[0]("x") == 1


def test_weights_check_out():
    ts = wright_test_space()
    for w in P.enumerate_two_valued_weights(ts):
        assert P.is_weight(ts, w)


# theorem: separating weights <-> partition test space -----------------------------


def test_wright_to_partition_test_space(wright):
    pts = P.ts_to_partition_test_space(wright_test_space())
    assert len(pts.base) == 4
    pl = P.pts_to_partition_logic(pts)
    reference = P.pasting_to_oa(corpus_entry("pl-wright").payload)
    assert P.isomorphic(P.pasting_to_oa(pl), reference) is not None


def test_firefly_to_partition_test_space():
    pts = P.ts_to_partition_test_space(firefly_test_space())
    assert len(pts.base) == 5
    assert P.verify_test_space(pts.as_test_space()).passed
    # every test maps to a partition of the weight set
    for t in pts.tests:
        assert sorted(p for c in t for p in c) == sorted(pts.base)


def test_fano_has_no_separating_weights():
    with pytest.raises(P.SeparationError) as err:
        P.ts_to_partition_test_space(fano_test_space())
    assert "no separating two-valued weights" in str(err.value)


def test_weight_count_preserved():
    for space in (wright_test_space(), firefly_test_space()):
        pts = P.ts_to_partition_test_space(space)
        again = P.enumerate_two_valued_weights(pts.as_test_space())
        assert len(again) == len(pts.base)


# completion -----------------------------------------------------------------------


def test_pts_firefly_already_complete():
    pts = pts_firefly()
    completed = P.completion(pts)
    assert len(completed.tests) == len(pts.tests)
    assert P.is_complete(pts)


def test_completion_finds_missing_partition():
    full = corpus_entry("pl-wright").payload
    cells = [c for part in full.partitions for c in part]
    tests = [fs(part) for part in full.partitions[:2]]
    pts = P.PartitionTestSpace(full.ground, cells, tests)
    assert not P.is_complete(pts)
    completed = P.completion(pts)
    assert len(completed.tests) == 3
    added = set(completed.tests) - set(pts.tests)
    assert added == {fs({fs({"1"}), fs({"3"}), fs({"2", "4"})})}


def test_singleton_cells_complete():
    pts = P.PartitionTestSpace(
        ["1", "2"], [fs({"1"}), fs({"2"})], [fs({fs({"1"}), fs({"2"})})]
    )
    assert P.is_complete(pts)


# partition test space <-> partition logic ------------------------------------------


def test_pts_firefly_partition_logic(firefly):
    pl = P.pts_to_partition_logic(pts_firefly())
    assert set(pl.ground) == {"1", "2", "3", "4"}
    assert P.isomorphic(P.pasting_to_oa(pl), firefly) is not None


def test_ex73_partitions_paste_to_fig12(fig12):
    pts = P.partition_logic_to_pts(corpus_entry("pl-fig12").payload)
    pl = P.pts_to_partition_logic(pts)
    assert P.isomorphic(P.pasting_to_oa(pl), fig12) is not None


def test_round_trip_partition_logics():
    for pl_id in ("pl-wright", "pl-fig12"):
        pl = corpus_entry(pl_id).payload
        back = P.pts_to_partition_logic(P.partition_logic_to_pts(pl))
        assert P.isomorphic(
            P.pasting_to_oa(back), P.pasting_to_oa(pl)
        ) is not None


# perspectivity properties ------------------------------------------------------------


def test_perspective_events_share_unions():
    for pts in (
        pts_firefly(),
        P.partition_logic_to_pts(corpus_entry("pl-wright").payload),
    ):
        ts = pts.as_test_space()
        events = ts.events()
        for e, f in itertools.combinations(events, 2):
            if ts.local_complements(e) & ts.local_complements(f):
                u_e = fs().union(*e) if e else fs()
                u_f = fs().union(*f) if f else fs()
                assert u_e == u_f


def test_complete_pts_equal_unions_are_perspective():
    pts = pts_firefly()
    assert P.is_complete(pts)
    ts = pts.as_test_space()
    events = ts.events()
    for e, f in itertools.combinations(events, 2):
        u_e = fs().union(*e) if e else fs()
        u_f = fs().union(*f) if f else fs()
        if u_e == u_f:
            assert ts.local_complements(e) & ts.local_complements(f), (e, f)


# OMP conditions ----------------------------------------------------------------------


def test_ex72_triple_condition_fails():
    pts = P.partition_logic_to_pts(corpus_entry("pl-wright").payload)
    res = P.omp_conditions(pts)
    assert not res.triple_condition
    e, f, g = res.triple_witness
    assert ({fs().union(*ev) for ev in (e, f, g)}) == {
        fs({"1"}),
        fs({"2"}),
        fs({"3"}),
    }
    # witness really is pairwise orthogonal with no joint test
    ts = pts.as_test_space()
    assert P.event_relations(ts, e, f).orthogonal
    assert P.event_relations(ts, f, g).orthogonal
    assert P.event_relations(ts, e, g).orthogonal
    assert not P.event_relations(ts, e | f, g).orthogonal


def test_pts_firefly_concrete_condition_fails():
    res = P.omp_conditions(pts_firefly())
    assert not res.concrete_condition
    e1, e2 = res.concrete_witness
    assert fs().union(*e1) == fs({"2"})
    assert fs().union(*e2) == fs({"3"})


def test_single_test_pts_satisfies_both():
    pts = P.PartitionTestSpace(
        ["1", "2"], [fs({"1"}), fs({"2"})], [fs({fs({"1"}), fs({"2"})})]
    )
    res = P.omp_conditions(pts)
    assert res.triple_condition and res.concrete_condition
