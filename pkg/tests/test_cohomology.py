import random

import pytest

from oracles import rr_h0, rr_h1
from ribbonlab.cohomology import (CechData, LevelStack, cech_line_bundle,
                                  picard_dimension,
                                  restriction_exactness_check,
                                  ribbon_cohomology)
from ribbonlab.errors import (ChartError, RangeViolationError,
                              TruncationBoundError, UnsupportedDatumError)
from ribbonlab.geometry import make_datum
from ribbonlab.series import QQ, Field

F31 = Field(31)


def test_cech_examples():
    assert cech_line_bundle(0, 8) == (1, 0)
    assert cech_line_bundle(-2, 8) == (0, 1)
    assert cech_line_bundle(3, 8) == (4, 0)


def test_cech_matches_riemann_roch_sweep():
    B = 8
    for d in range(-6, 7):
        assert cech_line_bundle(d, B) == (rr_h0(d), rr_h1(d))


def test_cech_data_charts_glue_inside_overlap():
    # both chart images must land in the declared overlap and the twist
    # identification must be exponent-reversing on chart two
    for d in range(-5, 6):
        cd = CechData(d, 8)
        overlap = set(cd.overlap_exponents())
        for a in cd.chart_exponents():
            assert cd.to_overlap("U1", a) in overlap
            assert cd.to_overlap("U2", a) in overlap
            assert cd.to_overlap("U2", a) == d - a
    with pytest.raises(ChartError):
        CechData(0, 8).to_overlap("U12", 0)


def test_cech_bound_too_small():
    with pytest.raises(TruncationBoundError):
        cech_line_bundle(5, 6)
    with pytest.raises(TruncationBoundError):
        cech_line_bundle(-7, 8)


def test_serre_duality_symmetry():
    rng = random.Random(515)
    for _ in range(1000):
        d = rng.randint(-10, 10)
        B = max(abs(d), abs(-2 - d)) + 2 + rng.randint(0, 2)
        fld = QQ if rng.random() < 0.3 else F31
        h0, h1 = cech_line_bundle(d, B, fld)
        dual_h0, dual_h1 = cech_line_bundle(-2 - d, B, fld)
        assert (h0, h1) == (dual_h1, dual_h0)


def test_ribbon_cohomology_depth_two():
    rep = ribbon_cohomology(LevelStack.for_p2_line(0, 2), 8)
    assert (rep.h0, rep.h1) == (1, 1)
    assert rep.agreement and rep.transition_surjective
    assert [lv["d"] for lv in rep.levels] == [0, -1, -2]


def test_ribbon_cohomology_depth_five():
    rep = ribbon_cohomology(LevelStack.for_p2_line(0, 5), 8)
    assert (rep.h0, rep.h1) == (1, 10)
    assert rep.agreement and rep.transition_surjective


def test_ribbon_cohomology_single_level_matches_line_bundle():
    rep = ribbon_cohomology(LevelStack((0,)), 8)
    assert (rep.h0, rep.h1) == cech_line_bundle(0, 8) == (1, 0)


def test_ribbon_cohomology_transitions_deep_stacks():
    for depth in range(1, 9):
        rep = ribbon_cohomology(LevelStack.for_p2_line(0, depth), 12)
        assert rep.agreement and rep.transition_surjective


def test_ribbon_cohomology_bound_check():
    with pytest.raises(TruncationBoundError):
        ribbon_cohomology(LevelStack.for_p2_line(0, 7), 8)


def test_restriction_exactness_on_charts():
    stack = LevelStack.for_p2_line(0, 3)
    for chart in ("U1", "U2"):
        rep = restriction_exactness_check(stack, chart, 6)
        assert rep.ok
        for row in rep.levels:
            assert row["kernel_dim"] == row["level_dim"] == 7


def test_restriction_exactness_rejects_overlap():
    with pytest.raises(ChartError):
        restriction_exactness_check(LevelStack.for_p2_line(0, 1), "U12", 6)


def test_restriction_exactness_empty_stack():
    assert restriction_exactness_check(LevelStack(()), "U1", 6).ok


def test_picard_dimensions():
    g = make_datum("p2-line", 0)
    assert picard_dimension(g, 1, 8).dim == 0
    assert picard_dimension(g, 3, 8).dim == 3
    rep = picard_dimension(g, 5, 8)
    assert rep.dim == 10
    assert rep.d == -1
    assert rep.h0_vanishing


def test_picard_increments_are_per_level_cech():
    g = make_datum("p2-line", 0)
    prev = 0
    for i in range(1, 7):
        cur = picard_dimension(g, i, 10).dim
        assert cur - prev == rr_h1(-i) == i - 1
        prev = cur


def test_picard_rejects_other_data():
    with pytest.raises(UnsupportedDatumError):
        picard_dimension(make_datum("nilpotent"), 2, 8)
    with pytest.raises(RangeViolationError):
        picard_dimension(make_datum("p2-line"), 0, 8)
