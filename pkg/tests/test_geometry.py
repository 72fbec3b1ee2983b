import pytest

from oracles import chi, section_monomial_allowed
from ribbonlab.errors import (ConfigError, DegreeBoundError,
                              UnsupportedDatumError, WindowTooSmallError)
from ribbonlab.fredholm import echelonize, pivot_profile
from ribbonlab.geometry import (NodalCubicRing,
                                _validate_layered, forward_krichever,
                                level_index_table, make_datum,
                                noncoherent_chain, order_group,
                                validate_ribbon_axioms)
from ribbonlab.local2d import Local2DElement, Window2D
from ribbonlab.schur import LayeredSubspace, check_schur_pair
from ribbonlab.series import QQ

W_AC = Window2D(-4, 4, -8, 8, 2, 2)
W_WIDE = Window2D(-4, 4, -12, 12, 2, 2)


def test_monomial_criterion_matches_pole_divisor_oracle():
    # the plane criterion a + b <= m must be rederived from the divisor data
    for m in range(0, 4):
        g = make_datum("p2-line", m)
        for a in range(-10, 10):
            for b in range(-6, 6):
                assert g.contains_monomial(a, b, "W") == section_monomial_allowed(a, b, m)
                assert g.contains_monomial(a, b, "A") == section_monomial_allowed(a, b, 0)


def test_forward_levels_match_criterion():
    pair = forward_krichever(make_datum("p2-line", 0), W_AC)
    for b in range(W_AC.t_lo, W_AC.t_hi):
        profile = pivot_profile(pair.algebra.level(b))
        want = {(1, a) for a in range(W_AC.u_lo, W_AC.u_hi)
                if section_monomial_allowed(a, b, 0)}
        assert profile == want


def test_forward_twist_two_module_levels():
    pair = forward_krichever(make_datum("p2-line", 2), W_AC)
    for b in range(W_AC.t_lo, W_AC.t_hi):
        profile = pivot_profile(pair.module.level(b))
        want = {(1, a) for a in range(W_AC.u_lo, W_AC.u_hi)
                if section_monomial_allowed(a, b, 2)}
        assert profile == want


def test_forward_level_one_slice():
    pair = forward_krichever(make_datum("p2-line", 0), W_AC)
    assert pivot_profile(pair.algebra.level(1)) == {(1, a) for a in range(-8, 0)}


def test_forward_rejects_affine_datum():
    with pytest.raises(UnsupportedDatumError):
        forward_krichever(make_datum("nodal-cubic"), W_AC)


def test_forward_rejects_window_that_hides_levels():
    with pytest.raises(ConfigError):
        forward_krichever(make_datum("p2-line", 0), Window2D(-4, 4, -1, 3, 0, 0))


def test_level_index_table_riemann_roch():
    for m in range(0, 4):
        tab = level_index_table(make_datum("p2-line", m), W_WIDE)
        for row in tab.rows:
            b = row["b"]
            assert row["index_W"] == chi(m - b)
            assert row["index_A"] == chi(-b)


def test_level_index_examples():
    t0 = level_index_table(make_datum("p2-line", 0), W_WIDE)
    assert t0.index("W", 0) == 1
    assert t0.index("W", 2) == -1
    t3 = level_index_table(make_datum("p2-line", 3), W_WIDE)
    assert t3.index("W", 1) == 3


def test_level_index_marks_margin_contact():
    # at the narrow window the deepest twisted level pokes into the u-margin
    tab = level_index_table(make_datum("p2-line", 3), W_AC)
    row = next(r for r in tab.rows if r["b"] == -4)
    assert row["index_W"] is None and row["marker_W"] == "window-too-small"


def test_order_group_three_regimes():
    assert order_group(make_datum("p2-line", 0), W_AC).d == 1
    assert order_group(make_datum("even-variant"), W_AC).d == 2
    og = order_group(make_datum("nilpotent"), W_AC)
    assert og.d == 0 and og.window_limited


def test_order_group_witnesses():
    og = order_group(make_datum("p2-line", 0), W_AC)
    assert og.witness == ((-1, 1), (1, -1))
    og2 = order_group(make_datum("even-variant"), W_AC)
    assert og2.witness == ((-2, 2), (2, -2))


def test_order_group_stable_under_window_growth():
    for kind in ("p2-line", "even-variant"):
        small = order_group(make_datum(kind), W_AC)
        big = order_group(make_datum(kind), Window2D(-8, 8, -16, 16, 2, 2))
        assert small.d == big.d and not big.window_limited


def test_schur_checks_pass_on_admissible_windows():
    # margins sized past the witness radius: quarter-width margins
    cases = [(half, kind, twist)
             for half in (4, 6, 8)
             for kind, twist in (("p2-line", 0), ("p2-line", 1), ("p2-line", 3),
                                 ("nilpotent", 0))]
    cases += [(12, "p2-line", 0), (12, "nilpotent", 0)]  # width-24 windows
    for half, kind, twist in cases:
        w = Window2D(-half, half, -2 * half, 2 * half, half // 2, half // 2)
        rep = check_schur_pair(forward_krichever(make_datum(kind, twist), w))
        assert rep.verdict == "pass", (kind, twist, half, rep.failures)


def test_even_variant_fails_per_level_fredholm():
    # the synthetic even variant has zero odd slices: genuinely not a Schur pair
    rep = check_schur_pair(forward_krichever(make_datum("even-variant"), W_AC))
    assert rep.fredholm == "fail" and rep.verdict == "fail"


def test_validate_ribbon_axioms_plane():
    rep = validate_ribbon_axioms(make_datum("p2-line", 0), W_AC)
    assert rep.all_pass and rep.products_vanished == 0


def test_validate_ribbon_axioms_nilpotent_relations():
    rep = validate_ribbon_axioms(make_datum("nilpotent"), W_AC)
    assert rep.unit and rep.products_pass and rep.torsion_free
    assert rep.products_vanished > 0  # t_i t_j = 0 away from level zero


def test_validate_ribbon_axioms_corrupted_level():
    g = make_datum("p2-line", 0)
    pair = forward_krichever(g, W_AC)
    levels = []
    for b, lvl in pair.algebra.levels:
        if b == 0:
            lvl = echelonize(lvl.row_vectors(), 1, lvl.u_lo, lvl.u_hi, False, field=QQ)
        levels.append((b, lvl))
    corrupted = LayeredSubspace(QQ, 1, W_AC, tuple(levels), pair.algebra.generators)
    rep = _validate_layered(g, corrupted)
    assert not rep.torsion_free and 0 in rep.bad_levels


def test_nilpotent_datum_product_relations():
    g = make_datum("nilpotent")
    t = Local2DElement.monomial(QQ, 0, 1)
    t_inv = Local2DElement.monomial(QQ, 0, -1)
    one = Local2DElement.one(QQ)
    assert not g.product(t, t_inv)
    assert g.product(one, t) == t
    mixed = one + t
    assert g.product(mixed, mixed) == one + t + t  # t*t dies, cross terms survive


def test_nodal_ring_confluence_on_basis():
    ring = NodalCubicRing(6)
    one = QQ.one
    for m1 in ring.basis(3):
        for m2 in ring.basis(3):
            for m3 in ring.basis(3):
                left = ring.nf_mul(ring.nf_mul({m1: one}, {m2: one}), {m3: one})
                right = ring.nf_mul({m1: one}, ring.nf_mul({m2: one}, {m3: one}))
                assert left == right


def test_nodal_ideal_dims():
    # oracle: normal forms of positive degree span J_Q, degree >= 2 span J_Q^2
    for D in (2, 3, 4, 6, 8):
        ring = NodalCubicRing(D)
        assert ring.point_ideal_dim() == 2 * D
        assert ring.point_ideal_sq_dim() == 2 * D - 2
        assert ring.point_ideal_sq_dim() < ring.point_ideal_dim()


def test_noncoherent_chain_step_is_ideal_gap():
    ring = NodalCubicRing(6)
    w = Window2D(-4, 1, -8, 8, 0, 0)
    dims = noncoherent_chain(ring, 2, w)
    assert dims[1] - dims[0] == ring.point_ideal_dim() - ring.point_ideal_sq_dim()
    assert dims[1] - dims[0] > 0


def test_noncoherent_chain_strictly_increasing_triple():
    dims = noncoherent_chain(NodalCubicRing(6), 3, Window2D(-4, 1, -8, 8, 0, 0))
    assert len(dims) == 3
    assert dims[0] < dims[1] < dims[2]
    steps = {b - a for a, b in zip(dims, dims[1:])}
    assert len(steps) == 1  # constant difference at fixed degree bound


def test_noncoherent_chain_degree_too_small():
    with pytest.raises(DegreeBoundError):
        noncoherent_chain(NodalCubicRing(1), 2, Window2D(-4, 1, -8, 8, 0, 0))
    with pytest.raises(DegreeBoundError):
        noncoherent_chain(NodalCubicRing(2), 2, Window2D(-4, 1, -8, 8, 0, 0))


def test_noncoherent_chain_window_too_small():
    with pytest.raises(WindowTooSmallError):
        noncoherent_chain(NodalCubicRing(6), 4, Window2D(-4, 1, -8, 8, 0, 0))


def test_datum_validation():
    with pytest.raises(ConfigError):
        make_datum("p3-plane")
    with pytest.raises(ConfigError):
        make_datum("nilpotent", twist=2)
    assert make_datum("even-variant").synthetic
    assert not make_datum("p2-line").synthetic
    assert make_datum("p2-line").selfint == 1
    assert make_datum("nilpotent").selfint == 0


def test_meta_labels_synthetic_in_outputs():
    pair = forward_krichever(make_datum("even-variant"), W_AC)
    assert pair.meta["synthetic"] is True
