"""Twisted convolution algebras: products, involution, trace, representation."""

from fractions import Fraction

import numpy as np
import pytest

from heisenmod import (
    FiniteAbelianGroup,
    TFPoint,
    TwistedSeq,
    adjoint_subgroup,
    cstar_norm,
    delta_seq,
    full_plane,
    heisenberg_cocycle,
    integrated_rep,
    involution,
    l2_localization_inner,
    splitmix64_stream,
    subgroup_from_generators,
    trace,
    trivial_subgroup,
    twisted_convolve,
    unit_seq,
)

Z2 = FiniteAbelianGroup((2,))
Z4 = FiniteAbelianGroup((4,))
Z6 = FiniteAbelianGroup((6,))

PLANE4 = full_plane(Z4, Fraction(1, 4))
LAT4 = subgroup_from_generators(Z4, [((2,), (0,)), ((0,), (2,))], 1)
DUAL2 = adjoint_subgroup(trivial_subgroup(Z2, 1))  # full plane, weight 1/2


def _random_seq(domain, conjugated, seed):
    raw = splitmix64_stream(seed, 2 * len(domain)).astype(np.float64)
    vals = (raw[0::2] - 2.0**63) / 2.0**62 + 1j * (raw[1::2] - 2.0**63) / 2.0**62
    return TwistedSeq(domain, conjugated, vals)


def test_seq_constructor_validation():
    with pytest.raises(ValueError):
        TwistedSeq(PLANE4, False, np.zeros(3))
    a = delta_seq(PLANE4, TFPoint((1,), (0,)))
    with pytest.raises((ValueError, RuntimeError)):
        a.coeffs[0] = 1.0


def test_delta_and_at():
    z = TFPoint((1,), (2,))
    a = delta_seq(PLANE4, z)
    assert a.at(z) == 1.0
    assert a.at(PLANE4.ambient.tf_zero()) == 0.0


def test_delta_convolution_single_cocycle_value():
    # On a counting-weight domain, delta_z * delta_w = kappa(z, w) delta_{z+w}.
    z = TFPoint((1,), (0,))
    w = TFPoint((0,), (1,))
    dom = full_plane(Z4, 1)
    prod = twisted_convolve(delta_seq(dom, z), delta_seq(dom, w))
    expect = heisenberg_cocycle(Z4, z, w)
    assert prod.at(Z4.tf_add(z, w)) == pytest.approx(expect, abs=1e-14)
    # reversed order picks up the conjugate phase: noncommutative
    rev = twisted_convolve(delta_seq(dom, w), delta_seq(dom, z))
    assert rev.at(Z4.tf_add(z, w)) == pytest.approx(heisenberg_cocycle(Z4, w, z), abs=1e-14)
    assert abs(prod.at(Z4.tf_add(z, w)) - rev.at(Z4.tf_add(z, w))) > 1.0


def test_delta_convolution_conjugated_flag():
    dom = full_plane(Z4, 1)
    z = TFPoint((1,), (0,))
    w = TFPoint((0,), (1,))
    prod = twisted_convolve(delta_seq(dom, z, True), delta_seq(dom, w, True))
    expect = np.conj(heisenberg_cocycle(Z4, z, w))
    assert prod.at(Z4.tf_add(z, w)) == pytest.approx(expect, abs=1e-14)


def test_weight_enters_product():
    # weight 1/4 scales each summand of the convolution.
    z = TFPoint((1,), (1,))
    prod = twisted_convolve(delta_seq(PLANE4, z), delta_seq(PLANE4, z))
    kappa = heisenberg_cocycle(Z4, z, z)
    assert prod.at(Z4.tf_add(z, z)) == pytest.approx(0.25 * kappa, abs=1e-14)


def test_unit_element_both_flags():
    for dom in (PLANE4, LAT4, DUAL2):
        for flag in (False, True):
            e = unit_seq(dom, flag)
            assert trace(twisted_convolve(e, e)) == pytest.approx(trace(e), abs=1e-12)
            a = _random_seq(dom, flag, 17)
            assert np.allclose(twisted_convolve(e, a).coeffs, a.coeffs, atol=1e-12)
            assert np.allclose(twisted_convolve(a, e).coeffs, a.coeffs, atol=1e-12)
            assert integrated_rep(e).shape == (dom.ambient.order,) * 2
            assert np.allclose(integrated_rep(e), np.eye(dom.ambient.order), atol=1e-12)


def test_associativity_exhaustive_deltas():
    for dom in (LAT4, DUAL2):
        for flag in (False, True):
            deltas = [delta_seq(dom, z, flag) for z in dom.elements]
            for a in deltas:
                for b in deltas:
                    ab = twisted_convolve(a, b)
                    for c in deltas:
                        lhs = twisted_convolve(ab, c)
                        rhs = twisted_convolve(a, twisted_convolve(b, c))
                        assert np.max(np.abs(lhs.coeffs - rhs.coeffs)) < 1e-13


def test_involution_fixture():
    # (delta_z)^* = conj(kappa(z, -z)) delta_{-z}
    dom = full_plane(Z4, 1)
    z = TFPoint((1,), (1,))
    star = involution(delta_seq(dom, z))
    neg = Z4.tf_neg(z)
    expect = np.conj(heisenberg_cocycle(Z4, z, neg))
    assert star.at(neg) == pytest.approx(expect, abs=1e-14)
    assert star.at(z) == 0.0


def test_involution_laws_random():
    for dom in (PLANE4, LAT4, DUAL2):
        for flag in (False, True):
            a = _random_seq(dom, flag, 23)
            b = _random_seq(dom, flag, 29)
            assert np.allclose(involution(involution(a)).coeffs, a.coeffs, atol=1e-12)
            # (ab)^* = b^* a^*
            lhs = involution(twisted_convolve(a, b))
            rhs = twisted_convolve(involution(b), involution(a))
            assert np.max(np.abs(lhs.coeffs - rhs.coeffs)) < 1e-11


def test_trace_values():
    assert trace(delta_seq(PLANE4, Z4.tf_zero())) == 1.0
    assert trace(delta_seq(PLANE4, TFPoint((1,), (2,)))) == 0.0
    assert trace(unit_seq(PLANE4)) == 4.0  # 1 / weight
    assert trace(unit_seq(LAT4)) == 1.0


def test_trace_is_tracial_and_positive():
    for dom in (PLANE4, DUAL2):
        for flag in (False, True):
            a = _random_seq(dom, flag, 31)
            b = _random_seq(dom, flag, 37)
            ab = trace(twisted_convolve(a, b))
            ba = trace(twisted_convolve(b, a))
            assert ab == pytest.approx(ba, abs=1e-11)
            pos = trace(twisted_convolve(a, involution(a)))
            assert abs(pos.imag) < 1e-11
            assert pos.real > 0


def test_integrated_rep_fixture_diag():
    # coefficients at (0,0) and (0,2) on the Z_4 plane give diag(2, 0, 2, 0)
    dom = full_plane(Z4, 1)
    coeffs = np.zeros(len(dom), dtype=complex)
    coeffs[dom.index(Z4.tf_zero())] = 1.0
    coeffs[dom.index(TFPoint((0,), (2,)))] = 1.0
    rep = integrated_rep(TwistedSeq(dom, False, coeffs))
    assert np.allclose(rep, np.diag([2.0, 0.0, 2.0, 0.0]), atol=1e-13)
    assert cstar_norm(TwistedSeq(dom, False, coeffs)) == pytest.approx(2.0, abs=1e-12)


def test_integrated_rep_multiplicative_plain_flag():
    # flag False: rep(a * b) = rep(a) rep(b)
    for dom in (LAT4, full_plane(Z4, 1), PLANE4):
        a = _random_seq(dom, False, 41)
        b = _random_seq(dom, False, 43)
        lhs = integrated_rep(twisted_convolve(a, b))
        rhs = integrated_rep(a) @ integrated_rep(b)
        assert np.max(np.abs(lhs - rhs)) < 1e-10


def test_integrated_rep_reverses_order_conjugated_flag():
    # flag True: rep is built from adjoint shifts and reverses products.
    a = _random_seq(DUAL2, True, 47)
    b = _random_seq(DUAL2, True, 53)
    lhs = integrated_rep(twisted_convolve(a, b))
    rhs = integrated_rep(b) @ integrated_rep(a)
    assert np.max(np.abs(lhs - rhs)) < 1e-11
    # the same-order product genuinely fails on this non-isotropic domain
    wrong = integrated_rep(a) @ integrated_rep(b)
    assert np.max(np.abs(lhs - wrong)) > 1e-3


def test_integrated_rep_star_preserving_both_flags():
    for dom in (PLANE4, DUAL2, LAT4):
        for flag in (False, True):
            a = _random_seq(dom, flag, 59)
            lhs = integrated_rep(involution(a))
            rhs = integrated_rep(a).conj().T
            assert np.max(np.abs(lhs - rhs)) < 1e-11


def test_cstar_norm_properties():
    zero = TwistedSeq(PLANE4, False, np.zeros(len(PLANE4), dtype=complex))
    assert cstar_norm(zero) == 0.0
    assert cstar_norm(unit_seq(PLANE4)) == pytest.approx(1.0, abs=1e-12)
    # faithfulness: nonzero sequences have nonzero norm
    for salt in range(6):
        a = _random_seq(PLANE4, False, 61 + salt)
        assert cstar_norm(a) > 1e-6
    # C*-identity: ||a^* a|| = ||a||^2
    a = _random_seq(DUAL2, True, 67)
    assert cstar_norm(twisted_convolve(involution(a), a)) == pytest.approx(
        cstar_norm(a) ** 2, rel=1e-10
    )


def test_localization_inner_fixtures():
    z = TFPoint((1,), (3,))
    a = delta_seq(PLANE4, z)
    assert l2_localization_inner(a, a) == pytest.approx(0.25, abs=1e-14)  # the weight
    other = delta_seq(PLANE4, TFPoint((2,), (0,)))
    assert l2_localization_inner(a, other) == pytest.approx(0.0, abs=1e-14)
    counting = delta_seq(full_plane(Z4, 1), z)
    assert l2_localization_inner(counting, counting) == pytest.approx(1.0, abs=1e-14)


def test_localization_inner_equals_weighted_pairing():
    for dom in (PLANE4, DUAL2):
        for flag in (False, True):
            a = _random_seq(dom, flag, 71)
            b = _random_seq(dom, flag, 73)
            lhs = l2_localization_inner(a, b)
            rhs = float(dom.weight) * np.sum(a.coeffs * np.conj(b.coeffs))
            assert lhs == pytest.approx(rhs, abs=1e-11)
            direct = trace(twisted_convolve(a, involution(b)))
            assert lhs == pytest.approx(direct, abs=1e-11)


def test_domain_and_flag_mismatch_rejected():
    a = delta_seq(PLANE4, Z4.tf_zero())
    b = delta_seq(full_plane(Z4, 1), Z4.tf_zero())
    flipped = delta_seq(PLANE4, Z4.tf_zero(), True)
    for bad in (b, flipped):
        with pytest.raises(ValueError):
            twisted_convolve(a, bad)
        with pytest.raises(ValueError):
            l2_localization_inner(a, bad)
