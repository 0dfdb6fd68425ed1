import json

import crpoisson as crp


def test_kappa_values():
    assert crp.kappa(1, 1, 2, 1) == 2
    assert crp.kappa(1, 1, 2, -1) == 0
    assert crp.kappa(2, 1, 3, 1) == 6


def test_wedge_antisymmetry_on_one_forms():
    m = crp.Model(1)
    z, zbar = m.zstar(), m.zbarstar()
    assert crp.wedge(z, z).is_zero()
    assert crp.wedge(z, zbar) == -crp.wedge(zbar, z)
    assert not crp.wedge(z, zbar).is_zero()


def test_basic_forms_and_operators():
    m = crp.Model(1)
    # d_P I* = 2 w02
    assert m.d_p(m.istar()) == crp.scale(m.w02(), "2")
    assert m.del_k(m.zstar()).is_zero()
    assert crp.conjugate(m.w11()) == m.w11bar()
    assert m.star_k(m.w20()) == crp.scale(crp.wedge(m.zstar(), m.zbarstar()), "0", "1")


def test_kernels_are_invariant_and_harmonic_surrogates_hold():
    m = crp.Model(2)
    low = m.kernel_low(1, 0)
    assert not low.is_zero()
    assert m.is_invariant(low)
    assert m.p_codiff(low).is_zero()
    assert m.delta_k(low).is_zero()
    high = m.kernel_high(2, 1, alpha_re="2", beta_re="0", beta_im="3")
    assert m.is_invariant(high)
    assert m.p_codiff(m.d_p(high)).is_zero()
    real = m.kernel_real(2)
    assert crp.conjugate(real) == real


def test_invariant_dimensions():
    m = crp.Model(1)
    assert m.invariant_dimension(0, 1) == 1
    assert m.invariant_dimension(1, 0) == 2


def test_run_suite_deterministic_and_clean():
    a = crp.run_suite(1, "section3.4", 0)
    b = crp.run_suite(1, "section3.4", 0)
    assert a == b
    report = json.loads(a)
    assert report["summary"]["fail"] == 0
    assert report["summary"]["discrepancy"] == 0
    assert report["summary"]["pass"] == len(report["checks"])
