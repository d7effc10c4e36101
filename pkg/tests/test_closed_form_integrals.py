import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from zetaint import closed_form_integrals as cf
from zetaint import special_functions as sf
from zetaint.errors import DidNotConverge, DomainError, NearPoleError, NearSingularError, PoleError
from zetaint.quadrature import IntegrandKind as K
from zetaint.quadrature import IntegrandSpec, quad_eval
from zetaint.suites import richardson_check

from .oracles import FROZEN, close, rel_err


def quad(kind, *params, tol=1e-12):
    return quad_eval(IntegrandSpec(kind, params), tol).value


def non_integer(lo, hi):
    return st.floats(min_value=lo, max_value=hi, allow_nan=False).filter(lambda v: abs(v - round(v)) > 0.02)


# --- I(a, b) series --------------------------------------------------------


@pytest.mark.parametrize(
    "key,a,b",
    [("I(2.5,3.5)", 2.5, 3.5), ("I(1.5+2i,1.5-2i)", 1.5 + 2j, 1.5 - 2j), ("I(1.3+0.5i,2.4)", 1.3 + 0.5j, 2.4)],
)
def test_integral_I_frozen(key, a, b):
    assert close(cf.integral_I(a, b).value, FROZEN[key], 1e-11)


def test_integral_I_symmetric_example():
    assert cf.integral_I(2.5, 3.7).value == pytest.approx(cf.integral_I(3.7, 2.5).value, rel=1e-14)


def test_integral_I_diagonal_vs_quadrature():
    assert close(cf.integral_I(2.5, 2.5).value, quad(K.II, 2.5, 2.5, tol=1e-11), 1e-10)


def test_integral_I_hermitian_pair_is_nonnegative():
    v = cf.integral_I(1.5 + 1j, 1.5 - 1j).value
    assert abs(v.imag) <= 1e-10 * abs(v)
    assert v.real >= 0


@settings(max_examples=25)
@given(non_integer(1.1, 5), non_integer(1.1, 5), st.floats(-2, 2), st.floats(-2, 2))
def test_integral_I_matches_quadrature(ar, br, ai, bi):
    a, b = complex(ar, ai), complex(br, bi)
    assert close(cf.integral_I(a, b).value, quad(K.II, a, b), 1e-8)


@settings(max_examples=50)
@given(non_integer(1.1, 6), non_integer(1.1, 6), st.floats(-3, 3), st.floats(-3, 3))
def test_integral_I_symmetric(ar, br, ai, bi):
    a, b = complex(ar, ai), complex(br, bi)
    ab, ba = cf.integral_I(a, b).value, cf.integral_I(b, a).value
    assert abs(ab - ba) <= 1e-12 * abs(ab)


def test_integral_I_singular_set():
    for a, b in ((2.0, 2.0), (2.0, 3.5), (3.0 + 1e-8, 2.5), (0.5, 0.5)):
        with pytest.raises(NearSingularError):
            cf.integral_I(a, b)
    with pytest.raises(PoleError):
        cf.integral_I(1.0, 2.5)


def test_integral_I_near_singular_hint():
    with pytest.raises(NearSingularError, match="integral_I_integer"):
        cf.integral_I(3, 3)


def test_integral_I_error_estimate_is_honest():
    v = cf.integral_I(2.5, 3.5)
    assert abs(v.value - FROZEN["I(2.5,3.5)"]) <= max(v.abs_err, 1e-15) * 100
    assert v.terms_used > 0 and v.method


# --- integer-order I -------------------------------------------------------


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_integral_I_integer_frozen(m):
    v = cf.integral_I_integer(m)
    assert v.value.imag == 0
    assert close(v.value, FROZEN[f"I({m},{m})"], 1e-11)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_integral_I_integer_vs_quadrature(m):
    assert close(cf.integral_I_integer(m).value, quad(K.II, m, m), 1e-8)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_integral_I_integer_richardson(m):
    ref = cf.integral_I_integer(m).value
    coarse, fine, extrap, order = richardson_check(cf.integral_I, m, ref)
    assert abs(fine - ref) < abs(coarse - ref)
    assert 1.6 < order < 2.4
    assert close(extrap, ref, 1e-8)


def test_integral_I_integer_symmetric_limit_example():
    ref = cf.integral_I_integer(2).value
    h = 1e-3
    avg = cf.symmetric_limit(cf.integral_I, (2, 2), h)
    assert abs(avg.value - ref) < 10 * h**2


def test_integer_domain():
    for f in (cf.integral_I_integer, cf.integral_J_integer, cf.appendix_sum_S):
        with pytest.raises(DomainError):
            f(1)
        with pytest.raises(DomainError):
            f(2.5)


# --- J(a, b) series --------------------------------------------------------


@pytest.mark.parametrize("key,a,b", [("J(2.5,3.5)", 2.5, 3.5), ("J(0.5,0.2)", 0.5, 0.2), ("J(1.7,4.5)", 1.7, 4.5)])
def test_integral_J_frozen(key, a, b):
    assert close(cf.integral_J(a, b).value, FROZEN[key], 1e-11)


def test_integral_J_strip_example():
    assert close(cf.integral_J(0.5, 0.5).value, quad(K.JJ, 0.5, 0.5), 1e-10)


@settings(max_examples=25)
@given(non_integer(0.05, 0.95), non_integer(0.05, 0.95), st.floats(-2, 2), st.floats(-2, 2))
def test_integral_J_strip_matches_quadrature(ar, br, ai, bi):
    a, b = complex(ar, ai), complex(br, bi)
    assert close(cf.integral_J(a, b).value, quad(K.JJ, a, b), 1e-8)


@settings(max_examples=25)
@given(non_integer(1.1, 5), non_integer(1.1, 5), st.floats(-2, 2), st.floats(-2, 2))
def test_integral_J_continuation_matches_quadrature(ar, br, ai, bi):
    a, b = complex(ar, ai), complex(br, bi)
    assume(abs(a + b - 2) > 0.05)
    assert close(cf.integral_J(a, b).value, quad(K.JJ, a, b), 1e-8)


@settings(max_examples=50)
@given(non_integer(0.05, 6), non_integer(0.05, 6), st.floats(-3, 3), st.floats(-3, 3))
def test_integral_J_symmetric(ar, br, ai, bi):
    a, b = complex(ar, ai), complex(br, bi)
    assume(abs(a + b - 2) > 0.05)
    ab, ba = cf.integral_J(a, b).value, cf.integral_J(b, a).value
    assert abs(ab - ba) <= 1e-12 * abs(ab)


def test_integral_J_singular_set():
    for a, b in ((2.0, 2.0), (4.0, 0.5), (0.7, 1.3)):
        with pytest.raises(NearSingularError):
            cf.integral_J(a, b)


# --- integer-order J -------------------------------------------------------


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_integral_J_integer_frozen(m):
    v = cf.integral_J_integer(m)
    assert v.value.imag == 0
    assert close(v.value, FROZEN[f"J({m},{m})"], 1e-11)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_integral_J_integer_vs_quadrature(m):
    assert close(cf.integral_J_integer(m).value, quad(K.JJ, m, m), 1e-8)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_integral_J_integer_richardson(m):
    ref = cf.integral_J_integer(m).value
    coarse, fine, extrap, order = richardson_check(cf.integral_J, m, ref)
    assert abs(fine - ref) < abs(coarse - ref)
    assert 1.6 < order < 2.4
    assert close(extrap, ref, 1e-8)


def test_integral_J_integer_symmetric_limit_example():
    avg = cf.symmetric_limit(cf.integral_J, (2, 2), 1e-3)
    assert abs(avg.value - cf.integral_J_integer(2).value) < 1e-5


# --- forced limits ---------------------------------------------------------


def test_force_limit_diagonal():
    v = cf.integral_I(2, 2, force_limit=True)
    assert "forced-limit" in v.method
    assert abs(v.value - FROZEN["I(2,2)"]) <= v.abs_err
    assert v.abs_err < 1e-4


def test_force_limit_mixed_integer():
    v = cf.integral_I(3, 2.5, force_limit=True)
    assert close(v.value, quad(K.II, 3, 2.5), 1e-6)
    assert abs(v.value - quad(K.II, 3, 2.5)) <= v.abs_err
    w = cf.integral_J(2, 3.5, force_limit=True)
    assert close(w.value, quad(K.JJ, 2, 3.5), 1e-6)


def test_force_limit_off_the_singular_set_is_plain():
    assert cf.integral_I(2.5, 3.5, force_limit=True).value == cf.integral_I(2.5, 3.5).value


# --- companions ------------------------------------------------------------


def test_moment_integral():
    assert cf.moment_integral(3) == 0.5
    assert cf.moment_integral(2) == 1
    assert close(cf.moment_integral(2.5), quad(K.POWER_ZETA1, 0, 2.5), 1e-11)
    with pytest.raises(DomainError):
        cf.moment_integral(1)
    with pytest.raises(DomainError):
        cf.moment_integral(0.5 + 3j)


@pytest.mark.parametrize("a,b", [(0.5, 2), (0.9, 1.5), (0.3 + 0.2j, 2.5 - 1j), (-1.5, 3.3)])
def test_andersson_vs_quadrature(a, b):
    assert close(cf.andersson_integral(a, b).value, quad(K.POWER_ZETA1, a, b), 1e-9)


def test_andersson_degenerates_to_moment():
    assert abs(cf.andersson_integral(0, 3).value - 0.5) < 1e-14


def test_andersson_domain():
    with pytest.raises(DomainError):
        cf.andersson_integral(1.2, 2)
    with pytest.raises(DomainError):
        cf.andersson_integral(0.5, -2)


@pytest.mark.parametrize("a,b", [(0.5, 0.5), (0.3, 0.7), (0.2 + 0.5j, 0.6)])
def test_complementary_power_vs_quadrature(a, b):
    assert close(cf.complementary_power_integral(a, b).value, quad(K.COMPLEMENTARY_POWER, a, b), 1e-9)


def test_complementary_power_domain():
    with pytest.raises(DomainError):
        cf.complementary_power_integral(1.5, 0.5)


@pytest.mark.parametrize("a,b", [(0.4, 0.4), (0.3, 0.5), (-0.5, 0.2), (0.1 + 1j, -0.4)])
def test_mikolas_vs_quadrature(a, b):
    assert close(cf.mikolas_integral(a, b), quad(K.MIKOLAS, a, b), 1e-7)


@given(st.floats(-2, 0.9), st.floats(-2, 0.9))
def test_mikolas_symmetric(a, b):
    assume(a + b < 0.95)
    assume(abs(a + b - 1 - round(a + b - 1)) > 1e-3)
    ab, ba = cf.mikolas_integral(a, b), cf.mikolas_integral(b, a)
    assert abs(ab - ba) <= 1e-12 * abs(ab)


def test_mikolas_near_pole():
    with pytest.raises(NearPoleError):
        cf.mikolas_integral(0.3, -0.3)
    with pytest.raises(DomainError):
        cf.mikolas_integral(0.7, 0.6)


def test_complementary_hurwitz():
    assert abs(cf.complementary_hurwitz_integral(-1, -1) - 1 / 720) < 1e-16
    for a, b in ((0.4, 0.3), (-0.7, 0.5 + 0.5j)):
        assert close(cf.complementary_hurwitz_integral(a, b), quad(K.HURWITZ_PRODUCT, a, b), 1e-7)


@given(st.floats(-3, 0.95), st.floats(-3, 0.95))
def test_complementary_hurwitz_symmetric(a, b):
    assume(abs(1 - a - round(1 - a)) > 1e-3 or 1 - a > 0)
    ab, ba = cf.complementary_hurwitz_integral(a, b), cf.complementary_hurwitz_integral(b, a)
    assert abs(ab - ba) <= 1e-12 * max(abs(ab), 1e-300)


# --- appendix --------------------------------------------------------------


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_appendix_sum(m):
    want = math.gamma(2 * m - 1) * sf.riemann_zeta(2 * m - 1).value.real
    assert rel_err(cf.appendix_sum_S(m).value, want) <= 1e-9


def test_appendix_sum_examples():
    assert rel_err(cf.appendix_sum_S(2).value, 2 * sf.riemann_zeta(3).value) < 1e-9
    assert rel_err(cf.appendix_sum_S(3).value, 24 * sf.riemann_zeta(5).value) < 1e-9


def test_upsilon_term():
    z3 = sf.zeta_minus_one(3).value
    want = (sf.digamma(3) + sf.digamma(1)) * z3 + sf.riemann_zeta_derivative(3).value
    assert abs(cf.upsilon_term(1, 2) - want) < 1e-15
    z5 = sf.zeta_minus_one(5).value
    want = (sf.digamma(5) + sf.digamma(1)) * z5 + sf.riemann_zeta_derivative(5).value
    assert abs(cf.upsilon_term(2, 3) - want) < 1e-15
    assert cf.upsilon_term(7, 4).imag == 0
    with pytest.raises(DomainError):
        cf.upsilon_term(0, 2)


# --- series machinery ------------------------------------------------------


def test_series_policy_validation():
    with pytest.raises(DomainError):
        cf.SeriesPolicy(tol=0)
    with pytest.raises(DomainError):
        cf.SeriesPolicy(min_n=10, max_n=5)


def test_series_policy_cap_raises_with_partial_result():
    with pytest.raises(DidNotConverge) as info:
        cf.integral_I(2.5, 3.5, cf.SeriesPolicy(max_n=5, min_n=1))
    assert info.value.result is not None


def test_series_stops_early_with_loose_tolerance():
    tight = cf.integral_I(2.5, 3.5)
    loose = cf.integral_I(2.5, 3.5, cf.SeriesPolicy(tol=1e-8))
    assert loose.terms_used < tight.terms_used
    assert abs(loose.value - tight.value) < 1e-7
