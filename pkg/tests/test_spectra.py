import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qlorentz import spectra
from qlorentz.spectra import (
    BoostLabel,
    ComplexRootsError,
    DomainError,
    Params,
    boost_event,
    causality_check,
    causality_check_sq,
    gamma_l,
    interval_roots,
    lifetime_correction,
    lifetime_report,
    lightcone_ladder_consistent,
    lightcone_roots,
    lightcone_spectrum,
    positivity_a,
    positivity_b,
    relabel_report,
    spectrum,
    spectrum_table,
    stable_state_check,
    termination_check,
    x3_value,
)
from qlorentz.coordalg import ladder_eigenvalue

from strategies import positive_q

F = Fraction
HALF = F(1, 2)
L_VALUES = [F(k, 2) for k in range(5)]
half_integers = st.integers(0, 8).map(lambda k: F(k, 2))
rational_q = st.fractions(min_value=F(1, 5), max_value=5, max_denominator=9).filter(lambda x: x != 1)


def test_gamma_examples():
    assert gamma_l(0, F(3, 2)) == 1
    assert gamma_l(HALF, 2) == F(17, 10)
    assert all(gamma_l(F(k, 2), 1) == 1 for k in range(21))


@given(half_integers, rational_q)
def test_gamma_is_at_least_one_and_symmetric_in_q(l, q0):
    g = gamma_l(l, q0)
    assert g >= 1
    assert g == gamma_l(l, 1 / q0)


def test_boost_label_validation():
    assert [b.m for b in BoostLabel.all_for(1)] == [-1, 0, 1]
    for l, m in [(HALF, 0), (1, 2), (-1, 0), (F(1, 3), F(1, 3))]:
        with pytest.raises(DomainError):
            BoostLabel(l, m)


def test_params_validation():
    with pytest.raises(DomainError):
        Params(0)
    with pytest.raises(DomainError):
        Params(2, t=-1)
    with pytest.raises(DomainError):
        Params(2, mass=0)


def test_rest_row():
    (row,) = spectrum_table(0, Params(F(3, 2)))
    assert (row.x3, row.v3, row.gamma, row.vsq) == (0, 0, 1, 0)


def test_spectrum_entry_example():
    rows = spectrum_table(HALF, Params(2, 1))
    assert [r.m for r in rows] == [-HALF, HALF]
    assert rows[1].x3 == F(3, 34)
    assert float(rows[1].x3) == pytest.approx(0.0882353, rel=1e-6)


def test_row_count():
    assert len(spectrum(1, Params(2))) == 6
    assert len(spectrum(2, Params(2))) == 1 + 2 + 3 + 4 + 5


@given(half_integers, rational_q, st.fractions(min_value=F(1, 3), max_value=3, max_denominator=5))
def test_mass_shell(l, q0, mass):
    for row in spectrum_table(l, Params(q0, 1, mass=mass)):
        assert row.vsq == 1 - 1 / row.gamma**2
        assert row.E**2 - (mass * row.gamma) ** 2 * row.vsq == mass**2
        assert row.p3 == mass * row.v3 * row.gamma


def test_roots_structure():
    q0 = F(3, 2)
    r = interval_roots(1, F(17, 10), q0)
    assert r.xb_plus == -r.xa_plus / q0**2 and r.xb_minus == -r.xa_minus / q0**2
    assert interval_roots(1, 1, q0).xa_plus == q0 - 1 / q0
    with pytest.raises(ComplexRootsError):
        interval_roots(1, F(1, 2), 2)


def test_lightcone_roots():
    q0 = F(2)
    r = lightcone_roots(1, q0)
    assert (r.xa_minus, r.xa_plus, r.xb_plus, r.xb_minus) == (-1 / q0, q0, -1 / q0, q0**-3)


def test_positivity_vanishes_at_roots():
    q0, g = F(2), gamma_l(1, F(2))
    r = termination_check(1, q0).roots
    assert positivity_a(r.xa_plus, 1, g, q0) == 0
    assert positivity_b(r.xb_plus, 1, g, q0) == 0


def test_causality_examples():
    assert not causality_check(0.99, 2)
    assert causality_check(1, 2)
    assert causality_check(1, F(4, 5))


@pytest.mark.parametrize("q0", [0.5, 0.9, 1.1, 2.0])
def test_causality_grid(q0):
    Q = q0 + 1 / q0
    lo = 4 / Q**2
    for k in range(40):
        g2 = lo + (4 - lo) * k / 39
        assert causality_check_sq(g2, q0) == (g2 >= 1)


@pytest.mark.parametrize("l", L_VALUES)
def test_termination_lands_on_roots(q0, l):
    rep = termination_check(l, q0)
    assert rep.ok
    assert rep.raised == rep.roots.xa_plus and rep.lowered == rep.roots.xb_plus


def test_termination_spec_examples():
    assert termination_check(HALF, 2).raised == interval_roots(1, F(17, 10), 2).xa_plus
    assert termination_check(1, F(3, 2)).lands_on_b_plus


def test_principal_branch_labels_flip_below_one():
    assert termination_check(1, F(2)).principal_labels() == ("xa_plus", "xb_plus")
    assert termination_check(1, F(1, 2)).principal_labels() == ("xa_minus", "xb_minus")


@pytest.mark.parametrize("l", L_VALUES[1:])
def test_perturbed_gamma_misses(q0, l):
    rep = termination_check(l, q0, gamma=gamma_l(l, q0) * F(101, 100))
    assert not rep.lands_on_a_plus and not rep.lands_on_b_plus
    assert not rep.gamma_unique


@pytest.mark.parametrize("l", L_VALUES)
def test_spectrum_inside_interval(q0, l):
    g = gamma_l(l, q0)
    lo, hi = interval_roots(1, g, q0).interval()
    for row in spectrum_table(l, Params(q0)):
        assert lo <= row.x3 <= hi
        if abs(row.m) < l:
            assert lo < row.x3 < hi


@given(half_integers, rational_q, st.fractions(min_value=0, max_value=5, max_denominator=4))
def test_ladder_moves_along_the_spectrum(l, q0, t):
    for row in spectrum_table(l, Params(q0, t)):
        if row.m < l:
            assert ladder_eigenvalue("raise_n", 1, row.x3, t, q0) == x3_value(l, row.m + 1, q0, t)
        if row.m > -l:
            assert ladder_eigenvalue("lower_m", 1, row.x3, t, q0) == x3_value(l, row.m - 1, q0, t)


def test_classical_collapse():
    for k in range(21):
        for row in spectrum_table(F(k, 2), Params(1)):
            assert row.x3 == 0 and row.gamma == 1


def test_velocity_tends_to_one():
    vs = [spectrum_table(F(k, 2), Params(F(3, 2)))[0].vsq for k in range(30)]
    assert all(a < b for a, b in zip(vs, vs[1:]))
    assert 1 - vs[-1] < 1e-9


@pytest.mark.parametrize("L", range(6))
def test_relabelled_formula_agrees(L):
    assert all(r["equal"] for r in relabel_report(L, F(3, 2)))


def test_boost_event():
    ev = boost_event(Params(2, 1), BoostLabel(0, 0))
    assert (ev.t_prime, ev.x3_prime) == (1, 0)
    ev = boost_event(Params(2, 1, mass=1), BoostLabel(HALF, HALF))
    assert ev.t_prime == F(17, 10)
    assert ev.x3_prime == spectra.v3_value(HALF, HALF, 2) * ev.t_prime
    assert ev.E == F(17, 10)


def test_lifetime_examples():
    assert lifetime_correction(1, 0, 0.01) == 0
    assert lifetime_correction(1, 0.6, 0.01) == pytest.approx(0.005625)
    assert lifetime_correction(1, 0.6, 0.01, sign=-1) == pytest.approx(-0.005625)
    with pytest.raises(DomainError):
        lifetime_correction(1, 1.0, 0.01)
    with pytest.raises(DomainError):
        lifetime_correction(1, 0.5, -0.01)


@pytest.mark.parametrize("v", [0.3, 0.6, 0.9])
@pytest.mark.parametrize("sign", [1, -1])
def test_lifetime_second_order_residual(v, sign):
    rep = lifetime_report(1.0, v, 0.02, sign)
    assert rep.ratio == pytest.approx(4, abs=0.5)
    assert rep.derived_sign == 1


def test_lightcone_examples():
    q0 = F(1, 2)
    assert lightcone_spectrum(0, 1, q0) == q0 == lightcone_roots(1, q0).xa_plus
    q0 = F(2)
    assert lightcone_spectrum(0, 1, q0) == q0**-3 == lightcone_roots(1, q0).xb_minus
    with pytest.raises(DomainError):
        lightcone_spectrum(-1, 1, q0)


def test_stable_state(q0):
    rep = stable_state_check(3, q0)
    assert rep.ok and rep.x3 == -3 / q0 and rep.q2v3sq == 1


@pytest.mark.parametrize("n", range(5))
def test_lightcone_chain(q0, n):
    assert lightcone_ladder_consistent(n, 1, q0)


@given(positive_q, half_integers)
def test_float_and_exact_agree(q0, l):
    if isinstance(q0, Fraction):
        exact = gamma_l(l, q0)
        assert float(exact) == pytest.approx(gamma_l(l, float(q0)), rel=1e-12)
    rows = spectrum_table(l, Params(q0))
    roots = interval_roots(1, rows[0].gamma, q0)
    assert all(roots.contains(r.x3) for r in rows)


def test_sqrt_is_exact_for_squares():
    assert spectra.sqrt(F(9, 4)) == F(3, 2)
    assert isinstance(spectra.sqrt(F(2)), float)
