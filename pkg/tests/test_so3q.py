from fractions import Fraction

import pytest

from qlorentz import so3q
from qlorentz.matrix import Matrix
from qlorentz.ncpoly import NCPoly, RewriteSystem
from qlorentz.scalars import ONE, Q, q_pow
from qlorentz.spectra import DomainError

F = Fraction
q = q_pow(1)
qi = q_pow(-1)


def idx(k):
    return k + 1


def test_closed_form_entries():
    d = so3q.build_d1()
    assert d[idx(0)][idx(0)] == NCPoly.const(ONE) - (ONE + q * q) * (so3q.GS * so3q.G)
    assert d[idx(-1)][idx(1)] == -q * (so3q.G * so3q.G)
    assert d[idx(1)][idx(1)] == so3q.A * so3q.A


def test_counit_is_identity():
    assert so3q.counit_d1() == Matrix.identity(3)


def test_fundamental_is_unitary():
    assert all(r.is_zero() for r in so3q.unitarity_residuals())


def test_other_convention_breaks_unitarity(monkeypatch):
    system = RewriteSystem(so3q.suq2_rules(nu=qi))
    monkeypatch.setattr(so3q, "reduce", system.normal_form)
    assert not all(r.is_zero() for r in so3q.unitarity_residuals())


def test_suq2_relations_are_confluent():
    assert so3q.suq2_system().confluence(3).ok


def test_star_is_involutive_antimultiplicative():
    p = q * (so3q.A * so3q.G) + so3q.GS
    r = so3q.AS * so3q.G
    assert so3q.star(so3q.star(p)) == p
    assert so3q.star(p * r) == so3q.star(r) * so3q.star(p)


@pytest.mark.parametrize("family", ["upper", "lower"])
def test_orthogonality(family):
    upper, lower = so3q.orthogonality()
    res = upper if family == "upper" else lower
    assert len(res) == 9
    assert all(v.is_zero() for v in res.values()), {k: str(v) for k, v in res.items() if not v.is_zero()}


def test_orthogonality_detects_a_wrong_entry():
    d = so3q.build_d1()
    d[0][0] = q * d[0][0]
    upper, _ = so3q.orthogonality(d)
    assert not all(v.is_zero() for v in upper.values())


def test_restricted_metric_is_inverse_pair():
    g, gl = so3q.restricted_metric()
    assert g * gl == Matrix.identity(3)
    assert g[0, 2] == q_pow(F(3, 2)) / Q


def test_time_invariance():
    res = so3q.time_invariance_residuals()
    assert set(res) == {(0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (2, 0), (3, 0)}
    assert all(v.is_zero() for v in res.values())


def test_spatial_block_matches_closed_form_d1():
    d, dd = so3q.build_d1(), so3q.derived_d1()
    for i in range(3):
        for j in range(3):
            assert so3q.reduce(d[i][j] - dd[i][j]).is_zero(), (i, j)


def test_report_all_pass():
    rep = so3q.so3_report()
    assert rep.ok, rep.failures()
    lines = rep.lines()
    assert sum(l.startswith("relation ") for l in lines) == 7
    assert all(l.endswith("PASS") for l in lines if not l.startswith("relation "))


@pytest.mark.parametrize("i", range(3))
@pytest.mark.parametrize("j", range(3))
def test_corepresentation(i, j):
    assert so3q.corepresentation_residual(i, j).is_zero()


def test_coproduct_is_multiplicative():
    a, b = so3q.A, so3q.GS
    lhs = so3q.coproduct(a * b)
    rhs = so3q._tensor_system().normal_form(so3q.coproduct(a) * so3q.coproduct(b))
    assert lhs == rhs


def test_sphere_parameters_examples():
    p = so3q.sphere_parameters(1, 0, F(2))
    assert p.lam == F(3, 2) and p.rho == F(1, 4)
    p = so3q.sphere_parameters(2, 0, F(3, 2))
    assert p.rho == 4 / F(9, 4)
    p = so3q.sphere_parameters(1, F(3), F(4))
    assert p.rho == F(1, 16) - F(3, 2)


def test_sphere_parameters_classical():
    p = so3q.sphere_parameters(F(5), F(2), 1)
    assert p.lam == 0 and p.rho == 25 - 2


def test_sphere_parameters_domain():
    with pytest.raises(DomainError):
        so3q.sphere_parameters(-1, 0, 2)
    with pytest.raises(DomainError):
        so3q.sphere_parameters(1, 0, 0)


def test_sphere_closure():
    checks = so3q.sphere_closure()
    assert [c.name for c in checks] == ["X3_Z", "X3_Zb", "Z_Zb", "Zb_Z"]
    assert all(c.ok for c in checks), [str(c.difference) for c in checks]


def test_sphere_closure_is_sensitive():
    lam, rho = so3q.sphere_parameters_symbolic()
    from qlorentz.coordalg import IdentityCheck, X3, Z, ZB

    bad = IdentityCheck("ZbZ", ZB * Z, rho + lam * X3 - q * q * (X3 * X3))
    assert not bad.ok
