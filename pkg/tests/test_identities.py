from fractions import Fraction

import pytest

from qlorentz import identities
from qlorentz.identities import CATALOG, IdentityId, run_all, run_identity
from qlorentz.scalars import ONE

F = Fraction


def test_catalog_has_23_distinct_ids():
    assert len(IdentityId) == 23
    assert set(CATALOG) == set(IdentityId)


@pytest.mark.parametrize("q0", [F(3, 2), F(1, 2), F(4, 5), F(2)])
@pytest.mark.parametrize("ident", list(IdentityId), ids=lambda i: i.value)
def test_identity_passes(ident, q0):
    res = run_identity(ident, q0)
    assert res.ok, res.residual


@pytest.mark.parametrize("q0", [0.7, 1.3])
def test_float_q(q0):
    assert all(r.ok for r in run_all(q0))


def test_result_lines():
    res = run_all(F(3, 2), only=[IdentityId.CASIMIR_CENTRAL, IdentityId.SO3_ORTHO])
    assert [r.line() for r in res] == ["CASIMIR_CENTRAL PASS", "SO3_ORTHO PASS"]
    assert all(r.seconds >= 0 for r in res)


def test_residual_collector_reports_nonzero():
    r = identities._Residuals()
    r.zero("ok", 0)
    assert r.result()[0]
    r.zero("bad", ONE)
    ok, text = r.result()
    assert not ok and "bad" in text


def test_failing_check_is_reported(monkeypatch):
    def broken(r, q0):
        r.true("forced", False)

    monkeypatch.setitem(CATALOG, IdentityId.METRIC_SYM, broken)
    res = run_identity(IdentityId.METRIC_SYM)
    assert not res.ok
    assert res.line().startswith("METRIC_SYM FAIL")


def test_check_raising_is_a_failure(monkeypatch):
    def broken(r, q0):
        raise ZeroDivisionError("boom")

    monkeypatch.setitem(CATALOG, IdentityId.TERMINATION, broken)
    res = run_identity(IdentityId.TERMINATION)
    assert not res.ok and "boom" in res.residual
