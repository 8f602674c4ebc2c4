"""Acceptance criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines, or
``python tests/test_acceptance.py`` for the bare report.
"""

import subprocess
import sys
import time
from fractions import Fraction as F
from pathlib import Path

import pytest

from qlorentz import coordalg, so3q, spectra
from qlorentz.cli import run
from qlorentz.identities import IdentityId, closed_form_metric, run_all
from qlorentz.matrix import Matrix
from qlorentz.scalars import ONE, ZERO, classical_limit
from qlorentz.tensors import quantum_metric

QS = [F(1, 2), F(4, 5), F(3, 2), F(2)]
LS = [F(k, 2) for k in range(5)]
ROOT = Path(__file__).resolve().parent.parent


def _ids(*names):
    res = run_all(F(3, 2), [IdentityId(n) for n in names])
    bad = [r.line() for r in res if not r.ok]
    return not bad, "; ".join(bad)


def metric_reproduction():
    start = time.perf_counter()
    G, Gl = quantum_metric(1)
    up, lo = closed_form_metric()
    cells = [(i, j) for i in range(4) for j in range(4)]
    ok = all(G[c] == up.get(c, ZERO) and Gl[c] == lo.get(c, ZERO) for c in cells)
    Gm, Glm = G.to_matrix((0,), (1,)), Gl.to_matrix((0,), (1,))
    ok &= Gm @ Glm == Matrix.identity(4)
    ok &= Matrix.from_function(4, 4, lambda i, j: classical_limit(G[i, j])) == Matrix.from_function(4, 4, lambda i, j: (-ONE if i == 0 else ONE) if i == j else ZERO)
    dt = time.perf_counter() - start
    return ok and dt < 1, f"{dt:.2f}s"


def rmatrix_suite():
    start = time.perf_counter()
    ok, detail = _ids("HECKE_SPINOR", "RPM_INVERSE", "YBE_SPINOR", "RROWS_EQ7", "HECKE_CUBIC", "YBE_VECTOR", "METRIC_SYM")
    dt = time.perf_counter() - start
    return ok and dt < 30, detail or f"{dt:.2f}s"


def coordinate_algebra():
    return _ids("COORD_MATCH", "CASIMIR_CENTRAL", "ZZBAR_39A", "ZZBAR_39B", "CONFLUENCE_D3")


def quantization():
    bad = []
    for q0 in QS:
        for l in LS:
            g = spectra.gamma_l(l, q0)
            if g != (q0 ** (2 * l + 1) + q0 ** -(2 * l + 1)) / (q0 + 1 / q0):
                bad.append(f"gamma l={l} q={q0}")
            roots = spectra.interval_roots(1, g, q0)
            for m in spectra.BoostLabel.all_for(l):
                x = spectra.x3_value(l, m.m, q0)
                if not roots.contains(x):
                    bad.append(f"interval l={l} m={m.m} q={q0}")
                if m.m < l and coordalg.ladder_eigenvalue("raise_n", 1, x, 1, q0) != spectra.x3_value(l, m.m + 1, q0):
                    bad.append(f"raise l={l} m={m.m} q={q0}")
                if m.m > -l and coordalg.ladder_eigenvalue("lower_m", 1, x, 1, q0) != spectra.x3_value(l, m.m - 1, q0):
                    bad.append(f"lower l={l} m={m.m} q={q0}")
            if not spectra.termination_check(l, q0).ok:
                bad.append(f"termination l={l} q={q0}")
    return not bad, "; ".join(bad)


def causality():
    bad = []
    qs = [F(k, 8) for k in range(2, 42, 2)]
    gammas = [F(k, 10) for k in range(5, 25)]
    assert len(qs) == len(gammas) == 20 and F(1) in gammas
    for q0 in qs:
        for g in gammas:
            try:
                nonempty = spectra.interval_roots(1, g, q0).nonempty()
            except spectra.ComplexRootsError:
                nonempty = False
            if nonempty != (g * g >= 1) or spectra.causality_check(g, q0) != nonempty:
                bad.append(f"q={q0} gamma={g}")
        lo, hi = spectra.interval_roots(1, 1, q0).interval()
        if lo != hi:
            bad.append(f"boundary q={q0}")
    return not bad, "; ".join(bad)


def degeneration():
    ok = all(spectra.gamma_l(F(k, 2), 1) == 1 for k in range(21))
    ok &= all(r.x3 == 0 for k in range(21) for r in spectra.spectrum_table(F(k, 2), spectra.Params(1)))
    for q0 in QS:
        roots = spectra.lightcone_roots(1, q0)
        n0 = spectra.lightcone_spectrum(0, 1, q0)
        ok &= n0 == (roots.xa_plus if q0 < 1 else roots.xb_minus)
        ok &= spectra.stable_state_check(1, q0).ok
    return ok, ""


def semiclassical():
    ratios = []
    for v in (0.3, 0.6, 0.9):
        for sign in (1, -1):
            ratios.append(spectra.lifetime_report(1.0, v, 0.02, sign).ratio)
    zero = spectra.lifetime_correction(1.0, 0.0, 0.02) == 0 and spectra.exact_dilatation(1.0, 0.0, 1.02) == 1.0
    ok = zero and all(abs(r - 4) <= 0.5 for r in ratios)
    return ok, "ratios " + ", ".join(f"{r:.2f}" for r in ratios)


def so3():
    rep = so3q.so3_report()
    ok = rep.ok and so3q.counit_d1() == Matrix.identity(3)
    for q0 in QS:
        for t, tau2 in ((F(1), F(0)), (F(3), F(0)), (F(2), F(5))):
            p = so3q.sphere_parameters(t, tau2, q0)
            ok &= p.lam == (q0 - 1 / q0) * t
            rho = t * t / q0**2 - tau2 / spectra.sqrt(q0)
            ok &= spectra._close(p.rho, rho)
    ok &= so3q.verify_sphere()
    return ok, "; ".join(rep.failures())


def cli_and_suite():
    import io

    out = io.StringIO()
    code = run(["identities", "--all", "--exact", "--q", "3/2"], out, io.StringIO())
    lines = out.getvalue().splitlines()
    ok = code == 0 and len(lines) == 23 and all(l.endswith("PASS") for l in lines)
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", "--ignore", str(ROOT / "tests" / "test_acceptance.py"), str(ROOT / "tests")],
        capture_output=True,
        text=True,
        cwd=ROOT,
    )
    dt = time.perf_counter() - start
    return ok and dt < 60, f"identities exit {code}, suite {dt:.1f}s (suite exit {proc.returncode})"


CRITERIA = {
    1: ("metric reproduction", metric_reproduction),
    2: ("R-matrix suite", rmatrix_suite),
    3: ("coordinate algebra", coordinate_algebra),
    4: ("quantization", quantization),
    5: ("causality", causality),
    6: ("degeneration", degeneration),
    7: ("semiclassical order", semiclassical),
    8: ("SO_q(3) and sphere", so3),
    9: ("CLI and suite runtime", cli_and_suite),
}


def report_line(n):
    name, fn = CRITERIA[n]
    ok, detail = fn()
    return ok, f"criterion {n} {name}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else "")


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    ok, line = report_line(n)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [report_line(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
