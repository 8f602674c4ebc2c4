"""The identity catalog: every algebraic claim the package certifies, by id.

Algebraic checks are symbolic in q and do not depend on ``q0``; the spectral
ones (TERMINATION, CAUSALITY_EQUIV, LIGHTCONE_STABLE, SPHERE_CLOSE) are
evaluated at ``q0``, exactly when it is a Fraction.
"""

from __future__ import annotations

import enum
import itertools as it
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import coordalg, functionals, so3q, spectra
from .matrix import Matrix
from .ncpoly import NCPoly
from .scalars import I, ONE, Q, ZERO, Scalar, classical_limit, q_pow
from .tensors import DL, DU, SL, SU, completeness, epsilon, metric_inverse_trace, metric_trace_alt, quantum_metric
from .tensors import sigma_bar_trace, sigma_full_trace, spinor_R_matrix

SIGNS = (1, -1)
R2, R4 = range(2), range(4)


class IdentityId(enum.Enum):
    EPSILON_NORM = "EPSILON_NORM"
    HECKE_SPINOR = "HECKE_SPINOR"
    RPM_INVERSE = "RPM_INVERSE"
    YBE_SPINOR = "YBE_SPINOR"
    COMPLETENESS = "COMPLETENESS"
    METRIC_VALUES = "METRIC_VALUES"
    METRIC_INVERSE = "METRIC_INVERSE"
    METRIC_TRACE_EQUIV = "METRIC_TRACE_EQUIV"
    RROWS_EQ7 = "RROWS_EQ7"
    HECKE_CUBIC = "HECKE_CUBIC"
    YBE_VECTOR = "YBE_VECTOR"
    METRIC_SYM = "METRIC_SYM"
    COORD_MATCH = "COORD_MATCH"
    CASIMIR_CENTRAL = "CASIMIR_CENTRAL"
    ZZBAR_39A = "ZZBAR_39A"
    ZZBAR_39B = "ZZBAR_39B"
    LADDER_35_36 = "LADDER_35_36"
    CONFLUENCE_D3 = "CONFLUENCE_D3"
    TERMINATION = "TERMINATION"
    CAUSALITY_EQUIV = "CAUSALITY_EQUIV"
    LIGHTCONE_STABLE = "LIGHTCONE_STABLE"
    SO3_ORTHO = "SO3_ORTHO"
    SPHERE_CLOSE = "SPHERE_CLOSE"


@dataclass
class IdentityResult:
    id: IdentityId
    ok: bool
    residual: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        s = f"{self.id.value} {'PASS' if self.ok else 'FAIL'}"
        return f"{s} {self.residual}" if self.residual and not self.ok else s


class _Residuals:
    """Collects named residuals; the first nonzero one becomes the report text."""

    def __init__(self):
        self.bad: list[str] = []

    def zero(self, name: str, value) -> None:
        if isinstance(value, Matrix):
            if not value.is_zero():
                i, j, v = next(iter(value.entries()))
                self.bad.append(f"{name}[{i},{j}]={v}")
        elif isinstance(value, NCPoly):
            if not value.is_zero():
                self.bad.append(f"{name}: {value}")
        elif value:
            self.bad.append(f"{name}: {value}")

    def true(self, name: str, cond: bool) -> None:
        if not cond:
            self.bad.append(name)

    def result(self) -> tuple[bool, str]:
        return (not self.bad), "; ".join(self.bad[:3])


def _delta(a, b) -> Scalar:
    return ONE if a == b else ZERO


def _tensor_diff(t, fn) -> Matrix:
    """Nonzero entries of ``t - fn(index)`` packed into a 1 x n matrix."""
    vals = [t[idx] - fn(*idx) for idx in it.product(*(range(n) for n in t.data.shape))]
    return Matrix.from_function(1, len(vals), lambda _, j: vals[j])


# -- spinor level ---------------------------------------------------------------------


def check_epsilon_norm(r: _Residuals, q0) -> None:
    for lo, up in ((SL, SU), (DL, DU)):
        el, eu = epsilon(lo), epsilon(up)
        for a, b in it.product(R2, R2):
            r.zero(f"{lo.name} eps.eps^({a},{b})", sum((el[a, d] * eu[d, b] for d in R2), ZERO) - _delta(a, b))
            r.zero(f"{lo.name} eps^.eps({a},{b})", sum((eu[b, d] * el[d, a] for d in R2), ZERO) - _delta(a, b))
        r.zero(f"{lo.name} eps_ab eps^ab", sum((el[a, b] * eu[a, b] for a, b in it.product(R2, R2)), ZERO) + Q)


def check_hecke_spinor(r: _Residuals, q0) -> None:
    for sg in SIGNS:
        R = spinor_R_matrix(sg)
        a2 = q_pow(2 * sg)
        r.zero(f"R{sg:+d}", R.plus_identity(a2) @ R.plus_identity(-ONE))


def check_rpm_inverse(r: _Residuals, q0) -> None:
    r.zero("R+R-", spinor_R_matrix(1) @ spinor_R_matrix(-1) - Matrix.identity(4))
    r.zero("R-R+", spinor_R_matrix(-1) @ spinor_R_matrix(1) - Matrix.identity(4))


def _braid(R: Matrix, n: int) -> Matrix:
    I_ = Matrix.identity(n)
    a, b = R.kron(I_), I_.kron(R)
    return a @ b @ a - b @ a @ b


def check_ybe_spinor(r: _Residuals, q0) -> None:
    for sg in SIGNS:
        r.zero(f"R{sg:+d}", _braid(spinor_R_matrix(sg), 2))


def check_completeness(r: _Residuals, q0) -> None:
    for sg in SIGNS:
        first, second = completeness(sg)
        r.zero(f"first{sg:+d}", _tensor_diff(first, lambda a, bd, rd, s: Q * _delta(a, s) * _delta(bd, rd)))
        r.zero(f"second{sg:+d}", _tensor_diff(second, lambda bd, a, rd, s: Q * _delta(a, s) * _delta(bd, rd)))
        for N, v in enumerate(sigma_bar_trace(sg)):
            r.zero(f"sigmabar trace{sg:+d} N={N}", v + Q * _delta(N, 0))
    for N, v in enumerate(sigma_full_trace()):
        r.zero(f"sigma trace N={N}", v - Q * _delta(N, 0))


# -- metric ---------------------------------------------------------------------------------


def closed_form_metric() -> tuple[dict, dict]:
    """Closed-form nonvanishing metric entries, upper and lower."""
    h, s3 = q_pow(Fraction(1, 2)), q_pow(Fraction(3, 2))
    lam = q_pow(1) - q_pow(-1)
    g12 = -I * h * lam / Q
    upper = {(0, 0): -s3.inverse(), (1, 1): h, (2, 2): h, (3, 3): h, (1, 2): g12, (2, 1): -g12}
    l12 = I * h.inverse() * lam * Q / 4
    d = h.inverse() * Q * Q / 4
    lower = {(0, 0): -s3, (1, 1): d, (2, 2): d, (3, 3): h.inverse(), (1, 2): l12, (2, 1): -l12}
    return upper, lower


def check_metric_values(r: _Residuals, q0) -> None:
    G, Gl = quantum_metric(1)
    up, lo = closed_form_metric()
    for I_, J in it.product(R4, R4):
        r.zero(f"G^{I_}{J}", G[I_, J] - up.get((I_, J), ZERO))
        r.zero(f"G_{I_}{J}", Gl[I_, J] - lo.get((I_, J), ZERO))
        want = (-ONE if I_ == 0 else ONE) if I_ == J else ZERO
        r.zero(f"classical G^{I_}{J}", classical_limit(G[I_, J]) - want)


def check_metric_inverse(r: _Residuals, q0) -> None:
    for sg in SIGNS:
        G, Gl = quantum_metric(sg)
        Gm, Glm = G.to_matrix((0,), (1,)), Gl.to_matrix((0,), (1,))
        r.zero(f"G.Ginv{sg:+d}", Gm @ Glm - Matrix.identity(4))
        r.zero(f"Ginv.G{sg:+d}", Glm @ Gm - Matrix.identity(4))
        r.zero(f"trace form{sg:+d}", metric_inverse_trace(sg).to_matrix((0,), (1,)) - Glm)


def check_metric_trace_equiv(r: _Residuals, q0) -> None:
    for sg in SIGNS:
        G = quantum_metric(sg)[0].to_matrix((0,), (1,))
        r.zero(f"sign{sg:+d}", metric_trace_alt(sg).to_matrix((0,), (1,)) - G)


# -- vector R ---------------------------------------------------------------------------------


def check_rrows(r: _Residuals, q0) -> None:
    for sg in SIGNS:
        R = functionals.big_R(sg)
        for M, N, P in it.product(R4, R4, R4):
            r.zero(f"{sg:+d} R^0{M}_{N}{P}", R[0, M, N, P] - _delta(N, M) * _delta(P, 0))
            r.zero(f"{sg:+d} R^{P}{M}_{N}0", R[P, M, N, 0] - _delta(N, M) * _delta(0, P))


def check_hecke_cubic(r: _Residuals, q0) -> None:
    q2 = q_pow(2)
    for sg in SIGNS:
        R = functionals.big_R_matrix(sg)
        r.zero(f"sign{sg:+d}", R.plus_identity(q2) @ R.plus_identity(q2.inverse()) @ R.plus_identity(-ONE))


def check_ybe_vector(r: _Residuals, q0) -> None:
    for sg in SIGNS:
        r.zero(f"sign{sg:+d}", _braid(functionals.big_R_matrix(sg), 4))


def check_metric_sym(r: _Residuals, q0) -> None:
    for sg in SIGNS:
        R = functionals.big_R_matrix(sg)
        G, Gl = quantum_metric(sg)
        gu = Matrix.from_function(16, 1, lambda i, _: G[i // 4, i % 4])
        gl = Matrix.from_function(16, 1, lambda i, _: Gl[i // 4, i % 4])
        r.zero(f"R G^..{sg:+d}", R.T @ gu - gu)
        r.zero(f"R G_..{sg:+d}", R @ gl - gl)
        r.zero(f"G^12+G^21{sg:+d}", G[1, 2] + G[2, 1])


# -- coordinate algebra -----------------------------------------------------------------------


def check_coord_match(r: _Residuals, q0) -> None:
    rep = coordalg.compare_with_derived(functionals.derive_coordinate_relations())
    for p in rep.derived_residuals + rep.rule_residuals:
        r.zero("residual", p)


def check_casimir_central(r: _Residuals, q0) -> None:
    for g, res in coordalg.central_residuals(coordalg.casimir()).items():
        r.zero(f"[C,{g}]", res)


def _zzbar(name: str):
    def check(r: _Residuals, q0) -> None:
        r.zero(name, coordalg.verify_zzbar()[name].difference)

    return check


def check_ladder(r: _Residuals, q0) -> None:
    for direction in ("raise_n", "lower_m"):
        for n in range(6):
            r.zero(f"{direction} n={n}", coordalg.ladder_symbolic_residual(direction, n))
    x = Fraction(1, 3)
    up = coordalg.ladder_eigenvalue("raise_n", 1, x, 1, q0)
    back = coordalg.ladder_eigenvalue("lower_m", 1, up, 1, q0)
    r.true("raise then lower", spectra._close(back, x))


def check_confluence(r: _Residuals, q0) -> None:
    rep = coordalg.confluence_check(3)
    for p in rep.unresolved:
        r.zero(f"overlap {p.overlap}", p.left - p.right)
    r.true("negative control must fail", not coordalg.confluence_check(3, q_pow(3)).ok)


# -- spectra ----------------------------------------------------------------------------------


L_VALUES = tuple(Fraction(k, 2) for k in range(5))


def check_termination(r: _Residuals, q0) -> None:
    for l in L_VALUES:
        rep = spectra.termination_check(l, q0)
        r.true(f"l={l} raise lands on a+", rep.lands_on_a_plus)
        r.true(f"l={l} lower lands on b+", rep.lands_on_b_plus)
        g = spectra.gamma_l(l, q0)
        roots = spectra.interval_roots(1, g, q0)
        for row in spectra.spectrum_table(l, spectra.Params(q0, 1)):
            r.true(f"l={l} m={row.m} inside interval", roots.contains(row.x3))
            if row.m < l:
                up = coordalg.ladder_eigenvalue("raise_n", 1, row.x3, 1, q0)
                r.true(f"l={l} m={row.m} ladder", spectra._close(up, spectra.x3_value(l, row.m + 1, q0)))
        if l > 0:
            off = spectra.termination_check(l, q0, gamma=g * Fraction(101, 100))
            r.true(f"l={l} perturbed gamma must miss", not (off.lands_on_a_plus or off.lands_on_b_plus))


def check_causality(r: _Residuals, q0, n: int = 20) -> None:
    Q0 = spectra.qQ(q0)
    lo = 4 / (Q0 * Q0)
    for k in range(n):
        g2 = lo + (4 - lo) * Fraction(k, n - 1) if spectra._exact(q0) else lo + (4 - lo) * k / (n - 1)
        r.true(f"gamma^2={g2}", spectra.causality_check_sq(g2, q0) == (g2 >= 1))
    r.true("boundary gamma=1", spectra.causality_check_sq(1, q0))


def check_lightcone(r: _Residuals, q0) -> None:
    rep = spectra.stable_state_check(1, q0)
    r.true("stable state", rep.ok)
    roots = spectra.lightcone_roots(1, q0)
    first = spectra.lightcone_spectrum(0, 1, q0)
    target = roots.xa_plus if q0 <= 1 else roots.xb_minus
    r.true("n=0 hits the root", spectra._close(first, target))
    for n in range(5):
        r.true(f"n={n} ladder step", spectra.lightcone_ladder_consistent(n, 1, q0))


def check_so3(r: _Residuals, q0) -> None:
    rep = so3q.so3_report()
    for line in rep.failures():
        r.true(line, False)


def check_sphere(r: _Residuals, q0) -> None:
    for c in so3q.sphere_closure():
        r.zero(c.name, c.difference)
    t, tau2 = Fraction(2), Fraction(1, 2)
    p = so3q.sphere_parameters(t, tau2, q0)
    r.true("lambda", spectra._close(p.lam, (q0 - 1 / q0) * t))
    r.true("rho at tau2=0", spectra._close(so3q.sphere_parameters(t, 0, q0).rho, t * t / (q0 * q0)))


CATALOG: dict[IdentityId, Callable] = {
    IdentityId.EPSILON_NORM: check_epsilon_norm,
    IdentityId.HECKE_SPINOR: check_hecke_spinor,
    IdentityId.RPM_INVERSE: check_rpm_inverse,
    IdentityId.YBE_SPINOR: check_ybe_spinor,
    IdentityId.COMPLETENESS: check_completeness,
    IdentityId.METRIC_VALUES: check_metric_values,
    IdentityId.METRIC_INVERSE: check_metric_inverse,
    IdentityId.METRIC_TRACE_EQUIV: check_metric_trace_equiv,
    IdentityId.RROWS_EQ7: check_rrows,
    IdentityId.HECKE_CUBIC: check_hecke_cubic,
    IdentityId.YBE_VECTOR: check_ybe_vector,
    IdentityId.METRIC_SYM: check_metric_sym,
    IdentityId.COORD_MATCH: check_coord_match,
    IdentityId.CASIMIR_CENTRAL: check_casimir_central,
    IdentityId.ZZBAR_39A: _zzbar("ZZb"),
    IdentityId.ZZBAR_39B: _zzbar("ZbZ"),
    IdentityId.LADDER_35_36: check_ladder,
    IdentityId.CONFLUENCE_D3: check_confluence,
    IdentityId.TERMINATION: check_termination,
    IdentityId.CAUSALITY_EQUIV: check_causality,
    IdentityId.LIGHTCONE_STABLE: check_lightcone,
    IdentityId.SO3_ORTHO: check_so3,
    IdentityId.SPHERE_CLOSE: check_sphere,
}


def run_identity(ident: IdentityId, q0=Fraction(3, 2)) -> IdentityResult:
    start = time.perf_counter()
    r = _Residuals()
    try:
        CATALOG[ident](r, q0)
        ok, text = r.result()
    except (ArithmeticError, ValueError) as exc:
        ok, text = False, f"error: {exc}"
    return IdentityResult(ident, ok, text, time.perf_counter() - start)


def run_all(q0=Fraction(3, 2), only=None) -> list[IdentityResult]:
    ids = list(IdentityId) if only is None else list(only)
    return [run_identity(i, q0) for i in ids]
