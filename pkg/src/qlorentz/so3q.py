"""SO_q(3) inside the quantum Lorentz group, and the quantum sphere at fixed time.

The SU_q(2) generators are ``a, as, g, gs`` (alpha, alpha*, gamma, gamma*)
with fundamental matrix ``u = ((a, q gs), (-g, as))``.  The relation set is

    g a  -> q^-1 a g        gs a  -> q^-1 a gs       gs g -> g gs
    g as -> q as g          gs as -> q as gs
    as a -> 1 - g gs        a as  -> 1 - q^2 g gs

which makes ``u`` unitary and d1 orthogonal.  Normal words are
``a^i g^j gs^k`` or ``as^i g^j gs^k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .coordalg import LAMBDA, X0, X3, Z, ZB, TAU2, IdentityCheck
from .functionals import lambda_expansion
from .matrix import Matrix
from .ncpoly import NCPoly, Rule, RewriteSystem
from .scalars import I, ONE, Q, ZERO, Scalar, q_pow
from .spectra import DomainError, sqrt

SUQ2_GENERATORS = ("a", "as", "g", "gs")
STAR = {"a": "as", "as": "a", "g": "gs", "gs": "g"}

A, AS, G, GS = (NCPoly.gen(x) for x in SUQ2_GENERATORS)
_q = q_pow(1)
_qi = q_pow(-1)
ONE_PLUS_Q2 = ONE + _q * _q


def suq2_rules(nu: Scalar | None = None, tag: str = "") -> list[Rule]:
    """SU_q(2) relations; ``nu`` defaults to q (the convention that works).

    ``tag`` renames every generator (``a`` -> ``a`` + tag) for tensor copies.
    """
    nu = _q if nu is None else nu
    ni = nu.inverse()
    a, as_, g, gs = (NCPoly.gen(x + tag) for x in SUQ2_GENERATORS)
    n = lambda *w: tuple(x + tag for x in w)  # noqa: E731
    return [
        Rule(n("g", "a"), ni * (a * g)),
        Rule(n("gs", "a"), ni * (a * gs)),
        Rule(n("gs", "g"), g * gs),
        Rule(n("as", "a"), ONE - g * gs),
        Rule(n("a", "as"), ONE - nu * nu * (g * gs)),
        Rule(n("g", "as"), nu * (as_ * g)),
        Rule(n("gs", "as"), nu * (as_ * gs)),
    ]


@lru_cache(maxsize=None)
def suq2_system() -> RewriteSystem:
    return RewriteSystem(suq2_rules(), name="SU_q(2)")


def reduce(p: NCPoly) -> NCPoly:
    return suq2_system().normal_form(p)


def star(p: NCPoly) -> NCPoly:
    """Antilinear anti-automorphism a <-> as, g <-> gs."""
    out = NCPoly()
    for w, c in p.terms.items():
        out = out + NCPoly({tuple(STAR[x] for x in reversed(w)): c.star()})
    return out


def fundamental() -> list[list[NCPoly]]:
    return [[A, _q * GS], [-G, AS]]


def unitarity_residuals() -> list[NCPoly]:
    """Entries of ``u* u - 1`` and ``u u* - 1`` after normal ordering."""
    u = fundamental()
    ud = [[star(u[j][i]) for j in range(2)] for i in range(2)]
    out = []
    for x, y in ((ud, u), (u, ud)):
        for i in range(2):
            for j in range(2):
                e = x[i][0] * y[0][j] + x[i][1] * y[1][j]
                out.append(reduce(e - (ONE if i == j else ZERO)))
    return out


# -- d1 -----------------------------------------------------------------------------

BASIS = ("Z", "X3", "Zb")  # indices -1, 0, 1


def build_d1() -> list[list[NCPoly]]:
    """The 3x3 corepresentation in closed form (rows/cols -1, 0, 1).

    It acts on the coordinate triple (Z, X3, Zb) without extra factors;
    see :func:`derived_d1` for how it follows from the Lorentz generators.
    """
    return [
        [AS * AS, -ONE_PLUS_Q2 * (AS * G), -_q * (G * G)],
        [GS * AS, ONE - ONE_PLUS_Q2 * (GS * G), A * G],
        [-_q * (GS * GS), -ONE_PLUS_Q2 * (GS * A), A * A],
    ]


def counit_poly(p: NCPoly) -> Scalar:
    """a, as -> 1 and g, gs -> 0."""
    total = ZERO
    for w, c in p.terms.items():
        if all(x in ("a", "as") for x in w):
            total = total + c
    return total


def counit_d1() -> Matrix:
    d = build_d1()
    return Matrix.from_function(3, 3, lambda i, j: counit_poly(d[i][j]))


@lru_cache(maxsize=None)
def restricted_lorentz() -> dict[tuple[int, int], NCPoly]:
    """All 16 Lorentz generators after M -> u and dotted M -> S(u) = u*^T."""
    u = fundamental()
    us = [[star(u[i][j]) for j in range(2)] for i in range(2)]
    out = {}
    for N in range(4):
        for M in range(4):
            acc = NCPoly()
            for c, (g1, g2) in lambda_expansion(N, M):
                acc = acc + c * (u[g1.lower][g1.upper] * us[g2.lower][g2.upper])
            out[N, M] = reduce(acc)
    return out


def time_invariance_residuals() -> dict[tuple[int, int], NCPoly]:
    """``L_0^0 - 1``, ``L_0^j`` and ``L_i^0``: all must vanish."""
    lam = restricted_lorentz()
    res = {(0, 0): lam[0, 0] - ONE}
    for j in (1, 2, 3):
        res[0, j] = lam[0, j]
        res[j, 0] = lam[j, 0]
    return res


def derived_d1() -> list[list[NCPoly]]:
    """Spatial block of :func:`restricted_lorentz` in the (Z, X3, Zb) basis."""
    lam = restricted_lorentz()
    h = ONE / 2
    # rows: Z, X3, Zb in terms of X1, X2, X3; and the inverse
    T = [[ONE, I, ZERO], [ZERO, ZERO, ONE], [ONE, -I, ZERO]]
    Ti = [[h, ZERO, h], [-I * h, ZERO, I * h], [ZERO, ONE, ZERO]]
    out = []
    for a in range(3):
        row = []
        for b in range(3):
            acc = NCPoly()
            for i in range(3):
                for j in range(3):
                    c = T[a][i] * Ti[j][b]
                    if c:
                        acc = acc + c * lam[i + 1, j + 1]
            row.append(reduce(acc))
        out.append(row)
    return out


def restricted_metric() -> tuple[Matrix, Matrix]:
    """Upper and lower 3x3 metric on (Z, X3, Zb), read off the Casimir."""
    g = Matrix.from_rows(
        [
            [ZERO, ZERO, q_pow(Fraction(3, 2)) / Q],
            [ZERO, q_pow(Fraction(1, 2)), ZERO],
            [q_pow(Fraction(-1, 2)) / Q, ZERO, ZERO],
        ]
    )
    return g, g.inverse()


# -- reports ----------------------------------------------------------------------------------


@dataclass
class SO3Report:
    orthogonality_upper: dict[tuple[int, int], NCPoly] = field(default_factory=dict)
    orthogonality_lower: dict[tuple[int, int], NCPoly] = field(default_factory=dict)
    time_invariance: dict[tuple[int, int], NCPoly] = field(default_factory=dict)
    derived_mismatch: dict[tuple[int, int], NCPoly] = field(default_factory=dict)
    unitarity: list[NCPoly] = field(default_factory=list)
    counit_is_identity: bool = False
    relations: tuple[str, ...] = ()

    def failures(self) -> list[str]:
        out = []
        for name, d in (
            ("orthogonality_upper", self.orthogonality_upper),
            ("orthogonality_lower", self.orthogonality_lower),
            ("time_invariance", self.time_invariance),
            ("derived_d1", self.derived_mismatch),
        ):
            out += [f"{name} {k}: {v}" for k, v in d.items() if not v.is_zero()]
        out += [f"unitarity: {r}" for r in self.unitarity if not r.is_zero()]
        if not self.counit_is_identity:
            out.append("counit of d1 is not the identity")
        return out

    @property
    def ok(self) -> bool:
        return not self.failures()

    def lines(self) -> list[str]:
        out = [f"relation {r}" for r in self.relations]
        checks = [
            ("ORTHO_UPPER", self.orthogonality_upper),
            ("ORTHO_LOWER", self.orthogonality_lower),
            ("TIME_INVARIANCE", self.time_invariance),
            ("D1_DERIVED", self.derived_mismatch),
        ]
        for name, d in checks:
            bad = [f"{k}: {v}" for k, v in d.items() if not v.is_zero()]
            out.append(f"{name} {'FAIL ' + '; '.join(bad) if bad else 'PASS'}")
        out.append(f"UNITARITY {'PASS' if all(r.is_zero() for r in self.unitarity) else 'FAIL'}")
        out.append(f"COUNIT {'PASS' if self.counit_is_identity else 'FAIL'}")
        return out


def orthogonality(d: list[list[NCPoly]] | None = None) -> tuple[dict, dict]:
    """Residuals of ``g^ij d_il d_jk = g^lk`` and ``g_lk d_il d_jk = g_ij``."""
    d = build_d1() if d is None else d
    g, gl = restricted_metric()
    upper, lower = {}, {}
    for l in range(3):
        for k in range(3):
            acc = NCPoly.const(-g[l, k])
            for i in range(3):
                for j in range(3):
                    if g[i, j]:
                        acc = acc + g[i, j] * (d[i][l] * d[j][k])
            upper[l - 1, k - 1] = reduce(acc)
    for i in range(3):
        for j in range(3):
            acc = NCPoly.const(-gl[i, j])
            for l in range(3):
                for k in range(3):
                    if gl[l, k]:
                        acc = acc + gl[l, k] * (d[i][l] * d[j][k])
            lower[i - 1, j - 1] = reduce(acc)
    return upper, lower


def verify_so3(report: SO3Report | None = None) -> bool:
    """Fill ``report`` (if given) and return whether every identity holds."""
    report = SO3Report() if report is None else report
    report.relations = tuple(str(r) for r in suq2_rules())
    report.orthogonality_upper, report.orthogonality_lower = orthogonality()
    report.time_invariance = time_invariance_residuals()
    d, dd = build_d1(), derived_d1()
    report.derived_mismatch = {(a - 1, b - 1): reduce(d[a][b] - dd[a][b]) for a in range(3) for b in range(3)}
    report.unitarity = unitarity_residuals()
    report.counit_is_identity = counit_d1() == Matrix.identity(3)
    return report.ok


def so3_report() -> SO3Report:
    r = SO3Report()
    verify_so3(r)
    return r


# -- coproduct --------------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _tensor_system() -> RewriteSystem:
    rules = suq2_rules(tag="1") + suq2_rules(tag="2")
    for x in SUQ2_GENERATORS:
        for y in SUQ2_GENERATORS:
            rules.append(Rule((x + "2", y + "1"), NCPoly.word(y + "1", x + "2")))
    return RewriteSystem(rules, name="SU_q(2) x SU_q(2)")


def _tagged(p: NCPoly, tag: str) -> NCPoly:
    return NCPoly({tuple(x + tag for x in w): c for w, c in p.terms.items()})


def _generator_coproduct() -> dict[str, NCPoly]:
    u = fundamental()

    def du(i, j):
        return sum((_tagged(u[i][k], "1") * _tagged(u[k][j], "2") for k in range(2)), NCPoly())

    return {
        "a": du(0, 0),
        "g": -du(1, 0),
        "as": du(1, 1),
        "gs": _qi * du(0, 1),
    }


def coproduct(p: NCPoly) -> NCPoly:
    """Algebra map p -> Delta(p) in A (x) A (letters suffixed 1 and 2), normal ordered."""
    return _tensor_system().normal_form(p.substitute(_generator_coproduct()))


def corepresentation_residual(i: int, j: int) -> NCPoly:
    """``Delta(d_ij) - sum_k d_ik (x) d_kj`` for rows/cols 0..2."""
    d = build_d1()
    rhs = sum((_tagged(d[i][k], "1") * _tagged(d[k][j], "2") for k in range(3)), NCPoly())
    return _tensor_system().normal_form(coproduct(d[i][j]) - rhs)


# -- quantum sphere ---------------------------------------------------------------------------------


@dataclass(frozen=True)
class SphereParameters:
    lam: object
    rho: object


def sphere_parameters(t, tau2, q0) -> SphereParameters:
    """``lambda = (q - 1/q) t`` and ``rho = q^-2 t^2 - q^(-1/2) tau2`` at a number q0."""
    if t < 0:
        raise DomainError("t must be non-negative")
    if q0 <= 0:
        raise DomainError("q must be positive")
    lam = (q0 - 1 / q0) * t
    rho = t * t / (q0 * q0)
    if tau2:
        rho = rho - tau2 / sqrt(q0)
    return SphereParameters(lam, rho)


def sphere_parameters_symbolic() -> tuple[NCPoly, NCPoly]:
    """lambda and rho as polynomials in the central X0 and Tau2."""
    return LAMBDA * X0, _qi * _qi * (X0 * X0) - q_pow(Fraction(-1, 2)) * TAU2


def sphere_closure() -> list[IdentityCheck]:
    """The Podles relations among Z, X3, Zb with X0 held central.

    Each check normal-orders ``lhs - rhs`` after replacing Tau2 by the Casimir.
    """
    lam, rho = sphere_parameters_symbolic()
    qq, qqi = _q * _q, _qi * _qi
    return [
        IdentityCheck("X3_Z", X3 * Z, qq * (Z * X3) + lam * Z),
        IdentityCheck("X3_Zb", X3 * ZB, qqi * (ZB * X3) - qqi * (lam * ZB)),
        IdentityCheck("Z_Zb", Z * ZB, rho + qqi * (lam * X3) - qqi * (X3 * X3)),
        IdentityCheck("Zb_Z", ZB * Z, rho - lam * X3 - qq * (X3 * X3)),
    ]


def verify_sphere() -> bool:
    return all(c.ok for c in sphere_closure())
