"""Boost spectra, positivity roots, lifetime dilatation and the light cone.

Every function works on plain numbers: pass ``Fraction`` values for exact
arithmetic, floats for numerics.  Square roots stay exact when the radicand
is a rational square (which is always the case at quantized gamma), and
fall back to floats otherwise.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from numbers import Real
from typing import Iterator, Sequence

from .coordalg import ladder_eigenvalue
from .scalars import Q as Q_SYM
from .scalars import Scalar, q_pow

Number = Real  # Fraction or float


class DomainError(ValueError):
    """Inputs outside the physical or mathematical domain."""


class ComplexRootsError(DomainError):
    pass


def _exact(*xs) -> bool:
    return all(isinstance(x, (int, Fraction)) for x in xs)


def _num(x):
    """Promote ints to Fraction so exact inputs stay exact under division."""
    return Fraction(x) if isinstance(x, int) and not isinstance(x, bool) else x


TOL = 1e-12


def _tol(*xs) -> float:
    """0 in exact mode, otherwise TOL scaled by the magnitudes involved."""
    if _exact(*xs):
        return 0
    return TOL * max([1.0] + [abs(float(x)) for x in xs])


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if irrational."""
    x = Fraction(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def sqrt(x):
    if _exact(x):
        r = rational_sqrt(x)
        if r is not None:
            return r
    return math.sqrt(x)


def as_number(text: str):
    """Parse ``3/2`` or ``2`` as Fraction, anything with '.' or 'e' as float."""
    t = text.strip()
    if any(ch in t.lower() for ch in ".e") or t.lower() in ("inf", "nan"):
        return float(t)
    return Fraction(t)


def qQ(q0):
    q0 = _num(q0)
    return q0 + 1 / q0


def _check_q(q0):
    if q0 <= 0:
        raise DomainError("q must be positive")


def _half_integer(x) -> Fraction:
    f = Fraction(x)
    if (2 * f).denominator != 1:
        raise DomainError(f"{x} is not a half-integer")
    return f


# -- labels and parameters ------------------------------------------------------------


@dataclass(frozen=True)
class BoostLabel:
    l: Fraction
    m: Fraction

    def __post_init__(self):
        l, m = _half_integer(self.l), _half_integer(self.m)
        if l < 0:
            raise DomainError("l must be non-negative")
        if not -l <= m <= l or (m + l).denominator != 1:
            raise DomainError(f"m = {m} is not in -l..l in integer steps (l = {l})")
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "m", m)

    @classmethod
    def all_for(cls, l) -> list["BoostLabel"]:
        l = _half_integer(l)
        return [cls(l, -l + k) for k in range(int(2 * l) + 1)]


@dataclass(frozen=True)
class Params:
    q0: Number
    t: Number = 1
    tau2: Number | None = None
    mass: Number | None = None

    def __post_init__(self):
        _check_q(self.q0)
        if self.t < 0:
            raise DomainError("t must be non-negative")
        if self.mass is not None and self.mass <= 0:
            raise DomainError("mass must be positive")

    @property
    def exact(self) -> bool:
        vals = [self.q0, self.t] + [v for v in (self.tau2, self.mass) if v is not None]
        return _exact(*vals)

    def alpha2(self):
        """``alpha^2 = q^(3/2) tau^2`` (tau^2 = q^(-3/2) alpha^2)."""
        if self.tau2 is None:
            return None
        return float(self.q0) ** 1.5 * self.tau2


@dataclass(frozen=True)
class SpectrumRow:
    l: Fraction
    m: Fraction
    gamma: Number
    x3: Number
    v3: Number
    vsq: Number
    E: Number | None = None
    p3: Number | None = None

    def as_dict(self) -> dict:
        return asdict(self)


# -- gamma and the spectrum ---------------------------------------------------------------


def gamma_l(l, q0):
    """``(q^(2l+1) + q^-(2l+1)) / (q + 1/q)``."""
    q0 = _num(q0)
    _check_q(q0)
    k = int(2 * _half_integer(l) + 1)
    return (q0**k + q0**-k) / qQ(q0)


def gamma_l_symbolic(l) -> Scalar:
    k = int(2 * _half_integer(l) + 1)
    return (q_pow(k) + q_pow(-k)) / Q_SYM


def v3_value(l, m, q0):
    q0 = _num(q0)
    g = gamma_l(l, q0)
    return (q0 ** int(2 * Fraction(m)) / g - 1) / q0


def x3_value(l, m, q0, t=1):
    """``x3^(l,m) = q^-1 (q^(2m)/gamma^(l) - 1) t``."""
    q0, t = _num(q0), _num(t)
    return v3_value(l, m, q0) * t


def x3_from_n(L: int, n: int, q0, t=1):
    """The same eigenvalues labelled by ``L = 2l`` and ``n = 0..L``."""
    q0, t = _num(q0), _num(t)
    D = q0 ** (L + 1) + q0 ** -(L + 1)
    return (qQ(q0) * q0 ** -(L + 1 - 2 * n) / D - 1 / q0) * t


def spectrum_row(label: BoostLabel, params: Params) -> SpectrumRow:
    q0, t = params.q0, params.t
    g = gamma_l(label.l, q0)
    v3 = v3_value(label.l, label.m, q0)
    vsq = 1 - 1 / (g * g)
    E = p3 = None
    if params.mass is not None:
        # momenta reuse the coordinate formula with the time eigenvalue replaced by E
        E = params.mass * g
        p3 = x3_value(label.l, label.m, q0, E)
    return SpectrumRow(label.l, label.m, g, v3 * t, v3, vsq, E, p3)


def spectrum_table(l, params: Params) -> list[SpectrumRow]:
    return [spectrum_row(lab, params) for lab in BoostLabel.all_for(l)]


def spectrum(l_max, params: Params) -> list[SpectrumRow]:
    l_max = _half_integer(l_max)
    rows = []
    for k in range(int(2 * l_max) + 1):
        rows.extend(spectrum_table(Fraction(k, 2), params))
    return rows


def relabel_report(L: int, q0, t=1) -> list[dict]:
    """Pair the (L, n) labelling with (l, m); the matching is m = n - l."""
    l = Fraction(L, 2)
    out = []
    for n in range(L + 1):
        m = n - l
        a = x3_from_n(L, n, q0, t)
        b = x3_value(l, m, q0, t)
        out.append({"L": L, "n": n, "l": l, "m": m, "x3_n": a, "x3_lm": b, "equal": _close(a, b)})
    return out


def _close(a, b, tol=1e-12) -> bool:
    if _exact(a, b):
        return a == b
    return math.isclose(a, b, rel_tol=tol, abs_tol=tol)


# -- positivity roots ---------------------------------------------------------------------


@dataclass(frozen=True)
class Roots:
    xa_minus: Number
    xa_plus: Number
    xb_plus: Number
    xb_minus: Number

    def interval(self) -> tuple[Number, Number]:
        """Intersection of [xa-, xa+] and [xb+, xb-]."""
        return max(self.xa_minus, self.xb_plus), min(self.xa_plus, self.xb_minus)

    def nonempty(self) -> bool:
        lo, hi = self.interval()
        return lo <= hi + _tol(lo, hi)

    def contains(self, x) -> bool:
        lo, hi = self.interval()
        eps = _tol(lo, hi, x)
        return lo - eps <= x <= hi + eps


def _radicand(gamma, q0):
    Q = qQ(q0)
    return Q * Q - 4 / (gamma * gamma)


def interval_roots(t, gamma, q0) -> Roots:
    """Roots of the two positivity quadratics (principal square root)."""
    t, gamma, q0 = _num(t), _num(gamma), _num(q0)
    _check_q(q0)
    rad = _radicand(gamma, q0)
    if rad < 0:
        raise ComplexRootsError("gamma^2 < 4/Q^2: positivity roots are complex")
    r = sqrt(rad)
    lam = q0 - 1 / q0
    xa_p = (lam + r) / 2 * t
    xa_m = (lam - r) / 2 * t
    return Roots(xa_m, xa_p, -xa_p / (q0 * q0), -xa_m / (q0 * q0))


def positivity_a(x3, t, gamma, q0):
    """``q^-2 (t + q x)(t - x/q) - q^-2 alpha^2`` with alpha^2 = t^2/gamma^2."""
    x3, t, gamma, q0 = _num(x3), _num(t), _num(gamma), _num(q0)
    return ((t + q0 * x3) * (t - x3 / q0) - t * t / (gamma * gamma)) / (q0 * q0)


def positivity_b(x3, t, gamma, q0):
    x3, t, gamma, q0 = _num(x3), _num(t), _num(gamma), _num(q0)
    return ((t + q0 * x3) * (t - q0**3 * x3) - t * t / (gamma * gamma)) / (q0 * q0)


def causality_check(gamma, q0) -> bool:
    """True iff the admissible interval is nonempty (t = 1)."""
    return causality_check_sq(gamma * gamma, q0)


def causality_check_sq(gamma_sq, q0) -> bool:
    """:func:`causality_check` taking gamma^2, so exact grids stay rational."""
    gamma_sq, q0 = _num(gamma_sq), _num(q0)
    _check_q(q0)
    Q = qQ(q0)
    rad = Q * Q - 4 / gamma_sq
    if rad < 0:
        return False
    r = sqrt(rad)
    lam = q0 - 1 / q0
    xa_p, xa_m = (lam + r) / 2, (lam - r) / 2
    return Roots(xa_m, xa_p, -xa_p / (q0 * q0), -xa_m / (q0 * q0)).nonempty()


# -- termination of the ladder at the roots ---------------------------------------------------


def analytic_roots(l, q0, t=1) -> Roots:
    """Roots at gamma^(l) using the branch sqrt = Q (q^k - q^-k)/(q^k + q^-k).

    This equals the principal root for q >= 1 and its negative for q < 1,
    so the labels a+/b+ follow the ladder for every q.
    """
    q0, t = _num(q0), _num(t)
    k = int(2 * _half_integer(l) + 1)
    Q = qQ(q0)
    D = q0**k + q0**-k
    delta = Q * (q0**k - q0**-k) / D
    lam = q0 - 1 / q0
    xa_p = (lam + delta) / 2 * t
    xa_m = (lam - delta) / 2 * t
    return Roots(xa_m, xa_p, -xa_p / (q0 * q0), -xa_m / (q0 * q0))


@dataclass
class TerminationReport:
    l: Fraction
    q0: Number
    top: Number
    bottom: Number
    raised: Number
    lowered: Number
    roots: Roots
    principal: Roots
    gamma_unique: bool

    @property
    def lands_on_a_plus(self) -> bool:
        return _close(self.raised, self.roots.xa_plus)

    @property
    def lands_on_b_plus(self) -> bool:
        return _close(self.lowered, self.roots.xb_plus)

    @property
    def ok(self) -> bool:
        return self.lands_on_a_plus and self.lands_on_b_plus and self.gamma_unique

    def principal_labels(self) -> tuple[str, str]:
        """Names of the principal-branch roots hit by the raised / lowered values."""

        def name(x):
            for k, v in asdict(self.principal).items():
                if _close(x, v):
                    return k
            return "none"

        return name(self.raised), name(self.lowered)


def termination_check(l, q0, t=1, gamma=None) -> TerminationReport:
    """Raise the top state and lower the bottom state one step each.

    With the quantized gamma the results coincide with the roots x^(a)+ and
    x^(b)+; passing a different ``gamma`` makes the chain miss them.
    """
    q0, t = _num(q0), _num(t)
    l = _half_integer(l)
    g = gamma_l(l, q0) if gamma is None else gamma
    top = (q0 ** int(2 * l) / g - 1) / q0 * t
    bottom = (q0 ** int(-2 * l) / g - 1) / q0 * t
    raised = ladder_eigenvalue("raise_n", 1, top, t, q0)
    lowered = ladder_eigenvalue("lower_m", 1, bottom, t, q0)
    if gamma is None:
        roots = analytic_roots(l, q0, t)
    else:
        # off-quantization: roots at the supplied gamma, same branch convention
        base = interval_roots(t, g, q0)
        roots = base if q0 >= 1 else Roots(base.xa_plus, base.xa_minus, base.xb_minus, base.xb_plus)
    principal = interval_roots(t, g, q0)
    unique = _gamma_unique(l, q0, g)
    return TerminationReport(l, q0, top, bottom, raised, lowered, roots, principal, unique)


def _gamma_unique(l, q0, g) -> bool:
    """gamma^2 is the only value closing a chain of 2l+1 states."""
    k = int(2 * l + 1)
    target = (q0**k + q0**-k) ** 2 / qQ(q0) ** 2
    return _close(g * g, target)


# -- boosts, energy, lifetime ------------------------------------------------------------------


@dataclass(frozen=True)
class BoostEvent:
    t_prime: Number
    x3_prime: Number
    E: Number | None = None
    p3: Number | None = None


def boost_event(params: Params, label: BoostLabel) -> BoostEvent:
    """``t' = gamma t``, ``x3' = v3 t'``, plus energy and momentum when a mass is set."""
    g = gamma_l(label.l, params.q0)
    v3 = v3_value(label.l, label.m, params.q0)
    tp = g * params.t
    E = p3 = None
    if params.mass is not None:
        # momenta reuse the coordinate formula with the time eigenvalue replaced by E
        E = params.mass * g
        p3 = x3_value(label.l, label.m, params.q0, E)
    return BoostEvent(tp, v3 * tp, E, p3)


def velocity_length_sq(v, q0) -> float:
    """``|v|_q^2 = -G^{ij} v_i v_j / G^00`` for a velocity along X3."""
    G00 = -(q0**-1.5)
    G33 = q0**0.5
    return -G33 * v * v / G00


def exact_dilatation(t_cl, v_cl, q0) -> float:
    """``t_cl sqrt(1 - v^2) / sqrt(1 - |v|_q^2)``: proper time t_cl boosted at q."""
    if not 0 <= abs(v_cl) < 1:
        raise DomainError("|v_cl| must be < 1")
    vq = velocity_length_sq(v_cl, q0)
    if vq >= 1:
        raise DomainError("q-deformed velocity reaches the light cone")
    return t_cl * math.sqrt((1 - v_cl * v_cl) / (1 - vq))


def lifetime_correction(t_cl, v_cl, kappa, sign: int = 1) -> float:
    """First-order correction ``sign * kappa t_cl v^2/(1 - v^2)`` for q = 1 + sign*kappa.

    The sign is the one obtained by expanding :func:`exact_dilatation`; see
    :func:`lifetime_report` for the comparison with the opposite convention.
    """
    if not 0 <= abs(v_cl) < 1:
        raise DomainError("|v_cl| must be < 1")
    if kappa <= 0:
        raise DomainError("kappa must be positive")
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    return sign * kappa * t_cl * v_cl * v_cl / (1 - v_cl * v_cl)


@dataclass
class LifetimeReport:
    v_cl: float
    kappa: float
    sign: int
    exact: float
    first_order: float
    residual: float
    residual_half: float
    derived_sign: int

    @property
    def ratio(self) -> float:
        if self.residual_half == 0:
            return math.inf if self.residual else 0.0
        return self.residual / self.residual_half


def lifetime_report(t_cl, v_cl, kappa, sign: int = 1) -> LifetimeReport:
    """Compare exact dilatation (relative to t_cl) against the first-order term at kappa and kappa/2."""

    def resid(k):
        exact = exact_dilatation(t_cl, v_cl, 1 + sign * k) - t_cl
        return exact, abs(exact - lifetime_correction(t_cl, v_cl, k, sign))

    exact, r1 = resid(kappa)
    _, r2 = resid(kappa / 2)
    d = exact_dilatation(t_cl, v_cl, 1 + sign * 1e-6) - t_cl
    derived = 0 if d == 0 else (1 if d > 0 else -1) * sign
    return LifetimeReport(v_cl, kappa, sign, exact, lifetime_correction(t_cl, v_cl, kappa, sign), r1, r2, derived)


# -- light cone ------------------------------------------------------------------------------------


def lightcone_spectrum(n: int, t, q0):
    """``q^(2n) Q t - t/q`` for q <= 1, ``q^(-2(n+1)) Q t - t/q`` for q >= 1."""
    t, q0 = _num(t), _num(q0)
    _check_q(q0)
    if n < 0:
        raise DomainError("n must be non-negative")
    if t < 0:
        raise DomainError("t must be non-negative")
    Q = qQ(q0)
    if q0 <= 1:
        return q0 ** (2 * n) * Q * t - t / q0
    return q0 ** (-2 * (n + 1)) * Q * t - t / q0


def lightcone_roots(t, q0) -> Roots:
    """tau^2 = 0 limit (gamma -> infinity): sqrt(Q^2) = Q."""
    t, q0 = _num(t), _num(q0)
    Q = qQ(q0)
    lam = q0 - 1 / q0
    xa_p = (lam + Q) / 2 * t
    xa_m = (lam - Q) / 2 * t
    return Roots(xa_m, xa_p, -xa_p / (q0 * q0), -xa_m / (q0 * q0))


@dataclass
class StableStateReport:
    x3: Number
    raised: Number
    lowered: Number
    v3: Number
    q2v3sq: Number

    @property
    def ok(self) -> bool:
        return _close(self.raised, self.x3) and _close(self.lowered, self.x3) and _close(self.q2v3sq, 1)


def stable_state_check(t, q0) -> StableStateReport:
    t, q0 = _num(t), _num(q0)
    x = -t / q0
    v3 = -1 / q0
    return StableStateReport(
        x,
        ladder_eigenvalue("raise_n", 1, x, t, q0),
        ladder_eigenvalue("lower_m", 1, x, t, q0),
        v3,
        q0 * q0 * v3 * v3,
    )


def lightcone_ladder_consistent(n: int, t, q0) -> bool:
    """Consecutive light-cone eigenvalues are related by one ladder step."""
    a = lightcone_spectrum(n, t, q0)
    b = lightcone_spectrum(n + 1, t, q0)
    step = "raise_n" if q0 <= 1 else "lower_m"
    return _close(ladder_eigenvalue(step, 1, a, t, q0), b)


def grid(lo, hi, n: int) -> Iterator[float]:
    for i in range(n):
        yield lo + (hi - lo) * i / (n - 1)
