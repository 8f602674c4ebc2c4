"""Exact scalars: the field Q(i)(s) with s = q^(1/2).

A :class:`Scalar` is stored as ``(re + i*im) / den`` where ``re``, ``im`` and
``den`` are polynomials in ``s`` with rational coefficients (python-flint
``fmpq_poly``).  Because ``s`` is real, every element of Q(i)(s) has such a
representative with a *real* denominator, and it is unique once
``gcd(re, im, den) = 1`` and ``den`` is monic.  Equality is therefore
structural equality of the three polynomials.

Text form writes the numerator and denominator as Laurent polynomials in
``q``, with half-integer powers as ``q^(p/2)``; powers of ``s`` dividing the
denominator are moved into the numerator, e.g. ``(-1)*q^(-3/2)`` or
``(q^2 - 1)/(q^2 + 1)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from flint import fmpq, fmpq_poly

__all__ = [
    "Scalar",
    "NumericValue",
    "PoleError",
    "ZERO",
    "ONE",
    "I",
    "S",
    "q",
    "Q",
    "q_pow",
    "eval_at",
    "classical_limit",
    "scalar_arith",
]


class PoleError(ZeroDivisionError):
    """Raised when a scalar is evaluated where its denominator vanishes."""


_P0 = fmpq_poly([])
_P1 = fmpq_poly([1])


def _coeffs(p: fmpq_poly) -> list[fmpq]:
    return p.coeffs() if p != 0 else []


def _valuation(p: fmpq_poly) -> int:
    for k, c in enumerate(_coeffs(p)):
        if c != 0:
            return k
    raise ValueError("valuation of the zero polynomial")


def _shift_down(p: fmpq_poly, k: int) -> fmpq_poly:
    if k == 0:
        return p
    return fmpq_poly(_coeffs(p)[k:])


def _to_fraction(c: fmpq) -> Fraction:
    return Fraction(int(c.p), int(c.q))


class Scalar:
    """An element of Q(i)(s); immutable and hashable."""

    __slots__ = ("re", "im", "den", "_hash")

    def __init__(self, value: "int | Fraction | Scalar" = 0):
        if isinstance(value, Scalar):
            self.re, self.im, self.den = value.re, value.im, value.den
        elif isinstance(value, (int, Rational)):
            fr = Fraction(value)
            self.re = fmpq_poly([fmpq(fr.numerator, fr.denominator)]) if fr else _P0
            self.im = _P0
            self.den = _P1
        else:
            raise TypeError(f"cannot build a Scalar from {type(value).__name__}")
        self._hash = None

    @classmethod
    def _raw(cls, re: fmpq_poly, im: fmpq_poly, den: fmpq_poly) -> "Scalar":
        obj = cls.__new__(cls)
        obj.re, obj.im, obj.den = re, im, den
        obj._hash = None
        return obj

    @classmethod
    def make(cls, re: fmpq_poly, im: fmpq_poly = _P0, den: fmpq_poly = _P1) -> "Scalar":
        """Build the canonical representative of ``(re + i*im)/den``."""
        if den == 0:
            raise ZeroDivisionError("Scalar division by zero")
        if re == 0 and im == 0:
            return ZERO
        if den.degree() > 0:
            g = re.gcd(im) if im != 0 else re
            g = g.gcd(den)
            if g.degree() > 0:
                re, im, den = re // g, im // g, den // g
        lc = _coeffs(den)[-1]
        if lc != 1:
            re, im, den = re / lc, im / lc, den / lc
        return cls._raw(re, im, den)

    @classmethod
    def gaussian(cls, real: "int | Fraction" = 0, imag: "int | Fraction" = 0) -> "Scalar":
        a, b = Fraction(real), Fraction(imag)
        return cls.make(
            fmpq_poly([fmpq(a.numerator, a.denominator)]),
            fmpq_poly([fmpq(b.numerator, b.denominator)]),
        )

    @classmethod
    def s_pow(cls, e: int) -> "Scalar":
        """``s**e = q**(e/2)`` for any integer ``e``."""
        if e >= 0:
            return cls._raw(fmpq_poly([0] * e + [1]), _P0, _P1)
        return cls._raw(_P1, _P0, fmpq_poly([0] * (-e) + [1]))

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        from .parsing import parse_scalar

        return parse_scalar(text)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Scalar | None":
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Rational)):
            return Scalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        if self.den == o.den:
            return Scalar.make(self.re + o.re, self.im + o.im, self.den)
        return Scalar.make(
            self.re * o.den + o.re * self.den,
            self.im * o.den + o.im * self.den,
            self.den * o.den,
        )

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar._raw(-self.re, -self.im, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return ZERO
        if self.im == 0 and o.im == 0:
            return Scalar.make(self.re * o.re, _P0, self.den * o.den)
        return Scalar.make(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
            self.den * o.den,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("Scalar division by zero")
        norm = self.re * self.re + self.im * self.im
        return Scalar.make(self.den * self.re, -(self.den * self.im), norm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "Scalar":
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = ONE
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def star(self) -> "Scalar":
        """Complex conjugation ``i -> -i``; ``s`` is fixed because q is real."""
        if self.im == 0:
            return self
        return Scalar._raw(self.re, -self.im, self.den)

    conjugate = star

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_real(self) -> bool:
        return self.im == 0

    def is_constant(self) -> bool:
        return self.den.degree() == 0 and self.re.degree() <= 0 and self.im.degree() <= 0

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im and self.den == o.den

    def _key(self) -> tuple:
        def k(p):
            return tuple((int(c.p), int(c.q)) for c in _coeffs(p))

        return k(self.re), k(self.im), k(self.den)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    # -- evaluation -------------------------------------------------------

    def constant_value(self) -> tuple[Fraction, Fraction]:
        """Real and imaginary part of a constant scalar."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        d = _to_fraction(_coeffs(self.den)[0])
        re = _to_fraction(_coeffs(self.re)[0]) if self.re != 0 else Fraction(0)
        im = _to_fraction(_coeffs(self.im)[0]) if self.im != 0 else Fraction(0)
        return re / d, im / d

    def at_s(self, s0: Fraction) -> tuple[Fraction, Fraction]:
        """Exact value at a rational ``s``; raises :class:`PoleError` on a pole."""
        x = fmpq(Fraction(s0).numerator, Fraction(s0).denominator)
        d = self.den(x)
        if d == 0:
            raise PoleError(f"{self} has a pole at s = {s0}")
        return _to_fraction(self.re(x) / d), _to_fraction(self.im(x) / d)

    def evaluate(self, q0: float) -> complex:
        if q0 <= 0:
            raise ValueError("q0 must be positive")
        s0 = math.sqrt(q0)
        d = _horner(self.den, s0)
        scale = _horner_abs(self.den, s0)
        if d == 0.0 or abs(d) <= 1e-14 * scale:
            raise PoleError(f"{self} has a pole at q = {q0}")
        return complex(_horner(self.re, s0), _horner(self.im, s0)) / d

    def __complex__(self) -> complex:
        raise TypeError("use Scalar.evaluate(q0) for a numeric value")

    # -- text -------------------------------------------------------------

    def laurent_parts(self) -> tuple[dict[int, tuple[Fraction, Fraction]], dict[int, Fraction], int]:
        """Numerator terms ``{s-exponent: (re, im)}``, denominator ``{exp: coeff}``."""
        if self.is_zero():
            return {}, {0: Fraction(1)}, 0
        v = _valuation(self.den)
        den = _shift_down(self.den, v)
        num: dict[int, tuple[Fraction, Fraction]] = {}
        for k, c in enumerate(_coeffs(self.re)):
            if c != 0:
                num[k - v] = (_to_fraction(c), Fraction(0))
        for k, c in enumerate(_coeffs(self.im)):
            if c != 0:
                re = num.get(k - v, (Fraction(0), Fraction(0)))[0]
                num[k - v] = (re, _to_fraction(c))
        dterms = {k: _to_fraction(c) for k, c in enumerate(_coeffs(den)) if c != 0}
        return num, dterms, v

    def __str__(self) -> str:
        num, den, _ = self.laurent_parts()
        if not num:
            return "0"
        ntext = _laurent_text(num)
        if den == {0: Fraction(1)}:
            return ntext
        dtext = _laurent_text({k: (c, Fraction(0)) for k, c in den.items()})
        return f"({ntext})/({dtext})"

    def __repr__(self) -> str:
        return f"Scalar('{self}')"

    def is_monomial(self) -> bool:
        num, den, _ = self.laurent_parts()
        return len(num) == 1 and den == {0: Fraction(1)}


def _horner(p: fmpq_poly, x: float) -> float:
    acc = 0.0
    for c in reversed(_coeffs(p)):
        acc = acc * x + int(c.p) / int(c.q)
    return acc


def _horner_abs(p: fmpq_poly, x: float) -> float:
    acc = 0.0
    for c in reversed(_coeffs(p)):
        acc = acc * x + abs(int(c.p) / int(c.q))
    return acc


# -- text helpers -----------------------------------------------------------


def monomial_text(e: int) -> str:
    """Text of ``s**e``: ``q``, ``q^2``, ``q^-1``, ``q^(3/2)``..."""
    if e == 0:
        return ""
    if e % 2 == 0:
        k = e // 2
        return "q" if k == 1 else f"q^{k}" if k > 0 else f"q^-{-k}"
    return f"q^({e}/2)"


def _is_negative(re: Fraction, im: Fraction) -> bool:
    if re != 0 and im != 0:
        return False
    return re < 0 or (re == 0 and im < 0)


def _coef_text(re: Fraction, im: Fraction) -> tuple[str, bool]:
    """Text of a non-negative coefficient and whether it is a bare atom."""
    if im == 0:
        return str(re), re.denominator == 1
    if re == 0:
        return ("i", True) if im == 1 else (f"{im}*i", False)
    sign = "+" if im > 0 else "-"
    b = abs(im)
    btext = "i" if b == 1 else f"{b}*i"
    return f"({re} {sign} {btext})", True


def _term_text(e: int, re: Fraction, im: Fraction, leading: bool) -> str:
    mono = monomial_text(e)
    neg = _is_negative(re, im)
    if neg and leading:
        ctext, _ = _coef_text(-re, -im)
        if not mono:
            return f"-{ctext}"
        return f"(-{ctext})*{mono}"
    if neg:
        re, im = -re, -im
    ctext, bare = _coef_text(re, im)
    if not mono:
        return ctext
    if re == 1 and im == 0:
        return mono
    if not bare:
        ctext = f"({ctext})"
    return f"{ctext}*{mono}"


def _laurent_text(terms: dict[int, tuple[Fraction, Fraction]]) -> str:
    parts = []
    for idx, e in enumerate(sorted(terms, reverse=True)):
        re, im = terms[e]
        if idx == 0:
            parts.append(_term_text(e, re, im, True))
        else:
            op = " - " if _is_negative(re, im) else " + "
            parts.append(op + _term_text(e, re, im, False))
    return "".join(parts)


# -- constants --------------------------------------------------------------

ZERO = Scalar._raw(_P0, _P0, _P1)
ONE = Scalar._raw(_P1, _P0, _P1)
I = Scalar._raw(_P0, _P1, _P1)
S = Scalar.s_pow(1)
q = Scalar.s_pow(2)
Q = q + q.inverse()


def q_pow(k) -> Scalar:
    """``q**k`` for integer or half-integer ``k``."""
    e = Fraction(k) * 2
    if e.denominator != 1:
        raise ValueError(f"q-exponent {k} is not a half-integer")
    return Scalar.s_pow(int(e))


# -- module-level operations ------------------------------------------------


@dataclass(frozen=True)
class NumericValue:
    value: complex
    q0: float

    @property
    def real(self) -> float:
        return self.value.real

    @property
    def imag(self) -> float:
        return self.value.imag

    def isclose(self, other: complex, rel: float = 1e-12, abs_tol: float = 1e-12) -> bool:
        return cmath.isclose(self.value, other, rel_tol=rel, abs_tol=abs_tol)


def eval_at(x: Scalar, q0: float) -> NumericValue:
    return NumericValue(x.evaluate(float(q0)), float(q0))


def classical_limit(x: Scalar) -> Scalar:
    """Value at ``s = 1`` (i.e. ``q = 1``); :class:`PoleError` if there is a pole."""
    re, im = x.at_s(Fraction(1))
    return Scalar.gaussian(re, im)


def scalar_arith(op: str, a: Scalar, b: Scalar | None = None) -> Scalar:
    if op == "star":
        return a.star()
    if b is None:
        raise ValueError(f"operation {op!r} needs two operands")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown scalar operation {op!r}")
