"""The q-Minkowski coordinate algebra: normal ordering, Casimir, ladder maps.

Generators are ``X0, Tau2, Zb, Z, X3`` with ``Z = X1 + i X2`` and
``Zb = X1 - i X2``; normal words list them in exactly that order.  ``Tau2``
is a formal central symbol for the Casimir value, so identities that use
it are checked after substituting :func:`casimir` for it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .ncpoly import ConfluenceReport, NCPoly, Rule, RewriteSystem, Word
from .scalars import I, ONE, Q, Scalar, classical_limit, q_pow

ORDER = ("X0", "Tau2", "Zb", "Z", "X3")
COMMUTING = ("X0", "Tau2")

X0, TAU2, ZB, Z, X3 = (NCPoly.gen(g) for g in ORDER)

_q = q_pow(1)
_qi = q_pow(-1)
LAMBDA = _q - _qi  # q - q^-1


def coordinate_rules(x3z_coefficient: Scalar | None = None) -> list[Rule]:
    """Oriented commutation relations.

    ``x3z_coefficient`` replaces the ``q^2`` of ``X3 Z -> q^2 Z X3 + ...``;
    it exists only to build deliberately inconsistent systems.
    """
    c = _q * _q if x3z_coefficient is None else x3z_coefficient
    rules = [Rule(("Tau2", "X0"), X0 * TAU2)]
    for g in ("Zb", "Z", "X3"):
        gp = NCPoly.gen(g)
        rules.append(Rule((g, "X0"), X0 * gp))
        rules.append(Rule((g, "Tau2"), TAU2 * gp))
    rules.append(Rule(("Z", "Zb"), ZB * Z + (_q**2 - _qi**2) * (X3 * X3) + _qi * (_q**2 - _qi**2) * (X0 * X3)))
    rules.append(Rule(("X3", "Zb"), _qi**2 * (ZB * X3) - _qi**2 * LAMBDA * (X0 * ZB)))
    rules.append(Rule(("X3", "Z"), c * (Z * X3) + LAMBDA * (X0 * Z)))
    return rules


@lru_cache(maxsize=None)
def coordinate_system() -> RewriteSystem:
    return RewriteSystem(coordinate_rules(), name="q-Minkowski")


def normal_order(p: NCPoly, system: RewriteSystem | None = None) -> NCPoly:
    return (system or coordinate_system()).normal_form(p)


def termination_measure(w: Word) -> tuple[int, int, int]:
    """Lexicographic measure that every rule strictly decreases.

    (number of Z/Zb letters, inversions among Zb/Z/X3, inversions
    involving X0/Tau2).
    """
    rank = {g: i for i, g in enumerate(ORDER)}
    ladders = sum(1 for g in w if g in ("Z", "Zb"))
    inv_free = inv_central = 0
    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            if rank[w[i]] > rank[w[j]]:
                if w[i] in COMMUTING or w[j] in COMMUTING:
                    inv_central += 1
                else:
                    inv_free += 1
    return ladders, inv_free, inv_central


def rules_decrease_measure(rules: Sequence[Rule] | None = None) -> bool:
    for r in rules or coordinate_rules():
        m = termination_measure(r.lhs)
        if any(termination_measure(w) >= m for w in r.rhs.terms):
            return False
    return True


def is_normal_word(w: Word) -> bool:
    rank = {g: i for i, g in enumerate(ORDER)}
    return all(rank[a] <= rank[b] for a, b in zip(w, w[1:]))


# -- Casimir ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def casimir() -> NCPoly:
    """``q^(-3/2) X0^2 - q^(3/2)/Q Z Zb - q^(-1/2)/Q Zb Z - q^(1/2) X3^2``."""
    Qi = Q.inverse()
    return (
        q_pow(Fraction(-3, 2)) * (X0 * X0)
        - q_pow(Fraction(3, 2)) * Qi * (Z * ZB)
        - q_pow(Fraction(-1, 2)) * Qi * (ZB * Z)
        - q_pow(Fraction(1, 2)) * (X3 * X3)
    )


def commutator(a: NCPoly, b: NCPoly) -> NCPoly:
    return a * b - b * a


def central_residuals(c: NCPoly, generators: Sequence[str] = ("X0", "X3", "Z", "Zb")) -> dict[str, NCPoly]:
    return {g: normal_order(commutator(c, NCPoly.gen(g))) for g in generators}


def check_central(c: NCPoly) -> bool:
    return all(r.is_zero() for r in central_residuals(c).values())


def substitute_casimir(p: NCPoly) -> NCPoly:
    return p.substitute({"Tau2": casimir()})


# -- identity reports ---------------------------------------------------------------


@dataclass
class IdentityCheck:
    name: str
    lhs: NCPoly
    rhs: NCPoly
    difference: NCPoly = field(init=False)

    def __post_init__(self):
        self.difference = normal_order(substitute_casimir(self.lhs - self.rhs))

    @property
    def ok(self) -> bool:
        return self.difference.is_zero()


def zzbar_identities() -> list[IdentityCheck]:
    """Both Z Zb and Zb Z expressed through X0, X3 and Tau2."""
    r = q_pow(Fraction(-1, 2))
    a_rhs = _qi**2 * ((X0 + _q * X3) * (X0 - _qi * X3)) - r * TAU2
    b_rhs = _qi**2 * ((X0 + _q * X3) * (X0 - _q**3 * X3)) - r * TAU2
    return [
        IdentityCheck("ZZb", Z * ZB, a_rhs),
        IdentityCheck("ZbZ", ZB * Z, b_rhs),
    ]


def verify_zzbar() -> dict[str, IdentityCheck]:
    return {c.name: c for c in zzbar_identities()}


# -- ladder maps ------------------------------------------------------------------------


def ladder_eigenvalue(direction: str, steps: int, x3, t, q0):
    """X3 eigenvalue after ``steps`` applications of Z (``raise_n``) or Zb (``lower_m``).

    Exact when the inputs are Fractions.  The names follow the q < 1 reading
    of the ladder; for q > 1 the roles of raising and lowering swap.
    """
    if steps < 0:
        raise ValueError("steps must be non-negative")
    if q0 <= 0:
        raise ValueError("q0 must be positive")
    if direction == "raise_n":
        k = 2 * steps
    elif direction == "lower_m":
        k = -2 * steps
    else:
        raise ValueError(f"unknown ladder direction {direction!r}")
    f = q0**k
    return f * x3 + (f - 1) * t / q0


def ladder_polynomial(direction: str, n: int) -> NCPoly:
    """``q^(+-2n) X3 + q^-1 (q^(+-2n) - 1) X0``, the X3 factor after n ladder steps."""
    k = 2 * n if direction == "raise_n" else -2 * n
    f = q_pow(k)
    return f * X3 + _qi * (f - ONE) * X0


def ladder_symbolic_residual(direction: str, n: int) -> NCPoly:
    """``X3 L^n - L^n (ladder polynomial)`` in normal form, L = Z or Zb."""
    L = Z if direction == "raise_n" else ZB
    Ln = L**n
    return normal_order(X3 * Ln - Ln * ladder_polynomial(direction, n))


# -- consistency --------------------------------------------------------------------------


def confluence_check(max_degree: int = 3, x3z_coefficient: Scalar | None = None) -> ConfluenceReport:
    system = coordinate_system() if x3z_coefficient is None else RewriteSystem(coordinate_rules(x3z_coefficient))
    return system.confluence(max_degree)


def rules_as_relations(rules: Sequence[Rule] | None = None) -> list[NCPoly]:
    return [NCPoly.word(*r.lhs) - r.rhs for r in (rules or coordinate_rules())]


def relations_to_system(relations: Sequence[NCPoly]) -> RewriteSystem:
    """Orient relations that each contain exactly one out-of-order word (with coefficient 1)."""
    rules = []
    for rel in relations:
        bad = [w for w in rel.terms if not is_normal_word(w)]
        if len(bad) != 1:
            raise ValueError(f"relation {rel} does not have a unique leading word")
        w = bad[0]
        c = rel.terms[w]
        rhs = NCPoly({v: -x / c for v, x in rel.terms.items() if v != w})
        rules.append(Rule(w, rhs))
    return RewriteSystem(rules)


@dataclass
class EquivalenceReport:
    derived_residuals: list[NCPoly]
    rule_residuals: list[NCPoly]

    @property
    def ok(self) -> bool:
        return all(r.is_zero() for r in self.derived_residuals + self.rule_residuals)


def compare_with_derived(derived: Sequence[NCPoly]) -> EquivalenceReport:
    """Mutual reduction between derived relations and the hard-coded rules.

    The commuting rules for Tau2 have no counterpart in the braid relations
    (Tau2 is not a coordinate), so only coordinate rules are compared.
    """
    forward = [normal_order(r) for r in derived]
    back_system = relations_to_system(derived)
    coord_rules = [r for r in coordinate_rules() if "Tau2" not in r.lhs]
    backward = [back_system.normal_form(rel) for rel in rules_as_relations(coord_rules)]
    return EquivalenceReport(forward, backward)


# -- classical limit ------------------------------------------------------------------------


def to_cartesian(p: NCPoly) -> NCPoly:
    """Rewrite Z, Zb through X1, X2."""
    x1, x2 = NCPoly.gen("X1"), NCPoly.gen("X2")
    return p.substitute({"Z": x1 + I * x2, "Zb": x1 - I * x2})


def classical_limit_poly(p: NCPoly) -> NCPoly:
    return p.map_coefficients(classical_limit)
