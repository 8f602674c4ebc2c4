"""Dual functionals on quantum SL(2,C) words and the Lorentz braid matrix.

A functional ``f_{+-a}^b`` is a 2x2-matrix valued character: its value on a
product of generators is the matrix product of the generator values.  The
convolution ``(g * h)(w) = sum g(w1) h(w2)`` runs over the matrix coproduct
``Delta(M_a^b) = sum_c M_a^c (x) M_c^b`` applied letter by letter.

On generators (a = q, the a^(-+1/2) normalisation):

* ``f_{+-a}^b(M_g^d)     = q^(-+1/2) R^{+-db}_{ag}``
* ``f_{+-a}^b(M_g.^d.)   = R^{+-d.b}_{a g.}``        (mixed R, see tensors)
* ``f_{+-a}^b(S(M_x^y))  = R^{+-x.b}_{a y.}``
* ``f_{+-a}^b(S(M_g.^d.)) = eps_{g.r.} f_{+-a}^b(M_s.^r.) eps^{s.d.}``

``F_{+-K}^M`` is then ``(1/Q) sigmabar_{K a.}^d sigma^{M b.}_g`` times the
convolution of ``ft_{-+b.}^{a.} = f_{-+a}^b`` with ``f_{+-d}^g``.
"""

from __future__ import annotations

import itertools as it
from fractions import Fraction
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .matrix import Matrix
from .ncpoly import NCPoly
from .scalars import ONE, ZERO, Q, Scalar, q_pow
from .tensors import (
    DL,
    DU,
    SL,
    SU,
    epsilon,
    mixed_R_dotted_undotted,
    pauli,
    quantum_metric,
    sigma_bar_lower,
    spinor_R,
)

R2 = range(2)
R4 = range(4)

__all__ = [
    "GenSymbol",
    "MWord",
    "FunctionalId",
    "UndefinedValueError",
    "gen",
    "dotted",
    "antipode",
    "eval_f",
    "f_matrix",
    "eval_F",
    "counit",
    "coproduct",
    "star_word",
    "lambda_expansion",
    "big_R",
    "big_R_matrix",
    "double_F",
    "derive_coordinate_relations",
]


class UndefinedValueError(ValueError):
    """A functional has no generator value for this symbol."""


@dataclass(frozen=True, order=True)
class GenSymbol:
    dotted: bool
    lower: int
    upper: int
    antipode: int = 0

    def __post_init__(self):
        if self.lower not in R2 or self.upper not in R2:
            raise ValueError("spinor indices are 0 or 1")
        if self.antipode < 0:
            raise ValueError("antipode depth must be non-negative")

    def __str__(self) -> str:
        name = "Mb" if self.dotted else "M"
        core = f"{name}_{self.lower + 1}^{self.upper + 1}"
        for _ in range(self.antipode):
            core = f"S({core})"
        return core

    def star(self) -> "GenSymbol":
        if self.antipode:
            raise UndefinedValueError("star of an antipode symbol is not modelled")
        return GenSymbol(not self.dotted, self.lower, self.upper)


MWord = tuple[GenSymbol, ...]


def gen(lower: int, upper: int) -> GenSymbol:
    return GenSymbol(False, lower, upper)


def dotted(lower: int, upper: int) -> GenSymbol:
    return GenSymbol(True, lower, upper)


def antipode(g: GenSymbol) -> GenSymbol:
    return GenSymbol(g.dotted, g.lower, g.upper, g.antipode + 1)


@dataclass(frozen=True)
class FunctionalId:
    """``name`` in {"f", "ft", "F"}; ``dotted_labels`` only matters for f/ft."""

    name: str
    sign: int
    lower: int
    upper: int
    dotted_labels: bool = False

    def __post_init__(self):
        if self.name not in ("f", "ft", "F"):
            raise ValueError(f"unknown functional {self.name!r}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        rng = R4 if self.name == "F" else R2
        if self.lower not in rng or self.upper not in rng:
            raise ValueError("functional index out of range")


# -- generator values -----------------------------------------------------------


@lru_cache(maxsize=None)
def _generator_matrix(sign: int, g: GenSymbol) -> tuple[tuple[Scalar, ...], ...]:
    """2x2 matrix ``[a][b] -> f_{sign a}^b(g)``."""
    if g.antipode > 1:
        raise UndefinedValueError(f"no value of f on {g} (antipode depth > 1)")
    mixed = mixed_R_dotted_undotted(sign)
    if not g.dotted and g.antipode == 0:
        r = spinor_R(sign)
        c = q_pow(Fraction(-sign, 2))
        m = [[c * r[g.upper, b, a, g.lower] for b in R2] for a in R2]
    elif g.dotted and g.antipode == 0:
        m = [[mixed[g.upper, b, a, g.lower] for b in R2] for a in R2]
    elif not g.dotted:
        m = [[mixed[g.lower, b, a, g.upper] for b in R2] for a in R2]
    else:
        el, eu = epsilon(DL), epsilon(DU)
        m = [
            [
                sum(
                    (el[g.lower, r] * mixed[r, b, a, s] * eu[s, g.upper] for r in R2 for s in R2),
                    ZERO,
                )
                for b in R2
            ]
            for a in R2
        ]
    return tuple(tuple(row) for row in m)


@lru_cache(maxsize=None)
def f_matrix(sign: int, word: MWord) -> tuple[tuple[Scalar, ...], ...]:
    """Matrix of ``f_{sign a}^b(word)`` (identity on the empty word)."""
    if not word:
        return ((ONE, ZERO), (ZERO, ONE))
    head = f_matrix(sign, word[:-1])
    last = _generator_matrix(sign, word[-1])
    return tuple(tuple(sum((head[a][c] * last[c][b] for c in R2), ZERO) for b in R2) for a in R2)


def _ft_matrix(sign: int, word: MWord, dotted_labels: bool):
    f = f_matrix(sign, word)
    if dotted_labels:
        # ft_{a.}^{b.} = f_b^a
        return [[f[b][a] for b in R2] for a in R2]
    # ft_k^m = eps_{ka} f_b^a eps^{bm}
    el, eu = epsilon(SL), epsilon(SU)
    return [
        [sum((el[k, a] * f[b][a] * eu[b, m] for a in R2 for b in R2), ZERO) for m in R2]
        for k in R2
    ]


def eval_f(fid: FunctionalId, word: Sequence[GenSymbol]) -> Scalar:
    """Value of an f or ft functional on a word of generators."""
    w = tuple(word)
    if fid.name == "F":
        return eval_F(fid.sign, fid.lower, fid.upper, w)
    if fid.name == "f":
        if not fid.dotted_labels:
            return f_matrix(fid.sign, w)[fid.lower][fid.upper]
        # f_{a.}^{b.} = ft_b^a (undotted ft)
        return _ft_matrix(fid.sign, w, False)[fid.upper][fid.lower]
    return _ft_matrix(fid.sign, w, fid.dotted_labels)[fid.lower][fid.upper]


# -- Hopf structure on words ------------------------------------------------------


def counit(word: Iterable[GenSymbol]) -> Scalar:
    # eps(S(x)) = eps(x), so antipode letters need no special case
    for g in word:
        if g.lower != g.upper:
            return ZERO
    return ONE


def coproduct(word: MWord) -> list[tuple[MWord, MWord]]:
    """All index splits of ``Delta(word)``; antipode letters are not split."""
    splits: list[tuple[MWord, MWord]] = [((), ())]
    for g in word:
        if g.antipode:
            raise UndefinedValueError("coproduct of antipode letters is not modelled")
        nxt = []
        for left, right in splits:
            for c in R2:
                nxt.append(
                    (left + (GenSymbol(g.dotted, g.lower, c),), right + (GenSymbol(g.dotted, c, g.upper),))
                )
        splits = nxt
    return splits


def star_word(word: MWord) -> MWord:
    return tuple(g.star() for g in reversed(word))


# -- F and the Lorentz braid matrix -------------------------------------------------


@lru_cache(maxsize=None)
def _F_weights(sign: int) -> dict:
    """Nonzero ``sigmabar_{K a.}^d sigma^{M b.}_g / Q`` keyed by (K, M)."""
    sbl = sigma_bar_lower(1)
    sig = pauli()
    el, eu = epsilon(DL), epsilon(DU)
    invQ = Q.inverse()
    out = {}
    for K, M in it.product(R4, R4):
        terms = []
        for ad, bd, d, g in it.product(R2, repeat=4):
            left = sum((el[ad, x] * sbl[K, x, d] for x in R2), ZERO)
            right = sum((eu[bd, r] * sig[M, g, r] for r in R2), ZERO)
            c = left * right
            if c:
                terms.append((ad, bd, d, g, c * invQ))
        out[K, M] = terms
    return out


@lru_cache(maxsize=None)
def eval_F(sign: int, K: int, M: int, word: MWord) -> Scalar:
    """``F_{sign K}^M`` on a word; ``delta_K^M`` on the empty word."""
    word = tuple(word)
    if not word:
        return ONE if K == M else ZERO
    total = ZERO
    weights = _F_weights(sign)[K, M]
    for w1, w2 in coproduct(word):
        ft = f_matrix(-sign, w1)  # ft_{-+b.}^{a.}(w1) = f_{-+a}^b(w1)
        fw = f_matrix(sign, w2)
        for ad, bd, d, g, c in weights:
            x = ft[ad][bd]
            if x:
                y = fw[d][g]
                if y:
                    total = total + c * x * y
    return total


@lru_cache(maxsize=None)
def lambda_expansion(N: int, M: int) -> tuple[tuple[Scalar, MWord], ...]:
    """``Lambda_N^M`` as a combination of words ``M_a^s Mb_b.^r.``."""
    sbl = sigma_bar_lower(1)
    sig = pauli()
    el, eu = epsilon(DL), epsilon(DU)
    invQ = Q.inverse()
    acc: dict[MWord, Scalar] = {}
    for gd, dd, a, s, rd, bd in it.product(R2, repeat=6):
        c = el[gd, dd] * eu[gd, bd]
        if not c:
            continue
        c = c * sbl[N, dd, a] * sig[M, s, rd]
        if c:
            w = (gen(a, s), dotted(bd, rd))
            acc[w] = acc.get(w, ZERO) + c * invQ
    return tuple((c, w) for w, c in sorted(acc.items()) if c)


def apply_functional(fn, expansion) -> Scalar:
    return sum((c * fn(w) for c, w in expansion), ZERO)


@lru_cache(maxsize=None)
def big_R(sign: int = 1) -> dict[tuple[int, int, int, int], Scalar]:
    """``R^{NM}_{KL} = F_{sign K}^M(Lambda_L^N)`` keyed ``(N, M, K, L)``."""
    out = {}
    for N, M, K, L in it.product(R4, repeat=4):
        out[N, M, K, L] = apply_functional(lambda w: eval_F(sign, K, M, w), lambda_expansion(L, N))
    return out


@lru_cache(maxsize=None)
def big_R_matrix(sign: int = 1) -> Matrix:
    """16x16 braid matrix, row ``4K+L``, column ``4N+M``."""
    R = big_R(sign)
    return Matrix.from_function(16, 16, lambda r, c: R[c // 4, c % 4, r // 4, r % 4])


def double_F(sign: int, K: int, L: int, word: MWord) -> Scalar:
    """``G^{MN} (F_N^L * F_M^K)(word)``; should equal ``G^{KL} eps(word)``."""
    G = quantum_metric(sign)[0]
    total = ZERO
    for w1, w2 in coproduct(tuple(word)):
        for M, N in it.product(R4, R4):
            g = G[M, N]
            if g:
                a = eval_F(sign, N, L, w1)
                if a:
                    total = total + g * a * eval_F(sign, M, K, w2)
    return total


# -- coordinate relations ------------------------------------------------------------

_X_NAMES = ("X0", "X1", "X2", "X3")


def _x_in_z_basis() -> list[NCPoly]:
    from .parsing import parse_expression

    return [parse_expression(n) for n in _X_NAMES]


def raw_coordinate_relations(sign: int = 1) -> list[NCPoly]:
    """The 16 polynomials ``X_L X_K - R^{NM}_{LK} X_N X_M`` in Cartesian words."""
    R = big_R(sign)
    rels = []
    for L, K in it.product(R4, R4):
        terms = {(_X_NAMES[L], _X_NAMES[K]): ONE}
        for N, M in it.product(R4, R4):
            c = R[N, M, L, K]
            if c:
                w = (_X_NAMES[N], _X_NAMES[M])
                terms[w] = terms.get(w, ZERO) - c
        rels.append(NCPoly(terms))
    return rels


def derive_coordinate_relations(order: Sequence[str] = ("X0", "Tau2", "Zb", "Z", "X3")) -> list[NCPoly]:
    """Independent relations from the braid matrix, in the Z/Zb basis.

    Returned in reduced form: each polynomial is ``w - (normal words)`` where
    ``w`` is a degree-two word that is out of order for ``order``.
    """
    xs = dict(zip(_X_NAMES, _x_in_z_basis()))
    rels = [r.substitute(xs) for r in raw_coordinate_relations(1)]
    rank = {g: i for i, g in enumerate(order)}
    gens = [g for g in order if g != "Tau2"]
    words = [(a, b) for a in gens for b in gens]
    # out-of-order words first so they become pivots
    words.sort(key=lambda w: (rank[w[0]] <= rank[w[1]], [-rank[x] for x in w]))
    mat = Matrix.from_function(len(rels), len(words), lambda i, j: rels[i].coefficient(words[j]))
    red, pivots = mat.rref()
    out = []
    for i in range(len(pivots)):
        out.append(NCPoly({words[j]: red[i, j] for j in range(len(words))}))
    return out
