"""Typed-index tensors and the spinor/vector constants of q-Minkowski space.

Storage is a numpy object array of :class:`Scalar`; every tensor carries its
index signature so contractions can refuse to pair indices of the wrong
family or variance.  Axis order always follows the written index order,
upper indices first, e.g. ``R^{db}_{ag}`` is stored as ``R[d, b, a, g]``.

Conventions (all with a = q):

* ``eps_{ab}`` has ``eps_{12} = -q^(-1/2)``, ``eps_{21} = q^(1/2)`` and
  ``eps^{ab} = -eps_{ab}``; the dotted metric is its transpose.
* Undotted indices are raised from the right, ``psi^a = psi_r eps^{ra}``;
  dotted indices from the left, ``psi^{a.} = eps^{a.r.} psi_{r.}``.
"""

from __future__ import annotations

import enum
import itertools as it
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .matrix import Matrix
from .scalars import I, ONE, ZERO, Q, Scalar, q_pow

__all__ = [
    "IndexKind",
    "Tensor",
    "contract",
    "constants",
    "epsilon",
    "pauli",
    "spinor_R",
    "spinor_R_matrix",
    "mixed_R_dotted_undotted",
    "mixed_R_undotted_dotted",
    "sigma_bar",
    "sigma_bar_lower",
    "quantum_metric",
    "metric_trace_alt",
    "metric_inverse_trace",
    "completeness",
    "sigma_full_trace",
    "sigma_bar_trace",
]


class IndexKind(enum.Enum):
    SPINOR_LO = ("spinor", False)
    SPINOR_UP = ("spinor", True)
    DOTTED_LO = ("dotted", False)
    DOTTED_UP = ("dotted", True)
    VECTOR_LO = ("vector", False)
    VECTOR_UP = ("vector", True)

    @property
    def family(self) -> str:
        return self.value[0]

    @property
    def upper(self) -> bool:
        return self.value[1]

    @property
    def size(self) -> int:
        return 4 if self.family == "vector" else 2

    def dual(self) -> "IndexKind":
        return IndexKind((self.family, not self.upper))


SL, SU, DL, DU, VL, VU = (
    IndexKind.SPINOR_LO,
    IndexKind.SPINOR_UP,
    IndexKind.DOTTED_LO,
    IndexKind.DOTTED_UP,
    IndexKind.VECTOR_LO,
    IndexKind.VECTOR_UP,
)


class SignatureError(ValueError):
    pass


def _zeros(shape) -> np.ndarray:
    arr = np.empty(shape, dtype=object)
    arr.fill(ZERO)
    return arr


@dataclass(frozen=True, eq=False)
class Tensor:
    signature: tuple[IndexKind, ...]
    data: np.ndarray

    def __post_init__(self):
        shape = tuple(k.size for k in self.signature)
        if self.data.shape != shape:
            raise SignatureError(f"data shape {self.data.shape} does not match signature {shape}")

    @classmethod
    def from_function(cls, signature: Sequence[IndexKind], fn: Callable[..., Scalar]) -> "Tensor":
        sig = tuple(signature)
        arr = _zeros(tuple(k.size for k in sig))
        for idx in it.product(*(range(k.size) for k in sig)):
            v = fn(*idx)
            arr[idx] = v if isinstance(v, Scalar) else Scalar(v)
        return cls(sig, arr)

    @property
    def rank(self) -> int:
        return len(self.signature)

    def __getitem__(self, idx) -> Scalar:
        return self.data[idx]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.signature == other.signature and all(
            a == b for a, b in zip(self.data.flat, other.data.flat)
        )

    __hash__ = None

    def map(self, fn: Callable[[Scalar], Scalar]) -> "Tensor":
        arr = _zeros(self.data.shape)
        for idx in np.ndindex(*self.data.shape):
            arr[idx] = fn(self.data[idx])
        return Tensor(self.signature, arr)

    def scale(self, c: Scalar) -> "Tensor":
        return self.map(lambda v: c * v)

    def __add__(self, other: "Tensor") -> "Tensor":
        if self.signature != other.signature:
            raise SignatureError("cannot add tensors with different signatures")
        return Tensor(self.signature, self.data + other.data)

    def __sub__(self, other: "Tensor") -> "Tensor":
        if self.signature != other.signature:
            raise SignatureError("cannot subtract tensors with different signatures")
        return Tensor(self.signature, self.data - other.data)

    def is_zero(self) -> bool:
        return all(not v for v in self.data.flat)

    def transpose(self, perm: Sequence[int]) -> "Tensor":
        if sorted(perm) != list(range(self.rank)):
            raise SignatureError(f"{list(perm)} is not a permutation of {self.rank} axes")
        return Tensor(tuple(self.signature[p] for p in perm), np.transpose(self.data, perm))

    def to_matrix(self, row_axes: Sequence[int], col_axes: Sequence[int]) -> Matrix:
        """Flatten into a matrix; row/col multi-indices are read big-endian."""
        perm = list(row_axes) + list(col_axes)
        if sorted(perm) != list(range(self.rank)):
            raise SignatureError("row and column axes must partition the indices")
        nr = int(np.prod([self.signature[a].size for a in row_axes])) if row_axes else 1
        nc = int(np.prod([self.signature[a].size for a in col_axes])) if col_axes else 1
        flat = np.transpose(self.data, perm).reshape(nr, nc)
        return Matrix.from_function(nr, nc, lambda i, j: flat[i, j])

    def to_json(self) -> dict:
        return {
            "signature": [k.name for k in self.signature],
            "entries": [str(v) for v in self.data.flat],
        }

    def __str__(self) -> str:
        lines = []
        for idx in np.ndindex(*self.data.shape):
            lines.append(" ".join(str(i) for i in idx) + " " + str(self.data[idx]))
        return "\n".join(lines)


def contract(a: Tensor, b: Tensor, pairs: Sequence[tuple[int, int]]) -> Tensor:
    """Sum over index pairs ``(i in a, j in b)``; free indices keep their order."""
    for i, j in pairs:
        ka, kb = a.signature[i], b.signature[j]
        if ka.family != kb.family or ka.upper == kb.upper:
            raise SignatureError(f"cannot contract {ka.name} with {kb.name}")
    ia = [p[0] for p in pairs]
    ib = [p[1] for p in pairs]
    data = np.tensordot(a.data, b.data, axes=(ia, ib)) if pairs else np.multiply.outer(a.data, b.data)
    sig = tuple(k for n, k in enumerate(a.signature) if n not in ia) + tuple(
        k for n, k in enumerate(b.signature) if n not in ib
    )
    if not sig:
        data = np.array(data, dtype=object).reshape(())
    data = _normalize(data)
    return Tensor(sig, data)


def _normalize(arr) -> np.ndarray:
    # tensordot leaves plain ints where a sum was empty
    arr = np.array(arr, dtype=object)
    for idx in np.ndindex(*arr.shape):
        v = arr[idx]
        if not isinstance(v, Scalar):
            arr[idx] = Scalar(v)
    return arr


# -- constants ------------------------------------------------------------------

_SQ = q_pow("1/2")
_SQI = q_pow("-1/2")


@lru_cache(maxsize=None)
def epsilon(kind: IndexKind) -> Tensor:
    """Spinor metric of the given family and variance (both indices alike)."""
    m = [[ZERO, -_SQI], [_SQ, ZERO]]  # eps_{ab}
    if kind == SL:
        fn = lambda a, b: m[a][b]
    elif kind == SU:
        fn = lambda a, b: -m[a][b]
    elif kind == DL:
        fn = lambda a, b: m[b][a]
    elif kind == DU:
        fn = lambda a, b: -m[b][a]
    else:
        raise SignatureError("epsilon is defined for spinor families only")
    return Tensor.from_function((kind, kind), fn)


@lru_cache(maxsize=None)
def pauli() -> Tensor:
    """``sigma^I_{a b.}`` with sigma^3 = diag(q, -1/q)."""
    qq = q_pow(1)
    mats = [
        [[ONE, ZERO], [ZERO, ONE]],
        [[ZERO, ONE], [ONE, ZERO]],
        [[ZERO, -I], [I, ZERO]],
        [[qq, ZERO], [ZERO, -qq.inverse()]],
    ]
    return Tensor.from_function((VU, SL, DL), lambda n, a, b: mats[n][a][b])


def constants() -> dict[str, Tensor]:
    return {
        "eps_lo": epsilon(SL),
        "eps_up": epsilon(SU),
        "eps_dot_lo": epsilon(DL),
        "eps_dot_up": epsilon(DU),
        "sigma": pauli(),
        "R+": spinor_R(+1),
        "R-": spinor_R(-1),
        "sigma_bar+": sigma_bar(+1),
        "sigma_bar-": sigma_bar(-1),
        "G+": quantum_metric(+1)[0],
        "G+_inv": quantum_metric(+1)[1],
        "G-": quantum_metric(-1)[0],
        "G-_inv": quantum_metric(-1)[1],
    }


def _sign(sign: int) -> int:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return sign


@lru_cache(maxsize=None)
def spinor_R(sign: int) -> Tensor:
    """``R^{+-db}_{ag} = delta^d_a delta^b_g + q^{+-1} eps^{db} eps_{ag}``."""
    qs = q_pow(_sign(sign))
    eu, el = epsilon(SU), epsilon(SL)

    def fn(d, b, a, g):
        v = qs * eu[d, b] * el[a, g]
        return v + ONE if (d == a and b == g) else v

    return Tensor.from_function((SU, SU, SL, SL), fn)


def spinor_R_matrix(sign: int) -> Matrix:
    """Rows ``(a, g)``, columns ``(d, b)``; products compose as braid matrices."""
    return spinor_R(sign).to_matrix((2, 3), (0, 1))


@lru_cache(maxsize=None)
def mixed_R_dotted_undotted(sign: int) -> Tensor:
    """``R^{+-d.b}_{a g.}``, the value of f_{+-a}^b on a dotted generator.

    Fixed by ``R^{+-d.b}_{a g.} = q^{+-1/2} R^{-+ b g}_{d a}`` with the dotted
    labels read as undotted ones.
    """
    sg = _sign(sign)
    r = spinor_R(-sg)
    c = q_pow(f"{sg}/2")
    return Tensor.from_function((DU, SU, SL, DL), lambda d, b, a, g: c * r[b, g, d, a])


@lru_cache(maxsize=None)
def mixed_R_undotted_dotted(sign: int) -> Tensor:
    """``R^{+-s r.}_{l. n}`` from eps-conjugating the dotted-undotted matrix of opposite sign."""
    rdu = mixed_R_dotted_undotted(-_sign(sign))
    el, eu = epsilon(DL), epsilon(DU)

    def fn(s, rd, ld, n):
        acc = ZERO
        for k, m in it.product(range(2), repeat=2):
            x = el[ld, k] * eu[m, rd]
            if x:
                acc = acc + x * rdu[k, s, n, m]
        return acc

    return Tensor.from_function((SU, DU, DL, SL), fn)


@lru_cache(maxsize=None)
def sigma_bar(sign: int) -> Tensor:
    """``sigmabar_{+-}^{J a. b} = eps^{a. l.} R^{-+ s r.}_{l. n} eps^{n b} sigma^J_{s r.}``."""
    sg = _sign(sign)
    rud = mixed_R_undotted_dotted(-sg)
    edu, eu, sig = epsilon(DU), epsilon(SU), pauli()

    def fn(J, ad, b):
        acc = ZERO
        for ld, s, rd, n in it.product(range(2), repeat=4):
            x = edu[ad, ld] * eu[n, b] * sig[J, s, rd]
            if x:
                acc = acc + x * rud[s, rd, ld, n]
        return acc

    return Tensor.from_function((VU, DU, SU), fn)


@lru_cache(maxsize=None)
def quantum_metric(sign: int = 1) -> tuple[Tensor, Tensor]:
    """``(G^{IJ}, G_{IJ})`` from ``G^{IJ} = (1/Q) eps^{an} sigma^I_{ab.} sigmabar^{J b. g} eps_{gn}``."""
    sb, sig, eu, el = sigma_bar(sign), pauli(), epsilon(SU), epsilon(SL)
    invQ = Q.inverse()

    def fn(I_, J):
        acc = ZERO
        for a, b, g, n in it.product(range(2), repeat=4):
            x = eu[a, n] * el[g, n]
            if x:
                acc = acc + x * sig[I_, a, b] * sb[J, b, g]
        return acc * invQ

    G = Tensor.from_function((VU, VU), fn)
    inv = G.to_matrix((0,), (1,)).inverse()
    Ginv = Tensor.from_function((VL, VL), lambda i, j: inv[i, j])
    return G, Ginv


def metric_trace_alt(sign: int = 1) -> Tensor:
    """Second trace form ``(1/Q) eps_{n.g.} sigmabar^{I g. a} sigma^J_{a b.} eps^{n.b.}``."""
    sb, sig, el, eu = sigma_bar(sign), pauli(), epsilon(DL), epsilon(DU)
    invQ = Q.inverse()

    def fn(I_, J):
        acc = ZERO
        for n, g, a, b in it.product(range(2), repeat=4):
            x = el[n, g] * eu[n, b]
            if x:
                acc = acc + x * sb[I_, g, a] * sig[J, a, b]
        return acc * invQ

    return Tensor.from_function((VU, VU), fn)


@lru_cache(maxsize=None)
def sigma_bar_lower(sign: int = 1) -> Tensor:
    """``sigmabar_N^{a. b} = G_{NK} sigmabar^{K a. b}``."""
    return contract(quantum_metric(sign)[1], sigma_bar(sign), [(1, 0)])


@lru_cache(maxsize=None)
def sigma_lower(sign: int = 1) -> Tensor:
    """``sigma_{I a b.} = G_{IJ} sigma^J_{a b.}``."""
    return contract(quantum_metric(sign)[1], pauli(), [(1, 0)])


def metric_inverse_trace(sign: int = 1) -> Tensor:
    """``G_{IJ} = (1/Q) eps_{n.g.} sigmabar_J^{g. a} sigma_{I a b.} eps^{n.b.}``."""
    sbl, sl, el, eu = sigma_bar_lower(sign), sigma_lower(sign), epsilon(DL), epsilon(DU)
    invQ = Q.inverse()

    def fn(I_, J):
        acc = ZERO
        for n, g, a, b in it.product(range(2), repeat=4):
            x = el[n, g] * eu[n, b]
            if x:
                acc = acc + x * sbl[J, g, a] * sl[I_, a, b]
        return acc * invQ

    return Tensor.from_function((VL, VL), fn)


def sigma_bar_trace(sign: int = 1) -> list[Scalar]:
    """``sum_a sigmabar_{N a. a}`` (both spinor indices lowered), one entry per N."""
    sbl, el, ed = sigma_bar_lower(sign), epsilon(SL), epsilon(DL)
    out = []
    for N in range(4):
        acc = ZERO
        for a, bd, b in it.product(range(2), repeat=3):
            acc = acc + ed[a, bd] * sbl[N, bd, b] * el[b, a]
        out.append(acc)
    return out


def sigma_full_trace() -> list[Scalar]:
    """``sum_d sigma^{N d d.}`` with both spinor indices raised, one entry per N."""
    sig, eu, edu = pauli(), epsilon(SU), epsilon(DU)
    out = []
    for N in range(4):
        acc = ZERO
        for d, r, s in it.product(range(2), repeat=3):
            acc = acc + edu[d, r] * sig[N, s, r] * eu[s, d]
        out.append(acc)
    return out


def completeness(sign: int = 1) -> tuple[Tensor, Tensor]:
    """The two completeness contractions, as tensors to compare with ``Q delta delta``.

    First:  ``sigma^{I b.}_a sigmabar_{I r.}^{s}`` indexed ``[a, b., r., s]``.
    Second: ``sigma_{I b.}^{a} sigmabar^{I r.}_{s}`` indexed ``[b., a, r., s]``.
    """
    sig, sbl, sb = pauli(), sigma_bar_lower(sign), sigma_bar(sign)
    sl = sigma_lower(sign)
    eu, el, edu, edl = epsilon(SU), epsilon(SL), epsilon(DU), epsilon(DL)
    r2 = range(2)

    def first(a, bd, rd, s):
        acc = ZERO
        for I_, x, y in it.product(range(4), r2, r2):
            c = edu[bd, x] * edl[rd, y]
            if c:
                acc = acc + c * sig[I_, a, x] * sbl[I_, y, s]
        return acc

    def second(bd, a, rd, s):
        acc = ZERO
        for I_, x, y in it.product(range(4), r2, r2):
            c = eu[x, a] * el[y, s]
            if c:
                acc = acc + c * sl[I_, x, bd] * sb[I_, rd, y]
        return acc

    return (
        Tensor.from_function((SL, DU, DL, SU), first),
        Tensor.from_function((DL, SU, DU, SL), second),
    )
