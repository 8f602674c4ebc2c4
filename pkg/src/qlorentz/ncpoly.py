"""Noncommutative polynomials over :class:`Scalar` and rewriting to normal form.

Words are tuples of generator names.  A :class:`RewriteSystem` holds oriented
rules ``lhs -> rhs`` and reduces leftmost redexes until no rule applies; the
normal form of each word is memoised, so reduction of a polynomial is linear
in its number of terms once the cache is warm.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import groupby
from typing import Iterable, Mapping

from .scalars import ONE, ZERO, Scalar

Word = tuple[str, ...]

# display ranks; unknown generators sort by name after these
GENERATOR_RANK = {
    "X0": 0,
    "Tau2": 1,
    "Zb": 2,
    "Z": 3,
    "X3": 4,
    "as": 10,
    "a": 11,
    "g": 12,
    "gs": 13,
}


def _rank(name: str):
    return (GENERATOR_RANK.get(name, 100), name)


class NCPoly:
    """Finite Scalar-linear combination of words; zero coefficients are dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, Scalar] | None = None):
        self.terms: dict[Word, Scalar] = {}
        if terms:
            for w, c in terms.items():
                c = c if isinstance(c, Scalar) else Scalar(c)
                if c:
                    self.terms[tuple(w)] = c

    @classmethod
    def gen(cls, name: str) -> "NCPoly":
        return cls({(name,): ONE})

    @classmethod
    def const(cls, c) -> "NCPoly":
        return cls({(): c if isinstance(c, Scalar) else Scalar(c)})

    @classmethod
    def word(cls, *names: str, coeff: Scalar = ONE) -> "NCPoly":
        return cls({tuple(names): coeff})

    @staticmethod
    def _coerce(other) -> "NCPoly | None":
        if isinstance(other, NCPoly):
            return other
        if isinstance(other, Scalar) or isinstance(other, int):
            return NCPoly.const(other)
        try:
            return NCPoly.const(Scalar(other))
        except TypeError:
            return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        _accumulate(out, o.terms, ONE)
        return NCPoly._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly._from_clean({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        _accumulate(out, o.terms, -ONE)
        return NCPoly._from_clean(out)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (Scalar, int)):
            c = other if isinstance(other, Scalar) else Scalar(other)
            return self.scale(c)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[Word, Scalar] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in o.terms.items():
                w = w1 + w2
                out[w] = out.get(w, ZERO) + c1 * c2
        return NCPoly(out)

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            c = other if isinstance(other, Scalar) else Scalar(other)
            return self.scale(c)
        return NotImplemented

    def __pow__(self, n: int):
        out = NCPoly.const(ONE)
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c: Scalar) -> "NCPoly":
        if not c:
            return NCPoly()
        return NCPoly._from_clean({w: c * v for w, v in self.terms.items()})

    @classmethod
    def _from_clean(cls, terms: dict[Word, Scalar]) -> "NCPoly":
        obj = cls.__new__(cls)
        obj.terms = {w: c for w, c in terms.items() if c}
        return obj

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, word: Iterable[str]) -> Scalar:
        return self.terms.get(tuple(word), ZERO)

    def generators(self) -> set[str]:
        return {g for w in self.terms for g in w}

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def is_scalar(self) -> bool:
        return all(len(w) == 0 for w in self.terms)

    def scalar_value(self) -> Scalar:
        if not self.is_scalar():
            raise ValueError(f"{self} is not a scalar")
        return self.terms.get((), ZERO)

    def map_coefficients(self, fn) -> "NCPoly":
        return NCPoly({w: fn(c) for w, c in self.terms.items()})

    def substitute(self, mapping: Mapping[str, "NCPoly"]) -> "NCPoly":
        """Replace generators by polynomials (generators not in ``mapping`` stay)."""
        out = NCPoly()
        for w, c in self.terms.items():
            acc = NCPoly.const(c)
            for g in w:
                acc = acc * (mapping[g] if g in mapping else NCPoly.gen(g))
            out = out + acc
        return out

    def sorted_terms(self) -> list[tuple[Word, Scalar]]:
        return sorted(
            self.terms.items(),
            key=lambda t: (len(t[0]), [_rank(g) for g in t[0]]),
            reverse=True,
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for idx, (w, c) in enumerate(self.sorted_terms()):
            wtext = word_text(w)
            if _leading_negative(c):
                parts.append(" - " if idx else "-")
                c = -c
            elif idx:
                parts.append(" + ")
            parts.append(_coefficient_times(c, wtext))
        return "".join(parts)

    def __repr__(self) -> str:
        return f"NCPoly('{self}')"


def _leading_negative(c: Scalar) -> bool:
    num, _, _ = c.laurent_parts()
    re, im = num[max(num)]
    return re < 0 or (re == 0 and im < 0)


def _coefficient_times(c: Scalar, wtext: str) -> str:
    if not wtext:
        ctext = str(c)
        return ctext if c.is_monomial() or len(c.laurent_parts()[0]) <= 1 else f"({ctext})"
    if c == ONE:
        return wtext
    ctext = str(c)
    if not c.is_monomial() or ctext.startswith("-") or "/" in _Q_POWER.sub("", ctext):
        ctext = f"({ctext})"
    return f"{ctext}*{wtext}"


_Q_POWER = re.compile(r"q\^\([^)]*\)")


def word_text(w: Word) -> str:
    parts = []
    for g, run in groupby(w):
        n = len(list(run))
        parts.append(g if n == 1 else f"{g}^{n}")
    return "*".join(parts)


def _accumulate(out: dict[Word, Scalar], terms: Mapping[Word, Scalar], c: Scalar) -> None:
    for w, v in terms.items():
        x = v if c == ONE else c * v
        out[w] = out.get(w, ZERO) + x


# -- rewriting ---------------------------------------------------------------


@dataclass(frozen=True)
class Rule:
    lhs: Word
    rhs: NCPoly

    def __str__(self) -> str:
        return f"{word_text(self.lhs)} -> {self.rhs}"


@dataclass
class CriticalPair:
    overlap: Word
    left: NCPoly
    right: NCPoly

    @property
    def resolved(self) -> bool:
        return self.left == self.right


@dataclass
class ConfluenceReport:
    max_degree: int
    pairs: list[CriticalPair] = field(default_factory=list)

    @property
    def unresolved(self) -> list[CriticalPair]:
        return [p for p in self.pairs if not p.resolved]

    @property
    def ok(self) -> bool:
        return not self.unresolved


class RewriteSystem:
    """Oriented rules reduced leftmost-first to a fixpoint.

    Termination is the caller's responsibility (the rule set must be
    compatible with some well-founded order on words).
    """

    def __init__(self, rules: Iterable[Rule], name: str = ""):
        self.rules: dict[Word, NCPoly] = {}
        for r in rules:
            if r.lhs in self.rules:
                raise ValueError(f"duplicate rule for {word_text(r.lhs)}")
            self.rules[r.lhs] = r.rhs
        self.name = name
        self._lengths = sorted({len(l) for l in self.rules})
        self._cache: dict[Word, dict[Word, Scalar]] = {}

    def __iter__(self):
        return (Rule(l, r) for l, r in self.rules.items())

    def find_redex(self, w: Word) -> tuple[int, Word] | None:
        for i in range(len(w)):
            for n in self._lengths:
                if i + n <= len(w) and w[i : i + n] in self.rules:
                    return i, w[i : i + n]
        return None

    def is_normal(self, w: Word) -> bool:
        return self.find_redex(w) is None

    def _nf_word(self, w: Word) -> dict[Word, Scalar]:
        hit = self._cache.get(w)
        if hit is not None:
            return hit
        redex = self.find_redex(w)
        if redex is None:
            result = {w: ONE}
        else:
            i, lhs = redex
            result = {}
            for rw, rc in self.rules[lhs].terms.items():
                _accumulate(result, self._nf_word(w[:i] + rw + w[i + len(lhs) :]), rc)
            result = {k: v for k, v in result.items() if v}
        self._cache[w] = result
        return result

    def normal_form(self, p: NCPoly) -> NCPoly:
        out: dict[Word, Scalar] = {}
        for w, c in p.terms.items():
            _accumulate(out, self._nf_word(w), c)
        return NCPoly._from_clean(out)

    __call__ = normal_form

    def rewrite_at(self, w: Word, pos: int, lhs: Word) -> NCPoly:
        """Apply the rule for ``lhs`` once, at position ``pos`` of ``w``."""
        if w[pos : pos + len(lhs)] != lhs:
            raise ValueError(f"{word_text(lhs)} does not occur at {pos} in {word_text(w)}")
        rhs = self.rules[lhs]
        return NCPoly({w[:pos] + rw + w[pos + len(lhs) :]: c for rw, c in rhs.terms.items()})

    def overlaps(self, max_degree: int) -> list[tuple[Word, tuple[int, Word], tuple[int, Word]]]:
        """Overlap and inclusion ambiguities between rule left-hand sides."""
        found = []
        lhss = list(self.rules)
        for u in lhss:
            for v in lhss:
                for k in range(1, min(len(u), len(v))):
                    if u[-k:] == v[:k]:
                        w = u + v[k:]
                        if len(w) <= max_degree:
                            found.append((w, (0, u), (len(u) - k, v)))
                if u != v and len(v) < len(u):
                    for i in range(len(u) - len(v) + 1):
                        if u[i : i + len(v)] == v:
                            found.append((u, (0, u), (i, v)))
        return found

    def confluence(self, max_degree: int = 3) -> ConfluenceReport:
        report = ConfluenceReport(max_degree)
        for w, (i, u), (j, v) in self.overlaps(max_degree):
            left = self.normal_form(self.rewrite_at(w, i, u))
            right = self.normal_form(self.rewrite_at(w, j, v))
            report.pairs.append(CriticalPair(w, left, right))
        return report
