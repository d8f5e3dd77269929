"""Exact Laurent polynomials over the integers in variables ``Y[s,l]``.

A polynomial is a sparse map from monomials to Python ints.  A monomial is a
tuple of ``((s, l), exponent)`` pairs sorted by ``(s, l)`` with no zero
exponents, so structural equality of the term map is polynomial equality.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Mapping

Var = tuple[int, int]
Monomial = tuple[tuple[Var, int], ...]

ONE_MONOMIAL: Monomial = ()


class MissingAssignment(KeyError):
    """A variable of the polynomial has no value in the evaluation point."""


class ZeroValue(ValueError):
    """An evaluation point assigns zero to a variable."""


class VariableRangeError(ValueError):
    """A variable reference lies outside the ambient word."""


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        f = exps.get(v, 0) + e
        if f:
            exps[v] = f
        else:
            del exps[v]
    return tuple(sorted(exps.items()))


def mono_mul_var(a: Monomial, v: Var, e: int) -> Monomial:
    """``a * v^e`` for a single variable, without rebuilding a dict."""
    if not e:
        return a
    for idx, (u, f) in enumerate(a):
        if u == v:
            g = f + e
            if g:
                return a[:idx] + ((v, g),) + a[idx + 1:]
            return a[:idx] + a[idx + 1:]
        if u > v:
            return a[:idx] + ((v, e),) + a[idx:]
    return a + ((v, e),)


def mono_pow(a: Monomial, n: int) -> Monomial:
    if n == 0:
        return ONE_MONOMIAL
    return tuple((v, e * n) for v, e in a)


def mono_degree(a: Monomial) -> int:
    return sum(e for _, e in a)


class LaurentPoly:
    """Immutable integer Laurent polynomial.

    Arithmetic with ``int`` operands is supported on both sides; anything
    else returns ``NotImplemented`` so that richer coefficient rings can
    coerce a ``LaurentPoly`` through their reflected operators.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        if terms:
            self._terms = {m: int(c) for m, c in terms.items() if c}
        else:
            self._terms = {}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({ONE_MONOMIAL: int(c)} if c else {})

    @classmethod
    def var(cls, s: int, l: int, exp: int = 1) -> "LaurentPoly":
        """The monomial ``Y[s,l]^exp`` with no range checking."""
        if exp == 0:
            return cls.const(1)
        return cls._raw({(((s, l), exp),): 1})

    @classmethod
    def monomial(cls, exps: Mapping[Var, int], coeff: int = 1) -> "LaurentPoly":
        mono = tuple(sorted((v, e) for v, e in exps.items() if e))
        return cls._raw({mono: int(coeff)} if coeff else {})

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE_MONOMIAL in self._terms)

    def variables(self) -> list[Var]:
        vs = {v for m in self._terms for v, _ in m}
        return sorted(vs)

    def coefficients(self) -> list[int]:
        return list(self._terms.values())

    @staticmethod
    def _coerce(other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        if len(q._terms) > len(self._terms):
            small, big = self._terms, q._terms
        else:
            small, big = q._terms, self._terms
        out = dict(big)
        for m, c in small.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in q._terms.items():
                m = mono_mul(m1, m2)
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if self.is_monomial():
            (m, c), = self._terms.items()
            return LaurentPoly._raw({mono_pow(m, n): c ** n})
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, mono: Monomial, coeff: int = 1) -> "LaurentPoly":
        """Multiply by the single term ``coeff * mono``; no like terms can merge."""
        if not coeff:
            return ZERO
        if not mono:
            return self if coeff == 1 else LaurentPoly._raw({m: c * coeff for m, c in self._terms.items()})
        return LaurentPoly._raw({mono_mul(m, mono): c * coeff for m, c in self._terms.items()})

    def inverse(self) -> "LaurentPoly":
        """Inverse of a unit, i.e. a monomial with coefficient +-1."""
        if not self.is_monomial():
            raise ZeroDivisionError("only monomials with unit coefficient are invertible")
        (m, c), = self._terms.items()
        if c not in (1, -1):
            raise ZeroDivisionError(f"coefficient {c} is not a unit in Z")
        return LaurentPoly._raw({mono_pow(m, -1): c})

    def __eq__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self._terms == q._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def evaluate(self, point: Mapping[Var, Fraction | int]) -> Fraction:
        return evaluate(self, point)

    def __str__(self) -> str:
        return canonical_string(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({canonical_string(self)!r})"


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)


class VarSpace:
    """Variables ``Y[s,l]`` of a word with ``m`` cycles, rank ``r``, last letter ``last``.

    ``Y[s,0]`` and ``Y[s,r+1]`` resolve to 1.  Every other reference outside
    the word, including ``Y[m,l]`` with ``l > last``, raises.
    """

    def __init__(self, m: int, r: int, last: int | None = None):
        self.m = m
        self.r = r
        self.last = r if last is None else last

    def __contains__(self, var: Var) -> bool:
        s, l = var
        if not 1 <= s <= self.m or not 1 <= l <= self.r:
            return False
        return s < self.m or l <= self.last

    def resolve(self, s: int, l: int) -> Var | None:
        """The variable ``(s, l)``, or ``None`` for a sentinel equal to 1."""
        if 1 <= s <= self.m and (l == 0 or l == self.r + 1):
            return None
        if (s, l) not in self:
            raise VariableRangeError(
                f"Y[{s},{l}] is outside the word (m={self.m}, r={self.r}, last={self.last})"
            )
        return (s, l)

    def y(self, s: int, l: int) -> LaurentPoly:
        v = self.resolve(s, l)
        return ONE if v is None else LaurentPoly.var(*v)

    def bump(self, exps: dict[Var, int], s: int, l: int, e: int) -> None:
        """Multiply the exponent map ``exps`` by ``Y[s,l]^e`` in place."""
        v = self.resolve(s, l)
        if v is not None:
            exps[v] = exps.get(v, 0) + e

    def all_vars(self) -> list[Var]:
        return [(s, l) for s in range(1, self.m + 1) for l in range(1, self.r + 1) if (s, l) in self]


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def evaluate(p: LaurentPoly, point: Mapping[Var, Fraction | int]) -> Fraction:
    """Substitute nonzero rationals for the variables of ``p``."""
    cache: dict[Var, Fraction] = {}
    for v in p.variables():
        if v not in point:
            raise MissingAssignment(v)
        x = Fraction(point[v])
        if x == 0:
            raise ZeroValue(f"Y[{v[0]},{v[1]}] = 0")
        cache[v] = x
    total = Fraction(0)
    for mono, c in p.items():
        term = Fraction(c)
        for v, e in mono:
            term *= cache[v] ** e
        total += term
    return total


def _sorted_terms(p: LaurentPoly) -> list[tuple[Monomial, int]]:
    # graded-lex, highest total degree first, ties by exponent vector over (s,l)
    vs = p.variables()
    def key(item):
        exps = dict(item[0])
        return (mono_degree(item[0]), tuple(exps.get(v, 0) for v in vs))
    return sorted(p.items(), key=key, reverse=True)


def _render_term(mono: Monomial, c: int) -> str:
    parts = [str(c)]
    for (s, l), e in mono:
        parts.append(f"Y[{s},{l}]" if e == 1 else f"Y[{s},{l}]^{e}")
    return "*".join(parts)


def canonical_string(p: LaurentPoly) -> str:
    if not p:
        return "0"
    return " + ".join(_render_term(m, c) for m, c in _sorted_terms(p))


_TERM = re.compile(r"^(-?\d+)((?:\*Y\[\d+,\d+\](?:\^-?\d+)?)*)$")
_FACTOR = re.compile(r"\*Y\[(\d+),(\d+)\](?:\^(-?\d+))?")


def parse(text: str) -> LaurentPoly:
    """Inverse of :func:`canonical_string` (accepts any term order)."""
    text = text.strip()
    if text == "0":
        return ZERO
    out = ZERO
    for chunk in text.split(" + "):
        match = _TERM.match(chunk.strip())
        if not match:
            raise ValueError(f"cannot parse term {chunk!r}")
        exps: dict[Var, int] = {}
        for s, l, e in _FACTOR.findall(match.group(2)):
            v = (int(s), int(l))
            exps[v] = exps.get(v, 0) + (int(e) if e else 1)
        out = out + LaurentPoly.monomial(exps, int(match.group(1)))
    return out


def to_json_obj(p: LaurentPoly) -> dict:
    return {
        "terms": [
            {"coeff": str(c), "exps": [[s, l, e] for (s, l), e in m]}
            for m, c in _sorted_terms(p)
        ]
    }


def from_json_obj(obj: Mapping) -> LaurentPoly:
    out = ZERO
    for term in obj["terms"]:
        exps: dict[Var, int] = {}
        for s, l, e in term["exps"]:
            exps[(s, l)] = exps.get((s, l), 0) + e
        out = out + LaurentPoly.monomial(exps, int(term["coeff"]))
    return out


def to_json(p: LaurentPoly) -> str:
    return json.dumps(to_json_obj(p))


def from_json(text: str) -> LaurentPoly:
    return from_json_obj(json.loads(text))


def poly_sum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    acc: dict[Monomial, int] = {}
    for p in polys:
        for m, c in p.items():
            v = acc.get(m, 0) + c
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)
    return LaurentPoly._raw(acc)
