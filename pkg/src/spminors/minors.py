"""Generalized minors of ``x^L(Y)`` by three independent routes.

* :func:`minor_L_oracle` expands ``x^L(Y)(v_1 ^ ... ^ v_d)`` in the wedge
  power and reads off the target coefficient.
* :func:`minor_L_dp` runs the level-by-level recurrence over rows of the
  path graph, memoized per call.
* :func:`minor_G` attaches the torus weight of ``a = t^(sum a_i h_i)``.

Frozen principal minors ``Delta_{Lambda_j}`` come from :func:`frozen_minor`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .laurent import ONE, ZERO, LaurentPoly, VarSpace, mono_mul_var
from .paths import step_label, successors
from .rep import (
    BadLetter,
    RepOperator,
    WedgeVector,
    apply_wedge,
    pairing,
    sbar,
    sl2_pairs,
    torus,
    x_minus,
)
from .weyl_word import CWord, locate, target_tuple, truncate_for


def _as_poly(c) -> LaurentPoly:
    return c if isinstance(c, LaurentPoly) else LaurentPoly.const(c)


def word_operators(w: CWord, space: VarSpace | None = None) -> list[RepOperator]:
    """``x_{-i_1}(Y_{1,i_1}), ..., x_{-i_n}(Y_{m,i_n})`` in word order."""
    space = space or w.variables()
    return [x_minus(letter, space.y(c, letter), w.r) for _, c, letter in w.positions()]


def apply_word(ops: Sequence[RepOperator], vec: WedgeVector) -> WedgeVector:
    """Apply the product ``ops[0] ops[1] ... ops[-1]``, rightmost factor first."""
    for op in reversed(ops):
        vec = apply_wedge(op, vec)
    return vec


def apply_x_minus_monomial(i: int, t: LaurentPoly, r: int, vec: WedgeVector) -> WedgeVector:
    """``x_{-i}(t)`` on a wedge with ``LaurentPoly`` coefficients, ``t`` a unit monomial.

    Every sl2 pair ``(hi, lo)`` has ``lo = hi + 1``, so moving ``hi`` to a
    free ``lo`` keeps the index tuple sorted and no signs arise.  Each factor
    contributes ``t^-1`` (``hi`` kept), ``t`` (``lo``), ``1`` (``hi`` moved)
    or ``1`` (both present, since ``(hi/t + lo) ^ t lo = hi ^ lo``).
    """
    (tm, tc), = t.items()
    if tc != 1 or len(tm) != 1:
        raise ValueError("scalar must be a single variable")
    (var, te), = tm
    pairs = sl2_pairs(i, r)
    out: dict[tuple[int, ...], dict] = {}
    for key, c in vec.terms.items():
        members = set(key)
        e0 = 0
        movable = []
        for hi, lo in pairs:
            if hi in members and lo not in members:
                e0 -= 1
                movable.append(hi)
            elif lo in members and hi not in members:
                e0 += 1
        for size in range(len(movable) + 1):
            e = (e0 + size) * te
            for chosen in combinations(movable, size):
                nk = key if not chosen else tuple(a + 1 if a in chosen else a for a in key)
                acc = out.setdefault(nk, {})
                for mono, coeff in c.items():
                    mm = mono_mul_var(mono, var, e)
                    v = acc.get(mm, 0) + coeff
                    if v:
                        acc[mm] = v
                    else:
                        del acc[mm]
    result = WedgeVector(vec.d)
    result.terms = {k: LaurentPoly._raw(v) for k, v in out.items() if v}
    return result


def wedge_image(w: CWord, d: int) -> WedgeVector:
    """``x^L(Y)(v_1 ^ ... ^ v_d)`` on the full word ``w``."""
    space = w.variables()
    vec = WedgeVector.basis(range(1, d + 1), ONE)
    for _, c, letter in reversed(list(w.positions())):
        vec = apply_x_minus_monomial(letter, space.y(c, letter), w.r, vec)
    return vec


def minor_from_letters(
    letters: Sequence[int], scalars: Sequence, r: int, d: int, target: Iterable[int]
):
    """Pairing of ``x_{-l_1}(c_1) ... x_{-l_n}(c_n)(v_1 ^ ... ^ v_d)`` with a basis wedge.

    Works for any letter sequence and any scalars with inverses, which makes
    it usable on words outside the cyclic family.
    """
    ops = [x_minus(a, c, r) for a, c in zip(letters, scalars)]
    image = apply_word(ops, WedgeVector.basis(range(1, d + 1)))
    return pairing(image, WedgeVector.basis(target))


def minor_L_oracle(w: CWord, k: int, truncate: bool = True) -> LaurentPoly:
    """``Delta^L(k; i)(Y)`` as the matrix coefficient ``<x^L(Y) v_{[1,d]}, u_{<=k} v_{[1,d]}>``."""
    mp, d = locate(w, k)
    wt = truncate_for(w, k) if truncate else w
    image = wedge_image(wt, d)
    return _as_poly(pairing(image, WedgeVector.basis(target_tuple(w.r, mp, d))))


def all_minors_L_oracle(w: CWord) -> dict[int, LaurentPoly]:
    """Every ``Delta^L(k; i)`` for ``k`` in ``[1, n]``, sharing wedge images across ``k``."""
    images: dict[tuple[int, int], WedgeVector] = {}
    out: dict[int, LaurentPoly] = {}
    for k, mp, d in w.positions():
        wt = truncate_for(w, k)
        key = (wt.m, d)
        if key not in images:
            images[key] = wedge_image(wt, d)
        out[k] = _as_poly(pairing(images[key], WedgeVector.basis(target_tuple(w.r, mp, d))))
    return out


def minor_L_dp(w: CWord, k: int) -> LaurentPoly:
    """Evaluate ``(m; 1..d)`` through the recurrence over connected successor rows."""
    mp, d = locate(w, k)
    wt = truncate_for(w, k)
    r, space = w.r, wt.variables()
    goal = target_tuple(r, mp, d)
    memo: dict[tuple[int, tuple[int, ...]], LaurentPoly] = {}

    def value(level: int, row: tuple[int, ...]) -> LaurentPoly:
        if level == 0:
            return ONE if row == goal else ZERO
        key = (level, row)
        if key in memo:
            return memo[key]
        acc = ZERO
        for nxt in successors(row, r):
            sub = value(level - 1, nxt)
            if sub:
                acc = acc + step_label(level, row, nxt, r, space) * sub
        memo[key] = acc
        return acc

    return value(wt.m, tuple(range(1, d + 1)))


def u_le_k_image(w: CWord, k: int) -> WedgeVector:
    """``u_{<=k}(v_1 ^ ... ^ v_d)`` with ``u_{<=k} = sbar_{i_1} ... sbar_{i_k}``."""
    _, d = locate(w, k)
    ops = [sbar(w.letter(j), w.r) for j in range(1, k + 1)]
    return apply_word(ops, WedgeVector.basis(range(1, d + 1)))


class TorusPoly:
    """Finite sum ``sum_e c_e t^e`` with ``LaurentPoly`` (or int) coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        self.coeffs: dict[int, LaurentPoly] = {}
        for e, c in (coeffs or {}).items():
            c = _as_poly(c)
            if c:
                self.coeffs[e] = c

    @classmethod
    def t(cls) -> "TorusPoly":
        return cls({1: ONE})

    @staticmethod
    def _lift(other) -> "TorusPoly | None":
        if isinstance(other, TorusPoly):
            return other
        if isinstance(other, (int, LaurentPoly)):
            return TorusPoly({0: other})
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in o.coeffs.items():
            out[e] = out[e] + c if e in out else c
        return TorusPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return TorusPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out: dict[int, LaurentPoly] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in o.coeffs.items():
                e = e1 + e2
                out[e] = out[e] + c1 * c2 if e in out else c1 * c2
        return TorusPoly(out)

    __rmul__ = __mul__

    def inverse(self) -> "TorusPoly":
        if len(self.coeffs) != 1:
            raise ZeroDivisionError("only single-term torus polynomials are invertible")
        (e, c), = self.coeffs.items()
        return TorusPoly({-e: c.inverse()})

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = TorusPoly({0: ONE})
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        inner = " + ".join(f"t^{e}*({c})" for e, c in sorted(self.coeffs.items()))
        return f"TorusPoly({inner or '0'})"


@dataclass(frozen=True)
class MinorResult:
    value: LaurentPoly
    torus_exponent: int

    def as_torus_poly(self) -> TorusPoly:
        return TorusPoly({self.torus_exponent: self.value})


def torus_exponent(r: int, mp: int, d: int, a: Sequence[int]) -> int:
    if len(a) != r:
        raise ValueError(f"need {r} torus exponents, got {len(a)}")
    ext = [0, *a]
    if mp + d > r:
        return ext[r] - ext[mp] - ext[d - r + mp]
    return ext[mp + d] - ext[mp]


def minor_G(w: CWord, k: int, a: Sequence[int]) -> MinorResult:
    """``Delta^G(k; i)(a; Y) = t^e Delta^L(k; i)(Y)`` for ``a = t^(sum a_i h_i)``."""
    mp, d = locate(w, k)
    return MinorResult(minor_L_oracle(w, k), torus_exponent(w.r, mp, d, a))


def minor_G_oracle(w: CWord, k: int, a: Sequence[int]) -> TorusPoly:
    """Pairing computation with the torus factor applied to the wedge, ``t`` kept formal."""
    mp, d = locate(w, k)
    wt = truncate_for(w, k)
    op = torus(a, TorusPoly.t(), w.r)
    image = apply_word([op, *word_operators(wt)], WedgeVector.basis(range(1, d + 1)))
    return TorusPoly({0: 0}) + pairing(image, WedgeVector.basis(target_tuple(w.r, mp, d)))


def frozen_minor(w: CWord, j: int) -> LaurentPoly:
    """``Delta_{Lambda_j}(x^L(Y))``: the product of ``Y_{s,j}^{-1}`` over cycles containing ``j``."""
    if not 1 <= j <= w.r:
        raise BadLetter(f"letter {j} outside [1, {w.r}]")
    space = w.variables()
    out = ONE
    for _, c, letter in w.positions():
        if letter == j:
            out = out * space.y(c, j).inverse()
    return out


def frozen_minor_oracle(w: CWord, j: int) -> LaurentPoly:
    """Principal minor as the pairing ``<x^L(Y) v_{[1,j]}, v_{[1,j]}>`` on the full word."""
    if not 1 <= j <= w.r:
        raise BadLetter(f"letter {j} outside [1, {w.r}]")
    base = WedgeVector.basis(range(1, j + 1))
    return _as_poly(pairing(wedge_image(w, j), base))
