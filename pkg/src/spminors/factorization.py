"""Change of variables between the two factorizations of ``G^{u,e}``.

``xbar^G(a; Y) = a x_{-i_1}(Y_{1,i_1}) ... x_{-i_n}(Y_{m,i_n})`` and
``x^G(a; Y) = a y_{i_1}(Y_{1,i_1}) ... y_{i_n}(Y_{m,i_n})`` satisfy
``xbar^G = x^G o phi``.  Torus elements ``a`` are tuples ``(c_1, ..., c_r)``
meaning ``alpha_1^vee(c_1) ... alpha_r^vee(c_r)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from .laurent import MissingAssignment, Var, ZeroValue
from .rep import RepOperator, coroot, coroot_product, x_minus, y
from .weyl_word import CWord


@dataclass(frozen=True)
class VariableAssignment:
    """Nonzero rational values for every ``Y[s,l]`` of a word plus a torus element."""

    values: Mapping[Var, Fraction]
    torus: tuple[Fraction, ...] = field(default=())

    def __post_init__(self):
        for v, x in self.values.items():
            if x == 0:
                raise ZeroValue(f"Y[{v[0]},{v[1]}] = 0")
        if any(c == 0 for c in self.torus):
            raise ZeroValue("torus component is zero")


def random_assignment(w: CWord, rng: random.Random, bound: int = 9) -> VariableAssignment:
    """Random nonzero rationals ``p/q`` with ``|p|, q <= bound``."""

    def draw() -> Fraction:
        while True:
            p = rng.randint(-bound, bound)
            if p:
                return Fraction(p, rng.randint(1, bound))

    values = {v: draw() for v in w.variables().all_vars()}
    return VariableAssignment(values, tuple(draw() for _ in range(w.r)))


class _Getter:
    """Lookup with the conventions ``Y[s,0] = 1`` and ``Y[m,l] = 1`` for ``l > last``."""

    def __init__(self, w: CWord, values: Mapping[Var, Fraction]):
        self.w = w
        self.values = values

    def __call__(self, s: int, l: int) -> Fraction:
        w = self.w
        if l == 0 or (s == w.m and l > w.last):
            return Fraction(1)
        try:
            return Fraction(self.values[(s, l)])
        except KeyError:
            raise MissingAssignment((s, l)) from None

    def column(self, lo: int, l: int) -> Fraction:
        """``Y[lo,l] Y[lo+1,l] ... Y[m,l]``."""
        out = Fraction(1)
        for s in range(lo, self.w.m + 1):
            out *= self(s, l)
        return out


def _check_full(w: CWord, v: VariableAssignment) -> None:
    for var in w.variables().all_vars():
        if var not in v.values:
            raise MissingAssignment(var)
    if len(v.torus) != w.r:
        raise ValueError(f"torus needs {w.r} components, got {len(v.torus)}")


def phi(w: CWord, v: VariableAssignment) -> VariableAssignment:
    _check_full(w, v)
    Y = _Getter(w, v.values)
    r = w.r
    out: dict[Var, Fraction] = {}
    for _, s, l in w.positions():
        if l < r:
            num = Y.column(s + 1, l - 1) * Y.column(s, l + 1)
            den = Y(s, l) * Y.column(s + 1, l) ** 2
        else:
            num = Y.column(s + 1, r - 1) ** 2
            den = Y(s, r) * Y.column(s + 1, r) ** 2
        out[(s, l)] = num / den
    torus = list(map(Fraction, v.torus))
    for _, s, l in w.positions():
        torus[l - 1] /= Y(s, l)
    return VariableAssignment(out, tuple(torus))


def psi(w: CWord, v: VariableAssignment) -> VariableAssignment:
    """Inverse of :func:`phi`, solved position by position from the end of the word."""
    _check_full(w, v)
    r = w.r
    Z = v.values
    X: dict[Var, Fraction] = {}
    get = _Getter(w, X)
    for _, s, l in reversed(list(w.positions())):
        if l < r:
            num = get.column(s + 1, l - 1) * get.column(s, l + 1)
        else:
            num = get.column(s + 1, r - 1) ** 2
        X[(s, l)] = num / (Fraction(Z[(s, l)]) * get.column(s + 1, l) ** 2)
    torus = list(map(Fraction, v.torus))
    for _, s, l in w.positions():
        torus[l - 1] *= X[(s, l)]
    return VariableAssignment(X, tuple(torus))


def xbar_G(w: CWord, v: VariableAssignment) -> RepOperator:
    """``a x_{-i_1}(Y_{1,i_1}) ... x_{-i_n}(Y_{m,i_n})`` as a rational matrix."""
    op = coroot_product(v.torus, w.r)
    for _, s, l in w.positions():
        op = op @ x_minus(l, Fraction(v.values[(s, l)]), w.r)
    return op


def x_G(w: CWord, v: VariableAssignment) -> RepOperator:
    """``a y_{i_1}(Y_{1,i_1}) ... y_{i_n}(Y_{m,i_n})`` as a rational matrix."""
    op = coroot_product(v.torus, w.r)
    for _, s, l in w.positions():
        op = op @ y(l, Fraction(v.values[(s, l)]), w.r)
    return op


def verify_factorization(
    w: CWord,
    v: VariableAssignment,
    phi_map: Callable[[CWord, VariableAssignment], VariableAssignment] = phi,
) -> bool:
    """Exact matrix comparison of ``xbar^G(v)`` and ``x^G(phi_map(v))``."""
    return xbar_G(w, v) == x_G(w, phi_map(w, v))


def cartan(i: int, j: int, r: int) -> int:
    """``a_ij = <h_i, alpha_j>`` for type C_r, long root ``alpha_r``."""
    if i == j:
        return 2
    if abs(i - j) != 1:
        return 0
    if (i, j) == (r - 1, r):
        return -2
    return -1


def commutation_holds(i: int, j: int, c, t, r: int) -> bool:
    """``alpha_i^vee(c)^-1 y_j(t) = y_j(c^{a_ij} t) alpha_i^vee(c)^-1`` as matrices."""
    cinv = coroot(i, Fraction(1) / Fraction(c), r)
    lhs = cinv @ y(j, t, r)
    rhs = y(j, Fraction(c) ** cartan(i, j, r) * t, r) @ cinv
    return lhs == rhs

