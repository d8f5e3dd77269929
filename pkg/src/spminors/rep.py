"""The vector representation of sp(2r) and its wedge powers.

Operators are sparse ``2r x 2r`` matrices indexed by the J encoding of
:mod:`spminors.weyl_word` (rows and columns ``1..2r`` in the order
``1 < ... < r < rb < ... < 1b``).  Entries may be ints, ``Fraction`` or
``LaurentPoly``; anything supporting ``+``, ``*`` and truthiness works.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .weyl_word import bar, jlabel


class BadLetter(ValueError):
    pass


class SizeMismatch(ValueError):
    pass


def _check_letter(i: int, r: int) -> None:
    if not 1 <= i <= r:
        raise BadLetter(f"letter {i} outside [1, {r}]")


def inv(t):
    if hasattr(t, "inverse"):
        return t.inverse()
    return Fraction(1) / t


def sl2_pairs(i: int, r: int) -> list[tuple[int, int]]:
    """(highest, lowest) index pairs of the simple sl2 for letter ``i``."""
    _check_letter(i, r)
    if i == r:
        return [(r, r + 1)]
    return [(i, i + 1), (bar(i + 1, r), bar(i, r))]


def weight(a: int, r: int) -> tuple[int, ...]:
    """Weight of ``v_a`` in the basis of fundamental weights."""
    w = [0] * r
    j = a if a <= r else bar(a, r)
    sign = 1 if a <= r else -1
    w[j - 1] += sign
    if j >= 2:
        w[j - 2] -= sign
    return tuple(w)


class RepOperator:
    __slots__ = ("r", "entries")

    def __init__(self, r: int, entries: Mapping[tuple[int, int], object]):
        self.r = r
        self.entries = {k: v for k, v in entries.items() if v}

    @property
    def dim(self) -> int:
        return 2 * self.r

    def __getitem__(self, key: tuple[int, int]):
        return self.entries.get(key, 0)

    def columns(self) -> dict[int, list[tuple[int, object]]]:
        cols: dict[int, list] = {}
        for (i, j), v in self.entries.items():
            cols.setdefault(j, []).append((i, v))
        for c in cols.values():
            c.sort(key=lambda t: t[0])
        return cols

    def __matmul__(self, other: "RepOperator") -> "RepOperator":
        if self.r != other.r:
            raise SizeMismatch("rank mismatch")
        rows: dict[int, list] = {}
        for (i, k), v in self.entries.items():
            rows.setdefault(k, []).append((i, v))
        out: dict[tuple[int, int], object] = {}
        for (k, j), w in other.entries.items():
            for i, v in rows.get(k, ()):
                key = (i, j)
                out[key] = out[key] + v * w if key in out else v * w
        return RepOperator(self.r, out)

    def apply(self, vec: Mapping[int, object]) -> dict[int, object]:
        cols = self.columns()
        out: dict[int, object] = {}
        for j, c in vec.items():
            for i, v in cols.get(j, ()):
                out[i] = out[i] + v * c if i in out else v * c
        return {i: v for i, v in out.items() if v}

    def map(self, fn) -> "RepOperator":
        return RepOperator(self.r, {k: fn(v) for k, v in self.entries.items()})

    def transpose(self) -> "RepOperator":
        return RepOperator(self.r, {(j, i): v for (i, j), v in self.entries.items()})

    def is_lower_triangular(self) -> bool:
        return all(i >= j for i, j in self.entries)

    def diagonal(self) -> list:
        return [self[(a, a)] for a in range(1, self.dim + 1)]

    def __eq__(self, other):
        if not isinstance(other, RepOperator):
            return NotImplemented
        keys = set(self.entries) | set(other.entries)
        return self.r == other.r and all(self[k] == other[k] for k in keys)

    def to_rows(self) -> list[list]:
        n = self.dim
        return [[self[(i, j)] for j in range(1, n + 1)] for i in range(1, n + 1)]

    def __str__(self) -> str:
        labels = [jlabel(a, self.r) for a in range(1, self.dim + 1)]
        lines = ["\t" + "\t".join(labels)]
        for lab, row in zip(labels, self.to_rows()):
            lines.append(lab + "\t" + "\t".join(str(x) for x in row))
        return "\n".join(lines)


def identity(r: int) -> RepOperator:
    return RepOperator(r, {(a, a): 1 for a in range(1, 2 * r + 1)})


def _unipotent(r: int, moves: Iterable[tuple[int, int]], t) -> RepOperator:
    # 1 + t*N where N sends basis vector src to dst; N^2 = 0 on V(Lambda_1)
    entries = {(a, a): 1 for a in range(1, 2 * r + 1)}
    for src, dst in moves:
        entries[(dst, src)] = t
    return RepOperator(r, entries)


def x(i: int, t, r: int) -> RepOperator:
    """``x_i(t) = exp(t e_i)``."""
    return _unipotent(r, [(lo, hi) for hi, lo in sl2_pairs(i, r)], t)


def y(i: int, t, r: int) -> RepOperator:
    """``y_i(t) = exp(t f_i)``."""
    return _unipotent(r, [(hi, lo) for hi, lo in sl2_pairs(i, r)], t)


def coroot(i: int, t, r: int) -> RepOperator:
    """``alpha_i^vee(t)``: the image of ``diag(t, 1/t)`` under the sl2 embedding."""
    entries = {(a, a): 1 for a in range(1, 2 * r + 1)}
    ti = inv(t)
    for hi, lo in sl2_pairs(i, r):
        entries[(hi, hi)] = t
        entries[(lo, lo)] = ti
    return RepOperator(r, entries)


def x_minus(i: int, t, r: int) -> RepOperator:
    """``x_{-i}(t) = y_i(t) alpha_i^vee(1/t)``, written out from its action on the basis.

    ``v_i -> v_i/t + v_{i+1}``, ``v_{i+1} -> t v_{i+1}``, and the same on the
    barred pair ``(v_{(i+1)b}, v_{ib})``; for ``i = r`` the pair is ``(v_r, v_rb)``.
    """
    _check_letter(i, r)
    entries = {(a, a): 1 for a in range(1, 2 * r + 1)}
    ti = inv(t)
    for hi, lo in sl2_pairs(i, r):
        entries[(hi, hi)] = ti
        entries[(lo, hi)] = 1
        entries[(lo, lo)] = t
    return RepOperator(r, entries)


def sbar(i: int, r: int) -> RepOperator:
    """Weyl group representative ``x_i(-1) y_i(1) x_i(-1)``: ``hi -> lo``, ``lo -> -hi``."""
    entries = {(a, a): 1 for a in range(1, 2 * r + 1)}
    for hi, lo in sl2_pairs(i, r):
        del entries[(hi, hi)], entries[(lo, lo)]
        entries[(lo, hi)] = 1
        entries[(hi, lo)] = -1
    return RepOperator(r, entries)


def torus(exponents: Iterable[int], t, r: int) -> RepOperator:
    """``t^(sum a_i h_i)``: scales ``v_a`` by ``t^<sum a_i h_i, wt(v_a)>``."""
    a = list(exponents)
    if len(a) != r:
        raise SizeMismatch(f"need {r} torus exponents, got {len(a)}")
    entries = {}
    for idx in range(1, 2 * r + 1):
        e = sum(ai * wi for ai, wi in zip(a, weight(idx, r)))
        entries[(idx, idx)] = t ** e if e > 0 else inv(t) ** (-e) if e else 1
    return RepOperator(r, entries)


def coroot_product(values: Iterable, r: int) -> RepOperator:
    """``alpha_1^vee(c_1) ... alpha_r^vee(c_r)`` as a diagonal operator."""
    op = identity(r)
    for i, c in enumerate(values, start=1):
        op = op @ coroot(i, c, r)
    return op


def _sort_sign(seq: list[int]) -> tuple[tuple[int, ...], int]:
    sign = 1
    n = len(seq)
    for a in range(n):
        for b in range(a + 1, n):
            if seq[a] > seq[b]:
                sign = -sign
    return tuple(sorted(seq)), sign


class WedgeVector:
    """Element of the ``d``-th wedge power, keyed by strictly increasing index tuples."""

    __slots__ = ("d", "terms")

    def __init__(self, d: int, terms: Mapping[tuple[int, ...], object] | None = None):
        self.d = d
        self.terms: dict[tuple[int, ...], object] = {}
        for key, c in (terms or {}).items():
            if not c:
                continue
            if len(key) != d:
                raise SizeMismatch(f"tuple {key} has size {len(key)}, expected {d}")
            if len(set(key)) != d:
                continue
            skey, sign = _sort_sign(list(key))
            c = c if sign > 0 else -c
            if skey in self.terms:
                c = self.terms[skey] + c
            if c:
                self.terms[skey] = c
            else:
                self.terms.pop(skey, None)

    @classmethod
    def basis(cls, idx: Iterable[int], coeff=1) -> "WedgeVector":
        key = tuple(idx)
        return cls(len(key), {key: coeff})

    def __getitem__(self, key: tuple[int, ...]):
        return self.terms.get(key, 0)

    def __add__(self, other: "WedgeVector") -> "WedgeVector":
        if self.d != other.d:
            raise SizeMismatch("wedge degree mismatch")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return WedgeVector(self.d, out)

    def scale(self, c) -> "WedgeVector":
        return WedgeVector(self.d, {k: c * v for k, v in self.terms.items()})

    def map(self, fn) -> "WedgeVector":
        return WedgeVector(self.d, {k: fn(v) for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, WedgeVector):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        return self.d == other.d and all(self[k] == other[k] for k in keys)

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"WedgeVector(d={self.d}, {len(self.terms)} terms)"


def apply_wedge(op: RepOperator, w: WedgeVector, d: int | None = None) -> WedgeVector:
    """``g(v_{a1} ^ ... ^ v_{ad}) = g v_{a1} ^ ... ^ g v_{ad}``, expanded multilinearly."""
    if d is not None and d != w.d:
        raise SizeMismatch(f"wedge has degree {w.d}, expected {d}")
    cols = op.columns()
    out: dict[tuple[int, ...], object] = {}
    for key, c in w.terms.items():
        partial: list[tuple[tuple[int, ...], object]] = [((), c)]
        for a in key:
            nxt = []
            for prefix, pc in partial:
                for row, v in cols.get(a, ()):
                    if row not in prefix:
                        nxt.append((prefix + (row,), pc * v))
            partial = nxt
            if not partial:
                break
        for tup, pc in partial:
            skey, sign = _sort_sign(list(tup))
            val = pc if sign > 0 else -pc
            out[skey] = out[skey] + val if skey in out else val
    return WedgeVector(w.d, {k: v for k, v in out.items() if v})


def pairing(w1: WedgeVector, w2: WedgeVector):
    """Contravariant form; sorted basis wedges are orthonormal."""
    if w1.d != w2.d:
        raise SizeMismatch("wedge degree mismatch")
    small, big = (w1, w2) if len(w1) <= len(w2) else (w2, w1)
    total = 0
    for k, v in small.terms.items():
        if k in big.terms:
            total = total + v * big.terms[k] if small is w1 else total + big.terms[k] * v
    return total
