"""Exchange matrices ``Btilde(i)``, mutation and skew-symmetrizability.

Rows are labelled ``-1, ..., -r, 1, ..., n`` and columns by the exchangeable
set ``e(i)``.  Index ``-j`` carries letter ``j`` and precedes every word
position; ``k+`` is the next position carrying the letter of ``k``
(``n + 1`` if there is none).  All letters of ``u`` are read as negative, so
every ``sgn(i_p)`` is ``-1``.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .factorization import cartan
from .laurent import LaurentPoly, Var, evaluate
from .minors import all_minors_L_oracle, frozen_minor
from .weyl_word import CWord


class BadDirection(ValueError):
    pass


class DegeneratePoint(ValueError):
    pass


def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class ExchangeMatrix:
    row_labels: tuple[int, ...]
    col_labels: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rows) != len(self.row_labels):
            raise ValueError("row count does not match labels")
        if any(len(row) != len(self.col_labels) for row in self.rows):
            raise ValueError("column count does not match labels")

    @classmethod
    def square(cls, entries: Sequence[Sequence[int]], labels: Sequence[int] | None = None) -> "ExchangeMatrix":
        labels = tuple(labels) if labels is not None else tuple(range(1, len(entries) + 1))
        return cls(labels, labels, tuple(tuple(int(x) for x in row) for row in entries))

    def entry(self, i: int, j: int) -> int:
        """Entry at row label ``i`` and column label ``j``."""
        return self.rows[self.row_labels.index(i)][self.col_labels.index(j)]

    def column(self, j: int) -> dict[int, int]:
        c = self.col_labels.index(j)
        return {lab: row[c] for lab, row in zip(self.row_labels, self.rows)}

    def principal(self) -> "ExchangeMatrix":
        """Square submatrix on the column labels."""
        idx = [self.row_labels.index(j) for j in self.col_labels]
        return ExchangeMatrix(self.col_labels, self.col_labels,
                              tuple(self.rows[i] for i in idx))

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def to_json_obj(self) -> dict:
        return {"rows": list(self.row_labels), "cols": list(self.col_labels), "entries": self.to_lists()}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def plus(k: int, letters: Sequence[int]) -> int:
    """``k+``: the next position after ``k`` with the same letter, or ``n + 1``."""
    n = len(letters)
    letter = -k if k < 0 else letters[k - 1]
    start = 1 if k < 0 else k + 1
    for pos in range(start, n + 1):
        if letters[pos - 1] == letter:
            return pos
    return n + 1


def e_set(w: CWord) -> tuple[int, ...]:
    letters = w.letters
    n = len(letters)
    movable = tuple(k for k in range(1, n + 1) if plus(k, letters) <= n)
    return tuple(range(-1, -w.r - 1, -1)) + movable


def btilde_entry(k: int, l: int, letters: Sequence[int], r: int, literal: bool = False) -> int:
    """``b_kl``; ``literal=True`` keeps only the sign of the off-diagonal Cartan factor."""

    def letter(p: int) -> int:
        return -p if p < 0 else letters[p - 1]

    kp, lp = plus(k, letters), plus(l, letters)
    p, q = max(k, l), min(kp, lp)
    eps = -1  # every letter of u is negative
    if p == q:
        return -_sgn((k - l) * eps)
    if p < q and (k - l) * (kp - lp) > 0:
        a = cartan(letter(k), letter(l), r)
        if literal:
            return -_sgn((k - l) * eps * a)
        return -_sgn((k - l) * eps) * a
    return 0


def build_btilde(w: CWord, literal: bool = False) -> ExchangeMatrix:
    letters = w.letters
    rows = tuple(range(-1, -w.r - 1, -1)) + tuple(range(1, w.n + 1))
    cols = e_set(w)
    entries = tuple(tuple(btilde_entry(k, l, letters, w.r, literal) for l in cols) for k in rows)
    return ExchangeMatrix(rows, cols, entries)


def mutate(M: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Matrix mutation in direction ``k`` (a column label that is also a row label)."""
    if k not in M.col_labels or k not in M.row_labels:
        raise BadDirection(f"{k} is not a mutable direction")
    c = M.col_labels.index(k)
    rk = M.rows[M.row_labels.index(k)]
    out = []
    for i, row in zip(M.row_labels, M.rows):
        a_ik = row[c]
        new = []
        for j, a_ij in zip(M.col_labels, row):
            if i == k or j == k:
                new.append(-a_ij)
            else:
                a_kj = rk[M.col_labels.index(j)]
                num = abs(a_ik) * a_kj + a_ik * abs(a_kj)
                new.append(a_ij + num // 2)
        out.append(tuple(new))
    return ExchangeMatrix(M.row_labels, M.col_labels, tuple(out))


def mutate_sequence(M: ExchangeMatrix, seq: Sequence[int]) -> ExchangeMatrix:
    for k in seq:
        M = mutate(M, k)
    return M


def _square_rows(M) -> list[list[int]]:
    if isinstance(M, ExchangeMatrix):
        if M.row_labels != M.col_labels:
            M = M.principal()
        return M.to_lists()
    return [list(row) for row in M]


def is_sign_skew_symmetric(M) -> bool:
    b = _square_rows(M)
    n = len(b)
    for i in range(n):
        for j in range(i, n):
            if b[i][j] * b[j][i] > 0 or (b[i][j] == 0) != (b[j][i] == 0):
                return False
    return True


def skew_symmetrizer(M) -> tuple[int, ...] | None:
    """Positive integers ``d`` with ``d_i b_ij = -d_j b_ji``, or ``None`` if none exist."""
    b = _square_rows(M)
    n = len(b)
    if not is_sign_skew_symmetric(b):
        return None
    d: list[Fraction | None] = [None] * n
    for root in range(n):
        if d[root] is not None:
            continue
        d[root] = Fraction(1)
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if b[i][j] == 0:
                    continue
                want = -d[i] * b[i][j] / b[j][i]
                if d[j] is None:
                    d[j] = want
                    queue.append(j)
                elif d[j] != want:
                    return None
    scale = math.lcm(*(x.denominator for x in d)) if n else 1
    ints = [int(x * scale) for x in d]
    g = math.gcd(*ints) if ints else 1
    return tuple(x // g for x in ints)


def is_skew_symmetrizable(M) -> bool:
    return skew_symmetrizer(M) is not None


def cluster_variables(w: CWord) -> dict[int, LaurentPoly]:
    """Initial cluster ``Delta(j; i)`` on ``x^L(Y)``: frozen minors for ``j < 0``."""
    out = {-j: frozen_minor(w, j) for j in range(1, w.r + 1)}
    out.update(all_minors_L_oracle(w))
    return out


def exchange_check(
    w: CWord,
    k: int,
    point: Mapping[Var, Fraction | int],
    variables: Mapping[int, LaurentPoly] | None = None,
    btilde: ExchangeMatrix | None = None,
) -> bool:
    """Solve ``x_k x_k' = prod_{b_ik > 0} x_i^b_ik + prod_{b_ik < 0} x_i^-b_ik`` at ``point``.

    Returns whether ``x_k'`` is finite and nonzero.
    """
    B = btilde or build_btilde(w)
    if k not in B.col_labels:
        raise BadDirection(f"{k} is not exchangeable")
    cv = variables or cluster_variables(w)
    values = {j: evaluate(p, point) for j, p in cv.items()}
    zero = [j for j, x in values.items() if x == 0]
    if zero:
        raise DegeneratePoint(f"Delta({zero[0]}; i) vanishes at the point")
    pos = neg = Fraction(1)
    for i, b in B.column(k).items():
        if b > 0:
            pos *= values[i] ** b
        elif b < 0:
            neg *= values[i] ** (-b)
    new = (pos + neg) / values[k]
    return new != 0
