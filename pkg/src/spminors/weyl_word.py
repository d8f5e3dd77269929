"""Reduced words ``(1,...,r)^(m-1) (1,...,last)`` and the index alphabet J.

J is encoded as the integers ``1..2r``: ``j`` for unbarred ``j`` and
``2r+1-j`` for the barred ``jb``.  Integer order is then the total order
``1 < ... < r < rb < ... < 1b`` and ``v_{r+1}`` is literally ``v_{rb}``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import VarSpace


class OutOfRange(ValueError):
    pass


def bar(j: int, r: int) -> int:
    return 2 * r + 1 - j


def absval(a: int, r: int) -> int:
    return a if a <= r else 2 * r + 1 - a


def is_barred(a: int, r: int) -> bool:
    return a > r


def jlabel(a: int, r: int) -> str:
    """Render a J index; barred entries get a trailing ``b``."""
    if not 1 <= a <= 2 * r:
        raise OutOfRange(f"{a} is not in J for r={r}")
    return f"{a}" if a <= r else f"{bar(a, r)}b"


def parse_jlabel(text: str, r: int) -> int:
    text = text.strip()
    if text.endswith("b"):
        return bar(int(text[:-1]), r)
    return int(text)


@dataclass(frozen=True)
class CWord:
    """The word ``(1,...,r)^(m-1) (1,...,last)``, stored compressed."""

    r: int
    m: int
    last: int

    def __post_init__(self):
        if self.r < 1:
            raise OutOfRange(f"rank must be >= 1, got {self.r}")
        if not 1 <= self.m <= self.r:
            raise OutOfRange(f"cycles must satisfy 1 <= m <= r, got m={self.m}, r={self.r}")
        if not 1 <= self.last <= self.r:
            raise OutOfRange(f"last letter must be in [1, {self.r}], got {self.last}")

    @property
    def n(self) -> int:
        return (self.m - 1) * self.r + self.last

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(self.letter(k) for k in range(1, self.n + 1))

    def letter(self, k: int) -> int:
        return locate(self, k)[1]

    def positions(self):
        """Yield ``(k, cycle, letter)`` for every position."""
        for k in range(1, self.n + 1):
            c, d = locate(self, k)
            yield k, c, d

    def variables(self) -> VarSpace:
        return VarSpace(self.m, self.r, self.last)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.letters)) + ")"


def locate(w: CWord, k: int) -> tuple[int, int]:
    """Cycle ``m'`` and letter ``d`` of position ``k``."""
    if not 1 <= k <= w.n:
        raise OutOfRange(f"position {k} outside [1, {w.n}]")
    cycle = (k + w.r - 1) // w.r
    return cycle, k - (cycle - 1) * w.r


def truncate_for(w: CWord, k: int) -> CWord:
    """Drop trailing letters until the word ends in the letter at ``k``."""
    _, d = locate(w, k)
    if w.last >= d:
        return CWord(w.r, w.m, d)
    # last cycle has no d; the previous one ends ... d, d+1, ..., r
    return CWord(w.r, w.m - 1, d)


def target_wedge(w: CWord, k: int) -> tuple[int, ...]:
    """Sorted index tuple of ``u_{<=k}(v_1 ^ ... ^ v_d)``; the sign is +1."""
    mp, d = locate(w, k)
    return target_tuple(w.r, mp, d)


def target_tuple(r: int, mp: int, d: int) -> tuple[int, ...]:
    if mp + d <= r:
        return tuple(range(mp + 1, mp + d + 1))
    q = d - r + mp
    return tuple(range(mp + 1, r + 1)) + tuple(bar(j, r) for j in range(q, 0, -1))
