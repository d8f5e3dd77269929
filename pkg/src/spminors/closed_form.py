"""Closed-form sum over tableaux ``{k^(s)_i}``.

A tableau has ``m - m'`` rows ``s`` and ``d`` columns ``i``.  Rows are
strictly increasing in ``i``; each column is weakly increasing in ``s`` and
capped at ``m' + i`` while ``i <= r - m'``.  Column ``i`` splits into an
unbarred head of length ``delta_i`` and a barred tail, and entry ``(s, i)``
contributes

* ``Cbar(m - l, k) = Y[m-l, k-1] / Y[m-l, k]`` with ``l = k + s - i - 1`` if unbarred,
* ``C(m - l, |k| - 1) = Y[m-l, |k|] / Y[m-l+1, |k|-1]`` with ``l = s - i + r`` if barred.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPoly, VarSpace, canonical_string, poly_sum
from .paths import BadParameters, Path
from .weyl_word import CWord, absval, is_barred, jlabel, locate, truncate_for


class InadmissibleTableau(ValueError):
    pass


@dataclass(frozen=True)
class Tableau:
    """Entries ``rows[s-1][i-1] = k^(s)_i``."""

    r: int
    m: int
    m_prime: int
    d: int
    rows: tuple[tuple[int, ...], ...]

    def entry(self, s: int, i: int) -> int:
        return self.rows[s - 1][i - 1]

    def delta(self, i: int) -> int:
        """Number of unbarred entries in column ``i``."""
        return sum(1 for row in self.rows if not is_barred(row[i - 1], self.r))

    def ell(self, s: int, i: int) -> int:
        k = self.entry(s, i)
        if is_barred(k, self.r):
            return s - i + self.r
        return k + s - i - 1

    def column(self, i: int) -> tuple[int, ...]:
        return tuple(row[i - 1] for row in self.rows)

    def label(self) -> str:
        if not self.rows:
            return "()"
        parts = ["(" + ",".join(jlabel(k, self.r) for k in row) + ")" for row in self.rows]
        return " ".join(parts)


def _check(d: int, m: int, mp: int, r: int) -> None:
    if not (1 <= mp <= m <= r and 1 <= d <= r):
        raise BadParameters(f"need 1 <= m' <= m <= r and 1 <= d <= r, got d={d}, m={m}, m'={mp}, r={r}")


def _cap(i: int, mp: int, r: int) -> int:
    return mp + i if i <= r - mp else 2 * r


def admissible(t: Tableau) -> bool:
    r, mp, d = t.r, t.m_prime, t.d
    if len(t.rows) != t.m - mp:
        return False
    for s, row in enumerate(t.rows):
        if len(row) != d or any(not 1 <= k <= 2 * r for k in row):
            return False
        if any(row[i] >= row[i + 1] for i in range(d - 1)):
            return False
        if any(k > _cap(i, mp, r) for i, k in enumerate(row, start=1)):
            return False
        if s and any(prev > cur for prev, cur in zip(t.rows[s - 1], row)):
            return False
    return True


def enumerate_tableaux(d: int, m: int, mp: int, r: int) -> list[Tableau]:
    """All admissible tableaux, row by row, entries in increasing order."""
    _check(d, m, mp, r)
    height = m - mp
    grid = [[0] * d for _ in range(height)]
    out: list[Tableau] = []

    def fill(pos: int) -> None:
        if pos == height * d:
            out.append(Tableau(r, m, mp, d, tuple(tuple(row) for row in grid)))
            return
        s, i = divmod(pos, d)
        lo = 1
        if i:
            lo = grid[s][i - 1] + 1
        if s:
            lo = max(lo, grid[s - 1][i])
        hi = min(_cap(i + 1, mp, r), 2 * r - (d - 1 - i))
        for k in range(lo, hi + 1):
            grid[s][i] = k
            fill(pos + 1)

    fill(0)
    return out


def tableau_monomial(t: Tableau, space: VarSpace | None = None) -> LaurentPoly:
    if not admissible(t):
        raise InadmissibleTableau(t.label())
    r, m = t.r, t.m
    space = space or VarSpace(m, r)
    exps: dict = {}
    for s in range(1, len(t.rows) + 1):
        for i in range(1, t.d + 1):
            k = t.entry(s, i)
            l = t.ell(s, i)
            if not is_barred(k, r):
                space.bump(exps, m - l, k - 1, 1)
                space.bump(exps, m - l, k, -1)
            else:
                a = absval(k, r)
                space.bump(exps, m - l, a, 1)
                space.bump(exps, m - l + 1, a - 1, -1)
    return LaurentPoly.monomial(exps)


def factor_names(t: Tableau) -> str:
    """The product as a string of ``Cbar(l,k)`` / ``C(l,k)`` factors."""
    r, m = t.r, t.m
    parts = []
    for i in range(1, t.d + 1):
        for s in range(1, len(t.rows) + 1):
            k, l = t.entry(s, i), t.ell(s, i)
            if is_barred(k, r):
                parts.append(f"C({m - l},{absval(k, r) - 1})")
            else:
                parts.append(f"Cbar({m - l},{k})")
    return "*".join(parts) if parts else "1"


def closed_parameters(w: CWord, k: int) -> tuple[CWord, int, int]:
    mp, d = locate(w, k)
    return truncate_for(w, k), mp, d


def minor_closed(w: CWord, k: int) -> LaurentPoly:
    wt, mp, d = closed_parameters(w, k)
    space = wt.variables()
    return poly_sum(tableau_monomial(t, space) for t in enumerate_tableaux(d, wt.m, mp, wt.r))


def correspondence(w: CWord, k: int) -> list[tuple[Tableau, str, LaurentPoly]]:
    """Rows ``(tableau, factor product, monomial)`` of the sum, in enumeration order."""
    wt, mp, d = closed_parameters(w, k)
    space = wt.variables()
    return [(t, factor_names(t), tableau_monomial(t, space))
            for t in enumerate_tableaux(d, wt.m, mp, wt.r)]


def correspondence_table(w: CWord, k: int) -> str:
    lines = []
    for t, names, mono in correspondence(w, k):
        lines.append(f"{t.label()}\t{names}\t{canonical_string(mono)}")
    return "\n".join(lines)


# path <-> tableau correspondence


def tableau_from_path(p: Path) -> Tableau:
    """Read column ``i`` off the stalls and barred levels of the ``i``-th track."""
    r, m, mp, d = p.r, p.m, p.m_prime, p.d
    cols = []
    for i in range(1, d + 1):
        seq = p.sequence(i)
        if i <= r - mp:
            ls = [s for s in range(m) if not is_barred(seq[s], r) and seq[s] == seq[s + 1]]
        else:
            top = m - i + r - mp
            ls = [s for s in range(top + 1)
                  if (not is_barred(seq[s], r) and seq[s] == seq[s + 1]) or is_barred(seq[s], r)]
        cols.append([seq[l] for l in ls])
    height = m - mp
    if any(len(c) != height for c in cols):
        raise InadmissibleTableau("track lengths differ from m - m'")
    rows = tuple(tuple(cols[i][s] for i in range(d)) for s in range(height))
    return Tableau(r, m, mp, d, rows)


def path_from_tableau(t: Tableau) -> Path:
    """Rebuild each track: stall at the unbarred levels, visit the barred ones, else advance."""
    r, m, mp, d = t.r, t.m, t.m_prime, t.d
    height = m - mp
    tracks = []
    for i in range(1, d + 1):
        delta = t.delta(i)
        stalls = {t.ell(s, i) for s in range(1, delta + 1)}
        barred_at = {t.ell(s, i): t.entry(s, i) for s in range(delta + 1, height + 1)}
        final = 2 * r + 1 - (d - i + 1)
        seq = [i]
        for s in range(m):
            a = seq[-1]
            if s + 1 in barred_at:
                nxt = barred_at[s + 1]
            elif is_barred(a, r):
                # barred levels are consecutive, so past them the track has settled
                nxt = final
            elif s in stalls:
                nxt = a
            elif a < r:
                nxt = a + 1
            else:
                nxt = final
            seq.append(nxt)
        tracks.append(seq)
    rows = tuple(tuple(tracks[i][s] for i in range(d)) for s in range(m + 1))
    return Path(r, m, mp, rows)
