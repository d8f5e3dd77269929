"""Weighted lattice paths ``X_d(m, m')`` and their Laurent monomial labels.

A path is stored as its rows ``a^(0), ..., a^(m)``; row ``s`` sits at level
``m - s``.  Entries use the J encoding of :mod:`spminors.weyl_word`.
Successors are generated on demand; the graph is never materialized.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .laurent import LaurentPoly, VarSpace, canonical_string, poly_sum
from .weyl_word import CWord, absval, is_barred, jlabel, locate, target_tuple, truncate_for


class LevelMismatch(ValueError):
    pass


class BadParameters(ValueError):
    pass


class NotConnected(ValueError):
    pass


@dataclass(frozen=True)
class PathVertex:
    level: int
    entries: tuple[int, ...]

    def label(self, r: int) -> str:
        return f"({self.level}; " + ",".join(jlabel(a, r) for a in self.entries) + ")"


def _coordinate_moves(a: int, r: int) -> range:
    if a < r:
        return range(a, a + 2)
    # a == r jumps into {r, rb, ..., 1b}; barred entries move weakly toward 1b
    return range(a, 2 * r + 1)


def _step_ok(src: tuple[int, ...], dst: tuple[int, ...], r: int) -> bool:
    d = len(src)
    for z in range(d - 1):
        if dst[z] >= dst[z + 1]:
            return False
        if is_barred(dst[z], r) and absval(dst[z], r) <= absval(src[z + 1], r):
            return False
    return True


def successors(entries: tuple[int, ...], r: int) -> list[tuple[int, ...]]:
    """All rows connected below ``entries``, in increasing lexicographic order."""
    options = [_coordinate_moves(a, r) for a in entries]
    return [dst for dst in itertools.product(*options) if _step_ok(entries, dst, r)]


def connected(v1: PathVertex, v2: PathVertex, r: int) -> bool:
    if v2.level != v1.level - 1:
        raise LevelMismatch(f"levels {v1.level} -> {v2.level} are not consecutive")
    src, dst = v1.entries, v2.entries
    if len(src) != len(dst):
        return False
    if any(not 1 <= a <= 2 * r for a in src + dst):
        return False
    if any(src[z] >= src[z + 1] for z in range(len(src) - 1)):
        return False
    if any(b not in _coordinate_moves(a, r) for a, b in zip(src, dst)):
        return False
    return _step_ok(src, dst, r)


def _accumulate_step(exps: dict, level: int, src: tuple[int, ...], dst: tuple[int, ...],
                     r: int, space: VarSpace) -> None:
    for a, b in zip(src, dst):
        if not is_barred(a, r):
            if not is_barred(b, r):
                space.bump(exps, level, b - 1, 1)
                space.bump(exps, level, a, -1)
            else:
                space.bump(exps, level, absval(b, r) - 1, -1)
        else:
            space.bump(exps, level, absval(a, r), 1)
            space.bump(exps, level, absval(b, r) - 1, -1)


def step_label(level: int, src: tuple[int, ...], dst: tuple[int, ...], r: int,
               space: VarSpace) -> LaurentPoly:
    """Monomial of one step from row ``src`` at ``level`` to row ``dst``."""
    exps: dict = {}
    _accumulate_step(exps, level, src, dst, r, space)
    return LaurentPoly.monomial(exps)


def edge_label(v1: PathVertex, v2: PathVertex, r: int, space: VarSpace) -> LaurentPoly:
    if not connected(v1, v2, r):
        raise NotConnected(f"{v1.label(r)} -> {v2.label(r)}")
    return step_label(v1.level, v1.entries, v2.entries, r, space)


@dataclass(frozen=True)
class Path:
    r: int
    m: int
    m_prime: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def d(self) -> int:
        return len(self.rows[0])

    def vertices(self) -> list[PathVertex]:
        return [PathVertex(self.m - s, row) for s, row in enumerate(self.rows)]

    def sequence(self, i: int) -> tuple[int, ...]:
        """The ``i``-th coordinate track ``a^(0)_i, ..., a^(m)_i`` (1-based ``i``)."""
        return tuple(row[i - 1] for row in self.rows)

    def label(self, space: VarSpace) -> LaurentPoly:
        return path_label(self, space)

    def __str__(self) -> str:
        return " -> ".join(v.label(self.r) for v in self.vertices())


def _check_parameters(d: int, m: int, mp: int, r: int) -> None:
    if not (1 <= mp <= m <= r and 1 <= d <= r):
        raise BadParameters(f"need 1 <= m' <= m <= r and 1 <= d <= r, got d={d}, m={m}, m'={mp}, r={r}")


def enumerate_paths(d: int, m: int, mp: int, r: int) -> list[Path]:
    """Every path of ``X_d(m, m')``, depth first with successors in increasing order."""
    _check_parameters(d, m, mp, r)
    start = tuple(range(1, d + 1))
    goal = target_tuple(r, mp, d)
    reach: dict[tuple[int, tuple[int, ...]], list[tuple[int, ...]]] = {}

    def live(level: int, row: tuple[int, ...]) -> list[tuple[int, ...]]:
        # successors of row that can still reach the goal
        key = (level, row)
        if key not in reach:
            if level == 1:
                reach[key] = [nxt for nxt in successors(row, r) if nxt == goal]
            else:
                reach[key] = [nxt for nxt in successors(row, r) if live(level - 1, nxt)]
        return reach[key]

    out: list[Path] = []

    def walk(level: int, rows: list[tuple[int, ...]]) -> None:
        if level == 0:
            out.append(Path(r, m, mp, tuple(rows)))
            return
        for nxt in live(level, rows[-1]):
            rows.append(nxt)
            walk(level - 1, rows)
            rows.pop()

    if m == 0:
        return out
    walk(m, [start])
    return out


def path_label(p: Path, space: VarSpace) -> LaurentPoly:
    exps: dict = {}
    for s in range(p.m):
        _accumulate_step(exps, p.m - s, p.rows[s], p.rows[s + 1], p.r, space)
    return LaurentPoly.monomial(exps)


def path_parameters(w: CWord, k: int) -> tuple[CWord, int, int]:
    """Truncated word, ``m'`` and ``d`` for position ``k``."""
    mp, d = locate(w, k)
    return truncate_for(w, k), mp, d


def minor_by_paths(w: CWord, k: int) -> LaurentPoly:
    wt, mp, d = path_parameters(w, k)
    space = wt.variables()
    return poly_sum(path_label(p, space) for p in enumerate_paths(d, wt.m, mp, wt.r))


def check_structure(p: Path) -> list[str]:
    """Names of the structural properties the path violates; empty when all hold."""
    r, m, mp, d = p.r, p.m, p.m_prime, p.d
    bad: list[str] = []
    rows = p.rows
    valid = (
        len(rows) == m + 1
        and rows[0] == tuple(range(1, d + 1))
        and rows[-1] == target_tuple(r, mp, d)
        and all(len(row) == d for row in rows)
    )
    if valid:
        for s in range(m):
            if not connected(PathVertex(m - s, rows[s]), PathVertex(m - s - 1, rows[s + 1]), r):
                valid = False
                break
    if not valid:
        bad.append("not-a-path")
    if any(any(row[i] > nxt[i] for i in range(min(len(row), len(nxt))))
           for row, nxt in zip(rows, rows[1:])):
        bad.append("track-decreases")
    for s in range(1, m + 1):
        for i in range(d - 1):
            a = rows[s][i]
            if is_barred(a, r):
                above = rows[s - 1][i + 1]
                if not (is_barred(above, r) and a < above):
                    bad.append("bar-stagger")
                    break
        else:
            continue
        break
    for i in range(r - mp + 1, d + 1):
        want = 2 * r + 1 - (d - i + 1)
        start = m - i + r - mp + 1
        if any(rows[s][i - 1] != want for s in range(max(start, 0), m + 1)):
            bad.append("tail-not-settled")
            break
    for i in range(1, d + 1):
        seq = p.sequence(i)
        if i <= r - mp:
            count = sum(1 for s in range(m) if not is_barred(seq[s], r) and seq[s] == seq[s + 1])
        else:
            top = min(m - i + r - mp, m - 1)
            count = sum(1 for s in range(top + 1) if not is_barred(seq[s], r) and seq[s] == seq[s + 1])
            count += sum(1 for s in range(top + 1) if is_barred(seq[s], r))
        if count != m - mp:
            bad.append("track-length")
            break
    return bad


def to_dot(paths: list[Path], space: VarSpace) -> str:
    """Graphviz rendering of the union of the given paths, edges labelled by monomials."""
    if not paths:
        return "digraph X {\n}\n"
    r = paths[0].r
    nodes: dict[PathVertex, None] = {}
    edges: dict[tuple[PathVertex, PathVertex], str] = {}
    for p in paths:
        vs = p.vertices()
        for v in vs:
            nodes.setdefault(v)
        for a, b in zip(vs, vs[1:]):
            if (a, b) not in edges:
                edges[(a, b)] = canonical_string(step_label(a.level, a.entries, b.entries, r, space))
    lines = ["digraph X {"]
    for v in nodes:
        lines.append(f'  "{v.label(r)}";')
    for (a, b), lab in edges.items():
        lines.append(f'  "{a.label(r)}" -> "{b.label(r)}" [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
