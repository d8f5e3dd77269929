from __future__ import annotations

import pytest

from spminors.laurent import ONE, VarSpace, evaluate
from spminors.minors import minor_L_oracle
from spminors.paths import (
    BadParameters,
    LevelMismatch,
    NotConnected,
    Path,
    PathVertex,
    check_structure,
    connected,
    edge_label,
    enumerate_paths,
    minor_by_paths,
    path_label,
    to_dot,
)
from spminors.weyl_word import CWord, bar, is_barred, locate

from conftest import EXAMPLE_MINOR, EXAMPLE_PATH_LABELS, Y

R = 3
SPACE = VarSpace(3, 3, 2)


def V(level, *entries):
    return PathVertex(level, tuple(entries))


def test_connected_examples():
    assert connected(V(2, 2, 3), V(1, 3, bar(3, R)), R)
    assert not connected(V(2, 1, 2), V(1, 2, 7), R)
    with pytest.raises(LevelMismatch):
        connected(V(2, 1, 2), V(0, 1, 2), R)


def test_condition_five_is_vacuous_on_the_last_coordinate():
    # the step itself satisfies every local condition; it is only useless
    # because (0; 3, 2b) is not the terminal vertex
    assert connected(V(1, 2, bar(3, R)), V(0, 3, bar(2, R)), R)
    for p in enumerate_paths(2, 3, 2, R):
        assert p.rows[-1] == (3, bar(1, R))


def test_condition_five_rejects():
    # a barred successor must exceed the old next coordinate in absolute value
    assert not connected(V(1, 3, bar(3, R)), V(0, bar(3, R), bar(2, R)), R)
    assert connected(V(1, 3, bar(2, R)), V(0, bar(3, R), bar(2, R)), R)


def test_example_paths_and_labels():
    paths = enumerate_paths(2, 3, 2, 3)
    assert len(paths) == 12
    assert [path_label(p, SPACE) for p in paths] == EXAMPLE_PATH_LABELS


def test_edge_labels():
    assert edge_label(V(3, 1, 2), V(2, 1, 2), R, SPACE) == Y(3, 2).inverse()
    assert edge_label(V(2, 1, 2), V(1, 2, 3), R, SPACE) == ONE
    assert edge_label(V(1, 2, bar(3, R)), V(0, 3, bar(1, R)), R, SPACE) == Y(1, 3)
    with pytest.raises(NotConnected):
        edge_label(V(3, 1, 2), V(2, 3, 3), R, SPACE)


def test_small_enumerations():
    assert len(enumerate_paths(1, 1, 1, 1)) == 1
    assert enumerate_paths(1, 1, 1, 1)[0].rows == ((1,), (bar(1, 1),))
    for m in range(1, 4):
        for d in range(1, 4 - m + 1):
            (p,) = enumerate_paths(d, m, m, 3)
            assert path_label(p, VarSpace(m, 3)) == ONE
    with pytest.raises(BadParameters):
        enumerate_paths(2, 2, 3, 3)
    with pytest.raises(BadParameters):
        enumerate_paths(4, 3, 2, 3)


def test_minor_by_paths_example():
    assert minor_by_paths(CWord(3, 3, 2), 5) == EXAMPLE_MINOR


def test_structure_of_example_paths():
    for p in enumerate_paths(2, 3, 2, 3):
        assert check_structure(p) == []


def test_corrupted_path_is_flagged():
    p = enumerate_paths(2, 3, 2, 3)[6]
    rows = list(p.rows)
    rows[2] = rows[2][::-1]
    assert check_structure(Path(p.r, p.m, p.m_prime, tuple(rows)))


def test_count_matches_unit_evaluation():
    for r in range(1, 5):
        for m in range(1, r + 1):
            w = CWord(r, m, r)
            ones = {v: 1 for v in w.variables().all_vars()}
            for k in range(1, w.n + 1):
                mp, d = locate(w, k)
                count = len(enumerate_paths(d, m if w.last >= d else m - 1, mp, r))
                assert evaluate(minor_L_oracle(w, k), ones) == count


def test_i_sequences_weakly_increase_and_no_bars_when_unneeded():
    for r in range(1, 5):
        for m in range(1, r + 1):
            for mp in range(1, m + 1):
                for d in range(1, r + 1):
                    for p in enumerate_paths(d, m, mp, r):
                        for i in range(1, d + 1):
                            seq = p.sequence(i)
                            assert list(seq) == sorted(seq)
                        if mp + d <= r:
                            assert not any(is_barred(a, r) for row in p.rows for a in row)


def test_dot_output():
    text = to_dot(enumerate_paths(2, 3, 2, 3), SPACE)
    assert text.startswith("digraph X {")
    assert '"(3; 1,2)" -> "(2; 1,2)" [label="1*Y[3,2]^-1"];' in text
    assert '"(0; 3,1b)";' in text
