from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spminors.laurent import ONE, LaurentPoly
from spminors.minors import (
    MinorResult,
    TorusPoly,
    frozen_minor,
    frozen_minor_oracle,
    minor_from_letters,
    minor_G,
    minor_G_oracle,
    minor_L_dp,
    minor_L_oracle,
    torus_exponent,
)
from spminors.rep import BadLetter, RepOperator, WedgeVector, apply_wedge, pairing
from spminors.weyl_word import CWord, locate, target_tuple, truncate_for

from conftest import EXAMPLE_MINOR, Y

words = st.integers(1, 3).flatmap(
    lambda r: st.tuples(st.just(r), st.integers(1, r), st.integers(1, r))
).map(lambda t: CWord(*t))


def test_golden_example_oracle():
    assert minor_L_oracle(CWord(3, 3, 2), 5) == EXAMPLE_MINOR


def test_golden_example_dp():
    assert minor_L_dp(CWord(3, 3, 2), 5) == EXAMPLE_MINOR


def test_hand_expansions():
    expected = Y(2, 1).inverse() + Y(1, 1) * Y(1, 2).inverse()
    assert minor_L_oracle(CWord(2, 2, 2), 1) == expected
    assert minor_L_dp(CWord(2, 2, 2), 1) == expected
    assert minor_L_oracle(CWord(2, 2, 1), 3) == ONE
    assert minor_L_dp(CWord(2, 2, 1), 3) == ONE


def test_last_cycle_minor_is_one():
    for r in range(1, 5):
        for m in range(1, r + 1):
            w = CWord(r, m, r)
            for k in range((m - 1) * r + 1, w.n + 1):
                assert minor_L_dp(w, k) == ONE


def test_torus_exponent_branches():
    assert torus_exponent(3, 2, 2, [5, 7, 11]) == 11 - 7 - 5
    assert torus_exponent(4, 1, 2, [5, 7, 11, 13]) == 11 - 5
    assert torus_exponent(3, 1, 1, [0, 0, 0]) == 0
    assert torus_exponent(3, 3, 3, [5, 7, 11]) == 11 - 11 - 11


def test_minor_G_zero_torus_is_minor_L():
    w = CWord(3, 3, 2)
    assert minor_G(w, 5, [0, 0, 0]) == MinorResult(EXAMPLE_MINOR, 0)


def test_minor_G_matches_oracle_on_example():
    w = CWord(3, 3, 2)
    a = [2, -1, 3]
    res = minor_G(w, 5, a)
    assert res.torus_exponent == 3 - (-1) - 2
    assert minor_G_oracle(w, 5, a) == res.as_torus_poly()


def test_torus_poly_arithmetic():
    t = TorusPoly.t()
    assert t * t.inverse() == TorusPoly({0: 1})
    assert (t + Y(1, 1)) * t == TorusPoly({2: 1, 1: Y(1, 1)})
    assert t ** -2 == TorusPoly({-2: 1})


def test_frozen_examples():
    assert frozen_minor(CWord(1, 1, 1), 1) == Y(1, 1).inverse()
    w = CWord(2, 2, 1)
    assert frozen_minor(w, 1) == (Y(1, 1) * Y(2, 1)).inverse()
    assert frozen_minor(w, 2) == Y(1, 2).inverse()
    assert frozen_minor_oracle(w, 1) == frozen_minor(w, 1)
    with pytest.raises(BadLetter):
        frozen_minor(w, 3)


@settings(max_examples=40, deadline=None)
@given(words, st.data())
def test_positive_integer_coefficients(w, data):
    k = data.draw(st.integers(1, w.n))
    p = minor_L_oracle(w, k)
    assert p and all(c > 0 for c in p.coefficients())


@settings(max_examples=40, deadline=None)
@given(words, st.data())
def test_appending_other_letters_changes_nothing(w, data):
    k = data.draw(st.integers(1, w.n))
    mp, d = locate(w, k)
    wt = truncate_for(w, k)
    extra = data.draw(st.lists(st.integers(1, w.r).filter(lambda j: j != d), max_size=3))
    letters = list(wt.letters) + extra
    space = wt.variables()
    scalars = [space.y(c, a) for _, c, a in wt.positions()]
    scalars += [Y(9, j + 10 * idx) for idx, j in enumerate(extra)]
    target = target_tuple(w.r, mp, d)
    assert minor_from_letters(letters, scalars, w.r, d, target) == minor_L_oracle(w, k)
    assert minor_L_oracle(w, k, truncate=False) == minor_L_oracle(w, k)


def _type_a_x_minus(i: int, t: LaurentPoly, r: int) -> RepOperator:
    # SL_{r+1} acting on v_1..v_{r+1}; the remaining coordinates are inert
    entries = {(a, a): 1 for a in range(1, 2 * r + 1)}
    entries[(i, i)] = t.inverse()
    entries[(i + 1, i)] = 1
    entries[(i + 1, i + 1)] = t
    return RepOperator(r, entries)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_unbarred_case_matches_type_a(r):
    # for m' + d <= r the minor is a matrix coefficient of SL_{r+1}
    checked = 0
    for m in range(1, r + 1):
        for last in range(1, r + 1):
            w = CWord(r, m, last)
            for k in range(1, w.n + 1):
                mp, d = locate(w, k)
                if mp + d > r:
                    continue
                wt = truncate_for(w, k)
                space = wt.variables()
                vec = WedgeVector.basis(range(1, d + 1), ONE)
                for _, c, a in reversed(list(wt.positions())):
                    vec = apply_wedge(_type_a_x_minus(a, space.y(c, a), r), vec)
                target = WedgeVector.basis(range(mp + 1, mp + d + 1))
                assert pairing(vec, target) == minor_L_oracle(w, k)
                checked += 1
    assert checked


def test_oracle_random_point_agrees_with_numeric_matrices():
    # evaluate the symbolic minor and recompute with rational matrices
    from fractions import Fraction

    from spminors.rep import x_minus

    rng = random.Random(3)
    w = CWord(3, 2, 3)
    point = {v: Fraction(rng.randint(1, 9), rng.randint(1, 9)) for v in w.variables().all_vars()}
    for k in range(1, w.n + 1):
        mp, d = locate(w, k)
        wt = truncate_for(w, k)
        vec = WedgeVector.basis(range(1, d + 1))
        for _, c, a in reversed(list(wt.positions())):
            vec = apply_wedge(x_minus(a, point[(c, a)], 3), vec)
        numeric = pairing(vec, WedgeVector.basis(target_tuple(3, mp, d)))
        assert minor_L_oracle(w, k).evaluate(point) == numeric
