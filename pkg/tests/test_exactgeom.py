from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from plconvex.exactgeom import (
    as_vec,
    complementary_projection,
    coords_in_2basis,
    dot,
    independent_rows,
    nullspace,
    orient2d,
    orient3d,
    project,
    rank,
)

fr = st.fractions(min_value=-5, max_value=5, max_denominator=20)


def vecs(dim, n):
    return st.lists(st.tuples(*[fr] * dim), min_size=0, max_size=n)


def test_rank_examples():
    assert rank([as_vec([1, 0, 0]), as_vec([0, 1, 0])]) == 2
    assert rank([]) == 0
    assert rank([as_vec([1, 2]), as_vec([2, 4])]) == 1


@given(vecs(3, 6))
def test_rank_bounds(rows):
    r = rank(rows)
    assert 0 <= r <= min(3, len(rows))
    assert rank(rows + rows) == r


@given(vecs(3, 6))
def test_independent_rows_span(rows):
    picked = independent_rows(rows)
    assert len(picked) == rank(rows)
    assert rank([rows[i] for i in picked]) == len(picked)
    # greedy subset is in input order
    assert picked == sorted(picked)


def test_orient2d_examples():
    o = as_vec([0, 0])
    assert orient2d(o, as_vec([1, 0]), as_vec([0, 1])) == 1
    assert orient2d(o, as_vec([1, 0]), as_vec([2, 0])) == 0
    assert orient2d(o, as_vec([0, 1]), as_vec([1, 0])) == -1


@given(st.tuples(fr, fr), st.tuples(fr, fr), st.tuples(fr, fr), st.tuples(fr, fr), fr)
def test_orient2d_invariance(a, b, c, t, s):
    # translation and positive scaling never change an exact sign
    base = orient2d(a, b, c)
    shift = lambda p: (p[0] + t[0], p[1] + t[1])
    assert orient2d(shift(a), shift(b), shift(c)) == base
    lam = abs(s) + Fraction(1, 7)
    scale = lambda p: (lam * p[0], lam * p[1])
    assert orient2d(scale(a), scale(b), scale(c)) == base


@given(st.tuples(fr, fr), st.tuples(fr, fr), st.tuples(fr, fr))
def test_orient2d_antisymmetry(a, b, c):
    assert orient2d(a, b, c) == -orient2d(a, c, b) == orient2d(b, c, a)


def test_orient2d_adversarial_cancellation():
    # nearly-collinear with huge denominators; floats would misjudge this
    eps = Fraction(1, 10**40)
    a = (Fraction(0), Fraction(0))
    b = (Fraction(1), Fraction(1))
    c = (Fraction(2), Fraction(2) + eps)
    assert orient2d(a, b, c) == 1
    assert orient2d(a, b, (Fraction(2), Fraction(2))) == 0


def test_nullspace_orthogonality():
    rows = [as_vec([1, 1, 1, 1])]
    basis = nullspace(rows, 4)
    assert len(basis) == 3
    assert all(dot(rows[0], b) == 0 for b in basis)
    assert rank(basis) == 3


def test_projection_identity_for_n3():
    p = complementary_projection([], 3)
    assert p.axes == (0, 1, 2)
    v = as_vec([1, 2, 3])
    assert project(p, v) == v


def test_projection_axis_kernel():
    e1 = as_vec([1, 0, 0, 0])
    p = complementary_projection([e1], 4)
    assert p.axes == (1, 2, 3)
    assert project(p, as_vec([5, 1, 2, 3])) == as_vec([1, 2, 3])
    assert project(p, e1) == as_vec([0, 0, 0])


def test_projection_general_kernel():
    k = as_vec([1, 1, 1, 1])
    p = complementary_projection([k], 4)
    assert p.axes is None
    assert project(p, k) == as_vec([0, 0, 0])
    assert rank(p.rows) == 3
    # rows are orthogonal to the kernel by construction
    assert all(dot(r, k) == 0 for r in p.rows)


@given(st.lists(st.tuples(*[fr] * 5), min_size=2, max_size=2))
def test_projection_kernel_is_exact(kern):
    if rank(kern) != 2:
        return
    p = complementary_projection(kern, 5)
    assert rank(p.rows) == 3
    for v in kern:
        assert project(p, v) == as_vec([0, 0, 0])
    # a vector outside the span must not be killed
    for e in (as_vec([1, 0, 0, 0, 0]), as_vec([0, 1, 0, 0, 0]), as_vec([0, 0, 1, 0, 0])):
        if rank(list(kern) + [e]) == 3:
            assert project(p, e) != as_vec([0, 0, 0])
            break


def test_coords_in_2basis():
    b1 = as_vec([1, 0, 1])
    b2 = as_vec([0, 1, 1])
    v = as_vec([2, 3, 5])
    assert coords_in_2basis(v, b1, b2) == (Fraction(2), Fraction(3))
    assert coords_in_2basis(as_vec([0, 0, 1]), b1, b2) is None


def test_orient3d():
    o = as_vec([0, 0, 0])
    assert orient3d(o, as_vec([1, 0, 0]), as_vec([0, 1, 0]), as_vec([0, 0, 1])) == 1
    assert orient3d(o, as_vec([1, 0, 0]), as_vec([0, 1, 0]), as_vec([0, 0, -1])) == -1
    assert orient3d(o, as_vec([1, 0, 0]), as_vec([0, 1, 0]), as_vec([1, 1, 0])) == 0


def test_projection_rejects_bad_kernel():
    with pytest.raises(ValueError):
        complementary_projection([as_vec([1, 0, 0])], 3)
    with pytest.raises(ValueError):
        complementary_projection([as_vec([1, 0, 0, 0]), as_vec([2, 0, 0, 0])], 4)
