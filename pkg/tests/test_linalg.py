from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ausglue.linalg import (Field, Mat, QQ, GF, default_field, NoSolution,
                            row_space_basis, coords_in_basis)

FIELDS = [QQ, GF(5), default_field()]


def mats(field, max_n=4):
    entries = st.integers(min_value=-6, max_value=6)
    return st.integers(1, max_n).flatmap(
        lambda n: st.integers(1, max_n).flatmap(
            lambda m: st.lists(st.lists(entries, min_size=m, max_size=m),
                               min_size=n, max_size=n)
            .map(lambda rows: Mat(field, rows))))


def test_field_validation():
    with pytest.raises(ValueError):
        Field(4)
    assert GF(5)(7) == 2
    assert QQ(3) == Fraction(3)
    assert GF(5).inv(2) == 3
    assert QQ.inv(Fraction(2)) == Fraction(1, 2)


def test_rref_oracle():
    m = Mat(QQ, [[0, 2, 4], [1, 1, 1]])
    r, piv = m.rref()
    assert piv == [0, 1]
    assert r.rows == [[1, 0, -1], [0, 1, 2]]


def test_kernel_oracle():
    assert Mat.identity(QQ, 3).kernel_basis().ncols == 0
    assert Mat.zero(QQ, 2, 2).kernel_basis().ncols == 2
    k = Mat(QQ, [[1, 1]]).kernel_basis()
    assert k.ncols == 1 and k.col(0) == [Fraction(-1), Fraction(1)]


def test_solve_oracle():
    b = Mat(QQ, [[3], [4]])
    assert Mat.identity(QQ, 2).solve(b) == b
    with pytest.raises(NoSolution):
        Mat.zero(QQ, 2, 2).solve(b)
    x = Mat(QQ, [[1], [1]]).solve(Mat(QQ, [[2], [2]]))
    assert x.rows == [[Fraction(2)]]


@pytest.mark.parametrize("field", FIELDS, ids=repr)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_rank_and_kernel_properties(field, data):
    m = data.draw(mats(field))
    r = m.rank()
    assert r == m.rref()[0].rank()
    assert r <= min(m.nrows, m.ncols)
    k = m.kernel_basis()
    assert k.ncols == m.ncols - r
    if k.ncols:
        assert (m * k).is_zero()


@pytest.mark.parametrize("field", FIELDS, ids=repr)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_solve_roundtrip(field, data):
    a = data.draw(mats(field))
    x = data.draw(mats(field, max_n=3))
    if x.nrows != a.ncols:
        x = Mat(field, [[1] * 2 for _ in range(a.ncols)], a.ncols, 2)
    b = a * x
    x2 = a.solve(b)
    assert a * x2 == b


def test_image_basis_and_coords():
    m = Mat(QQ, [[1, 2, 3], [2, 4, 6], [0, 0, 1]])
    im = m.image_basis()
    assert im.ncols == m.rank() == 2
    basis = row_space_basis(QQ, [[1, 1, 0], [0, 0, 1], [1, 1, 1]], 3)
    assert len(basis) == 2
    c = coords_in_basis(QQ, basis, [2, 2, 3])
    assert c == [Fraction(2), Fraction(3)]
    with pytest.raises(NoSolution):
        coords_in_basis(QQ, basis, [1, 0, 0])


def test_inverse():
    m = Mat(GF(5), [[1, 2], [3, 4]])
    assert m * m.inverse() == Mat.identity(GF(5), 2)
    with pytest.raises(ValueError):
        Mat.zero(QQ, 2, 2).inverse()


def test_block_ops():
    a = Mat(QQ, [[1]])
    b = Mat(QQ, [[2, 3]])
    d = Mat.block_diag(QQ, [a, b])
    assert d.nrows == 2 and d.ncols == 3
    assert d.rows[1] == [0, 2, 3]
    v = Mat.vstack(QQ, [Mat(QQ, [[1, 2]]), Mat(QQ, [[3, 4]])])
    assert v.rows == [[1, 2], [3, 4]]
