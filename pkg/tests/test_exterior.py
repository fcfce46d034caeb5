from hypothesis import given, settings
from hypothesis import strategies as st

from magnus.exterior import (MultiVector, complement, merge_sign, shuffle_sign, subsets,
                             wedge_all)

vec = st.lists(st.integers(-4, 4), min_size=4, max_size=4)


def test_basis_anticommutes():
    e1, e2 = MultiVector.basis(3, (0,)), MultiVector.basis(3, (1,))
    assert (e1 ^ e1).is_zero()
    assert (e1 ^ e2) == -(e2 ^ e1)


def test_volume_is_determinant():
    v = wedge_all([[1, 2], [3, 4]], 2)
    assert v.vol() == 1 * 4 - 2 * 3


def test_signs():
    assert merge_sign(0b10, 0b01) == -1
    assert shuffle_sign((0, 1), 3) == 1
    assert shuffle_sign((1,), 3) == -1
    assert subsets(3, 2) == [(0, 1), (0, 2), (1, 2)]
    assert complement((1,), 3) == (0, 2)


def test_empty_wedge_is_one():
    assert wedge_all([], 3) == MultiVector.scalar(3, 1)


@settings(max_examples=50, deadline=None)
@given(vec, vec, vec)
def test_wedge_properties(a, b, c):
    A, B, C = (MultiVector.from_vector(x) for x in (a, b, c))
    assert (A ^ A).is_zero()
    assert (A ^ B) == -(B ^ A)
    assert ((A ^ B) ^ C) == (A ^ (B ^ C))
    assert (A ^ (B + C)) == (A ^ B) + (A ^ C)
