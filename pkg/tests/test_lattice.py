import pytest
from hypothesis import given
from hypothesis import strategies as st

from mahler_lab.exact import integer_kernel, lll_reduce, matrix_rank
from mahler_lab.exact.lattice import gram_schmidt_norms

matrices = st.integers(1, 3).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def test_simple_kernel():
    assert integer_kernel([[2, -1]]) == [[1, 2]]
    assert integer_kernel([[1, 0], [0, 1]]) == []


def test_kernel_is_primitive_lattice():
    # 6x = 4y: the lattice kernel is generated by (2, 3), not (4, 6)
    assert integer_kernel([[6, -4]]) == [[2, 3]]


@given(matrices)
def test_kernel_vectors_are_annihilated_and_complete(M):
    ker = integer_kernel(M)
    for v in ker:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in M)
    assert len(ker) == len(M[0]) - matrix_rank(M)
    if ker:
        assert matrix_rank(ker) == len(ker)


def test_lll_finds_short_vector():
    basis = [[1, 0, 0, 10**6], [0, 1, 0, 2 * 10**6 + 1], [0, 0, 1, 3 * 10**6 - 1]]
    red = lll_reduce(basis)
    assert min(sum(x * x for x in v) for v in red) <= 20


@given(st.lists(st.lists(st.integers(-50, 50), min_size=3, max_size=3), min_size=3, max_size=3))
def test_lll_preserves_lattice_volume(basis):
    if matrix_rank(basis) < 3:
        return
    red = lll_reduce(basis)
    before = 1
    for n in gram_schmidt_norms(basis):
        before *= n
    after = 1
    for n in gram_schmidt_norms(red):
        after *= n
    assert before == after
