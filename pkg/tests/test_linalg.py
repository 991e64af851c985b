import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chardeg.fields import field_make
from chardeg.linalg import (
    identity_matrix,
    kernel,
    kron,
    mat_inv,
    mat_mul,
    matrix_from_json,
    matrix_to_json,
    nullspace,
    rref,
)

F2 = field_make(2)
F3 = field_make(3)
F5 = field_make(5)
F4 = field_make(2, 2)
F9 = field_make(3, 2)


def test_rref_identity():
    res = rref(F5, identity_matrix(2))
    assert res.rank == 2
    assert res.pivots == (0, 1)


def test_rref_zero():
    res = rref(F5, np.zeros((3, 3), dtype=np.int64))
    assert res.rank == 0


def test_rref_dependent_rows_mod3():
    # second row is twice the first over F_3
    res = rref(F3, [[1, 2], [2, 1]])
    assert res.rank == 1


def test_kernel_identity_and_zero():
    assert kernel(F3, identity_matrix(4)).dim == 0
    assert kernel(F3, np.zeros((4, 4), dtype=np.int64)).dim == 4


def test_kernel_f2_sum_vector():
    ker = kernel(F2, [[1, 1]])
    assert ker.dim == 1
    assert ker.contains([1, 1])
    assert not ker.contains([1, 0])


def test_mat_inv_round_trip():
    rng = np.random.default_rng(0)
    for F in (F3, F5, F4, F9):
        for _ in range(10):
            n = int(rng.integers(1, 6))
            while True:
                A = rng.integers(0, F.order, size=(n, n)).astype(np.int64)
                if rref(F, A).rank == n:
                    break
            assert np.array_equal(mat_mul(F, A, mat_inv(F, A)), identity_matrix(n))


def test_extension_field_rref_agrees_with_prime_subfield():
    # a matrix over F_4 with entries in {0,1} reduces like its F_2 image
    A = np.array([[1, 1, 0], [0, 1, 1]], dtype=np.int64)
    assert rref(F4, A).rank == rref(F2, A).rank


def test_kron_dims_and_prime_field():
    A = np.array([[1, 1], [0, 1]], dtype=np.int64)
    B = identity_matrix(3)
    K = kron(F3, A, B)
    assert K.shape == (6, 6)
    K4 = kron(F4, A, B)
    assert np.array_equal(K % 2, K4 % 2)


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from([2, 3, 5, 7]),
    st.integers(1, 7),
    st.integers(1, 7),
    st.integers(0, 2**32 - 1),
)
def test_rank_nullity_and_idempotence(p, m, n, seed):
    F = field_make(p)
    A = np.random.default_rng(seed).integers(0, p, size=(m, n)).astype(np.int64)
    res = rref(F, A)
    ns = nullspace(F, A)
    assert res.rank + ns.shape[0] == n
    again = rref(F, res.reduced)
    assert np.array_equal(again.reduced, res.reduced)
    # every kernel row really is in the kernel
    if ns.shape[0]:
        assert not ((A @ ns.T) % p).any()


def test_matrix_json_round_trip():
    A = np.array([[1, 2], [0, 1]], dtype=np.int64)
    data = matrix_to_json(F3, A)
    F, B = matrix_from_json(data)
    assert F is F3
    assert np.array_equal(A, B)
    data["entries"][0] = 7
    with pytest.raises(ValueError):
        matrix_from_json(data)
