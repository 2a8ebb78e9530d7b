"""Exact linear algebra: normal forms, kernels, cokernels, definiteness."""

import random
from fractions import Fraction
from itertools import combinations
from math import gcd, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abelian_fourier.errors import NotSymmetric
from abelian_fourier.intlinalg import (
    cokernel_invariants,
    det_bareiss,
    identity_matrix,
    is_positive_definite,
    is_unimodular,
    kernel_saturated,
    mat_mul,
    rational_inverse,
    rational_solve,
    smith_normal_form,
)

small_matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-9, 9), min_size=c, max_size=c),
            min_size=r,
            max_size=r,
        )
    )
)


def minors_gcd(M, k):
    """gcd of all k x k minors; d_1 ... d_k equals this for the SNF chain."""
    rows, cols = len(M), len(M[0])
    g = 0
    for rsel in combinations(range(rows), k):
        for csel in combinations(range(cols), k):
            sub = [[M[i][j] for j in csel] for i in rsel]
            g = gcd(g, det_bareiss(sub))
    return g


def test_snf_examples():
    assert smith_normal_form([[3, 0], [0, 6]]).divisors == (3, 6)
    assert smith_normal_form(identity_matrix(2)).divisors == (1, 1)
    # d1 = gcd of entries = 2, d1*d2 = |det| = 8
    assert smith_normal_form([[2, 4], [6, 8]]).divisors == (2, 4)


def test_snf_rectangular_and_zero():
    assert smith_normal_form([[0, 0], [0, 0]]).divisors == (0, 0)
    snf = smith_normal_form([[2, 0, 0], [0, 3, 0]])
    assert snf.divisors == (1, 6)


@settings(max_examples=150, deadline=None)
@given(small_matrices)
def test_snf_decomposition_properties(M):
    snf = smith_normal_form(M)
    assert is_unimodular([list(r) for r in snf.U])
    assert is_unimodular([list(r) for r in snf.V])
    UMV = mat_mul(mat_mul([list(r) for r in snf.U], M), [list(r) for r in snf.V])
    assert UMV == snf.diagonal_matrix()
    divisors = snf.divisors
    for a, b in zip(divisors, divisors[1:]):
        if a == 0:
            assert b == 0
        else:
            assert b % a == 0
    # invariant-factor products against the minors-gcd oracle
    for k in range(1, min(len(M), len(M[0])) + 1):
        expected = abs(minors_gcd(M, k))
        assert prod(divisors[:k]) == expected


def test_snf_roundtrip_seeded_100():
    rng = random.Random(20240908)
    for _ in range(100):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        M = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        snf = smith_normal_form(M)
        Uinv = rational_inverse([list(r) for r in snf.U])
        Vinv = rational_inverse([list(r) for r in snf.V])
        back = mat_mul(mat_mul(Uinv, snf.diagonal_matrix()), Vinv)
        assert [[Fraction(x) for x in row] for row in M] == [
            [Fraction(x) for x in row] for row in back
        ]


def test_kernel_saturated_examples():
    assert kernel_saturated([[1, -1]]) == [[1], [1]]
    # saturation strips the content of the relation
    assert kernel_saturated([[2, -2]]) == [[1], [1]]
    assert kernel_saturated([[1, 0], [0, 1]]) == [[], []]


@settings(max_examples=100, deadline=None)
@given(small_matrices)
def test_kernel_saturated_properties(M):
    K = kernel_saturated(M)
    cols = len(M[0])
    nullity = len(K[0]) if K and K[0] else 0
    assert len(K) == cols
    # M K = 0
    if nullity:
        assert all(
            all(v == 0 for v in row) for row in mat_mul(M, K)
        )
        # saturated: the basis spans a direct summand, so all divisors are 1
        cok = cokernel_invariants(K, cols)
        assert all(d == 1 for d in cok.divisors)
        assert cok.free_rank == cols - nullity
    rank = smith_normal_form(M).rank
    assert nullity == cols - rank


def test_kernel_saturated_rational_entries():
    K = kernel_saturated([[Fraction(1, 2), Fraction(-1, 3)]])
    assert len(K[0]) == 1
    x, y = K[0][0], K[1][0]
    assert Fraction(1, 2) * x - Fraction(1, 3) * y == 0
    assert gcd(x, y) == 1


def test_cokernel_examples():
    assert cokernel_invariants(identity_matrix(3), 3).is_trivial
    cok = cokernel_invariants([[2], [0]], 2)
    assert cok.divisors == (2,)
    assert cok.free_rank == 1
    assert not cok.is_trivial
    # invariant factors chain: Z/2 + Z/3 = Z/6, so divisors (1, 6)
    assert cokernel_invariants([[2, 0], [0, 3]], 2).divisors == (1, 6)


def test_cokernel_empty_generators():
    cok = cokernel_invariants([[], []], 2)
    assert cok.divisors == ()
    assert cok.free_rank == 2


def test_positive_definite():
    assert is_positive_definite(identity_matrix(3))
    assert not is_positive_definite([[1, 0], [0, -1]])
    # minors 2 and 1
    assert is_positive_definite([[2, 1], [1, 1]])
    assert not is_positive_definite([[0, 0], [0, 1]])
    with pytest.raises(NotSymmetric):
        is_positive_definite([[1, 2], [3, 1]])


def test_positive_definite_rational():
    assert is_positive_definite([[Fraction(1, 2), 0], [0, Fraction(1, 3)]])
    assert not is_positive_definite([[Fraction(-1, 2), 0], [0, Fraction(1, 3)]])


def test_rational_solve():
    assert rational_solve([[2, 0], [0, 3]], [4, 9]) == [Fraction(2), Fraction(3)]
    assert rational_solve([[1, 1], [1, 1]], [1, 2]) is None
    # underdetermined but consistent: any particular solution is fine
    sol = rational_solve([[1, 1]], [3])
    assert sol is not None and sol[0] + sol[1] == 3


def test_rational_inverse():
    M = [[2, 1], [1, 1]]
    Minv = rational_inverse(M)
    assert mat_mul(M, Minv) == [[1, 0], [0, 1]]
    with pytest.raises(ZeroDivisionError):
        rational_inverse([[1, 1], [1, 1]])
