from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given, strategies as st

from zeta_arr.errors import BadPrimeError, PreconditionError
from zeta_arr.fields import PrimeField, Rationals, is_prime, kernel, rank, rref

Q = Rationals()

small_matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=1, max_size=4)
)


def _det(m, mod=None):
    k = len(m)
    total = 0
    for perm in permutations(range(k)):
        inv = sum(1 for i, j in combinations(range(k), 2) if perm[i] > perm[j])
        term = -1 if inv % 2 else 1
        for r, c in enumerate(perm):
            term *= m[r][c]
        total += term
    return total % mod if mod else total


def _rank_by_minors(rows, mod=None):
    d, n = len(rows), len(rows[0])
    for k in range(min(d, n), 0, -1):
        for rs in combinations(range(d), k):
            for cs in combinations(range(n), k):
                if _det([[rows[r][c] for c in cs] for r in rs], mod):
                    return k
    return 0


def test_is_prime():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_field_conversion():
    assert Q.convert("3/4") == Fraction(3, 4)
    with pytest.raises(PreconditionError):
        Q.convert(0.5)
    F = PrimeField(5)
    assert F.convert("1/2") == 3
    assert F.convert(-1) == 4
    with pytest.raises(BadPrimeError):
        F.convert("1/5")
    with pytest.raises(PreconditionError):
        PrimeField(4)


def test_rref_is_canonical():
    rows, piv = rref([[2, 4, 6], [1, 1, 1]], Q)
    assert rows == ((1, 0, -1), (0, 1, 2)) and piv == (0, 1)


@given(small_matrices)
def test_rank_matches_minors_over_q(rows):
    assert rank(rows, Q) == _rank_by_minors(rows)


@given(small_matrices, st.sampled_from([2, 3, 5]))
def test_rank_matches_minors_mod_p(rows, p):
    assert rank(rows, PrimeField(p)) == _rank_by_minors(rows, p)


@given(small_matrices, st.sampled_from([None, 2, 3]))
def test_kernel_is_annihilated_and_complete(rows, p):
    field = PrimeField(p) if p else Q
    n = len(rows[0])
    ker = kernel(rows, field, n)
    assert len(ker) == n - rank(rows, field)
    for v in ker:
        for r in rows:
            s = sum(field.convert(a) * b for a, b in zip(r, v))
            assert (s % p if p else s) == 0
    if ker:
        assert rank(ker, field) == len(ker)
