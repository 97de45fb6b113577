from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import arrangements, matroids
from zeta_arr.errors import PreconditionError
from zeta_arr.laurent import LaurentPolyL
from zeta_arr.matroid import boolean_matroid, uniform_matroid
from zeta_arr.realization import Arrangement
from zeta_arr.zeta import (
    ZetaRational,
    ZetaTerm,
    dl_pointcount_series,
    expand,
    igusa_rational,
    igusa_series,
    normalize,
    rational_equal,
    specialize_L,
    zero_series,
)

L = LaurentPolyL.gen()
U23 = uniform_matroid(2, 3)


def test_igusa_series_examples():
    s = igusa_series(U23, None, 3)
    assert s[0] == (L**2 - 3 * L + 2) * L**-2
    assert s[1] == 3 * (L - 1) ** 2 * L**-3
    o = igusa_series(U23, None, 3, "origin")
    assert [o[k] for k in range(3)] == [0, 0, 0]
    assert o[3] == (L**2 - 3 * L + 2) * L**-4


def test_weighted_single_form():
    s = igusa_series(uniform_matroid(1, 1), (2,), 9)
    for ell in range(10):
        assert s[ell] == ((L - 1) * L ** (-1 - ell // 2) if ell % 2 == 0 else 0)


def test_u23_closed_form():
    # L^-2/(1-L^-2 T^3) * [(L-1)(L-2) + 3(L-1)^2 L^-1 T/(1-L^-1 T)]
    hand = ZetaRational(
        (
            ZetaTerm((L - 1) * (L - 2) * L**-2, 0, ((2, 3),)),
            ZetaTerm(3 * (L - 1) ** 2 * L**-3, 1, ((1, 1), (2, 3))),
        )
    )
    Z = igusa_rational(U23)
    assert len(Z.terms) == 4
    assert rational_equal(Z, hand)
    assert expand(Z, 12) == expand(hand, 12) == igusa_series(U23, None, 12)


def test_expand_examples():
    B1 = ZetaRational((ZetaTerm((L - 1) * L**-1, 0, ((1, 1),)),))
    assert list(expand(B1, 2)) == [(L - 1) * L**-1, (L - 1) * L**-2, (L - 1) * L**-3]
    assert expand(ZetaRational(()), 4) == zero_series(4)
    assert expand(igusa_rational(U23), 8) == igusa_series(U23, None, 8)


def test_origin_constant_term_vanishes():
    for M in (U23, boolean_matroid(2), uniform_matroid(2, 4)):
        assert expand(igusa_rational(M, variant="origin"), 0)[0] == 0


def test_specialize_examples():
    from zeta_arr.zeta import ZetaSeries

    assert specialize_L(ZetaSeries(((L - 1) * L**-2,)), 3)[0] == Fraction(2, 9)
    assert list(specialize_L(zero_series(3), 7)) == [0] * 4
    assert specialize_L(igusa_series(U23, None, 1), 3)[1] == Fraction(4, 9)


def test_dl_examples():
    s = dl_pointcount_series(Arrangement([[1]]), 3, None, 4)
    assert list(s) == [Fraction(1, 3 ** (1 + ell)) for ell in range(5)]
    assert dl_pointcount_series(Arrangement([[1, 0], [0, 1]]), 5, None, 0)[0] == Fraction(4, 25)
    assert dl_pointcount_series(Arrangement([[1, 0, 1], [0, 1, 1]]), 3, None, 0)[0] == Fraction(1, 9)


def test_bad_arguments():
    with pytest.raises(PreconditionError):
        igusa_series(U23, (1, 0, 1))
    with pytest.raises(PreconditionError):
        igusa_series(U23, None, 3, "local")
    with pytest.raises(PreconditionError):
        dl_pointcount_series(Arrangement([[1]]), None)


@given(matroids(max_n=5), st.lists(st.integers(1, 3), min_size=5, max_size=5), st.sampled_from(["global", "origin"]))
def test_rational_expands_to_series(M, u, variant):
    u = u[: M.n]
    assert expand(igusa_rational(M, u, variant), 7) == igusa_series(M, u, 7, variant)


@given(matroids(max_n=5), st.lists(st.integers(1, 3), min_size=5, max_size=5))
def test_origin_is_global_shifted_by_the_diagonal(M, u):
    # strict points are w + 1 for w >= 0, so Z_origin = L^-d T^|u| Z_global
    u = u[: M.n]
    D = 8
    g = igusa_series(M, u, D)
    o = igusa_series(M, u, D, "origin")
    k = sum(u)
    for ell in range(D + 1):
        assert o[ell] == (g[ell - k].shift(-M.d) if ell >= k else 0)


@given(matroids(max_n=5))
def test_normalized_form_is_the_same_function(M):
    Z = igusa_rational(M)
    N = normalize(Z)
    # multiply the series back by the common denominator
    D = 6
    s = list(expand(Z, D))
    for a, b, m in N.denominator:
        for _ in range(m):
            s = [s[k] - (s[k - b].shift(-a) if k >= b else 0) for k in range(D + 1)]
    num = [LaurentPolyL.zero()] * (D + 1)
    for (eL, eT), c in N.numerator.terms.items():
        if eT <= D:
            num[eT] = num[eT] + c * LaurentPolyL.monomial(eL)
    assert s == num


@given(arrangements(max_n=4), st.sampled_from([3, 5]))
def test_dl_at_w_zero_counts_the_milnor_fiber(A, p):
    from zeta_arr.errors import BadPrimeError
    from zeta_arr.pointcount import count_points_milnor

    try:
        Ap = A.reduce_mod_p(p)
    except BadPrimeError:
        return
    assert dl_pointcount_series(A, p, None, 0)[0] == Fraction(count_points_milnor(Ap), p**A.d)


def test_specialization_is_coherent_with_point_counts():
    # the sum of all T coefficients at L=q is the integral of |1| over Z_q^d, i.e. 1
    M = uniform_matroid(2, 4)
    D = 40
    s = specialize_L(igusa_series(M, None, D), 5)
    tail = sum(s) - 1
    assert -Fraction(1, 5**10) < tail <= 0
