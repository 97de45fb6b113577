import pytest
from hypothesis import given, strategies as st

from conftest import matroids
from zeta_arr.errors import PreconditionError
from zeta_arr.fan import (
    ChainPoint,
    FlagChain,
    chain_matroid,
    chain_points_of_degree,
    chains,
    check_chain_bijection,
    decode,
    lattice_points,
)
from zeta_arr.matroid import Flat, Matroid, boolean_matroid, uniform_matroid
from zoo import matroid_types

U23 = uniform_matroid(2, 3)


def flat(*els, rank=1):
    return Flat(frozenset(els), rank)


def test_lattice_point_examples():
    assert set(lattice_points(U23, 1)) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    assert lattice_points(U23, 3, strict=True) == [(1, 1, 1)]
    assert lattice_points(U23, 2, strict=True) == []
    for M in (U23, boolean_matroid(3), uniform_matroid(1, 1)):
        assert lattice_points(M, 0) == [(0,) * M.n]


def test_chain_examples():
    assert [c.to_json() for c in chains(U23)] == [[], [[1]], [[2]], [[3]]]
    assert [c.to_json() for c in chains(boolean_matroid(2))] == [[], [[1]], [[2]]]
    assert [c.to_json() for c in chains(uniform_matroid(1, 1))] == [[]]


def test_chain_matroid_examples():
    assert chain_matroid(U23, FlagChain()) == U23
    assert chain_matroid(U23, FlagChain((flat(1),))) == Matroid(3, 2, [[1, 2], [1, 3]])
    B2 = boolean_matroid(2)
    assert chain_matroid(B2, FlagChain((flat(2),))) == B2


def test_decode_examples():
    assert decode(U23, (1, 1, 1)) == ChainPoint(FlagChain(), 1, ())
    assert decode(U23, (2, 1, 1)) == ChainPoint(FlagChain((flat(1),)), 1, (1,))
    assert decode(U23, (1, 0, 0)) == ChainPoint(FlagChain((flat(1),)), 0, (1,))
    with pytest.raises(PreconditionError):
        decode(U23, (1, 1, 0))


def test_flag_chain_validation():
    with pytest.raises(PreconditionError):
        FlagChain((flat(1, 2, rank=2), flat(1)))
    with pytest.raises(PreconditionError):
        ChainPoint(FlagChain((flat(1),)), 0, (0,))


@given(matroids(max_n=5), st.data())
def test_decode_encode_round_trip(M, data):
    ell = data.draw(st.integers(0, 6))
    for w in lattice_points(M, ell):
        p = decode(M, w)
        assert p.encode(M.n) == w
        assert M.initial_matroid(w) == chain_matroid(M, p.chain)


@given(matroids(max_n=5), st.lists(st.integers(1, 3), min_size=6, max_size=6))
def test_weighted_bijection(M, u):
    assert check_chain_bijection(M, 6, u[: M.n])


@pytest.mark.parametrize("n", range(1, 6))
def test_bijection_for_every_small_matroid_type(n):
    for M in matroid_types(n):
        if M.is_loop_free():
            assert check_chain_bijection(M, 5)


def test_weight_is_linear_on_each_cone():
    M = uniform_matroid(2, 4)
    for ch in chains(M):
        for ell in range(6):
            for p in chain_points_of_degree(M, ch, ell):
                w = p.encode(M.n)
                assert M.weight(w) == p.c0 * M.d + sum(c * r for c, r in zip(p.c, ch.ranks))
