import pytest
from hypothesis import given, strategies as st

from conftest import arrangements
from zeta_arr.errors import BadPrimeError, PreconditionError
from zeta_arr.fields import PrimeField, rank
from zeta_arr.matroid import Matroid, boolean_matroid, uniform_matroid
from zeta_arr.realization import Arrangement, CircuitForm, column_matroid, initial_form


def test_column_matroid_examples(u23):
    assert u23.matroid == uniform_matroid(2, 3)
    assert Arrangement([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).matroid == boolean_matroid(3)
    assert Arrangement([[1, 0, 1], [0, 1, 1]], PrimeField(2)).matroid == uniform_matroid(2, 3)


def test_zero_column_and_rank_deficiency_are_rejected():
    with pytest.raises(PreconditionError, match="loop"):
        Arrangement([[1, 0], [0, 0]])
    with pytest.raises(PreconditionError, match="not essential"):
        Arrangement([[1, 1], [2, 2]])


def test_circuit_form_examples(u23):
    assert u23.circuit_form({1, 2, 3}).coeffs == (1, 1, -1)
    assert Arrangement([[1, 0, 0], [0, 1, 1]]).circuit_form({2, 3}).coeffs == (0, 1, -1)
    with pytest.raises(PreconditionError):
        Arrangement([[1, 0], [0, 1]]).circuit_form({1, 2})


def test_initial_form_examples():
    f = CircuitForm(frozenset({1, 2, 3}), (1, 1, -1))
    assert initial_form(f, (1, 0, 0)).coeffs == (0, 1, -1)
    assert initial_form(f, (0, 0, 0)) == f
    assert initial_form(f, (0, 1, 1)).coeffs == (1, 0, 0)


def test_initial_arrangement_examples(u23):
    assert u23.initial_arrangement((0, 0, 0)).same_subspace(u23)
    A1 = u23.initial_arrangement((1, 0, 0))
    assert A1.same_subspace(Arrangement([[1, 0, 0], [0, 1, 1]]))
    assert A1.matroid == Matroid(3, 2, [[1, 2], [1, 3]])
    assert u23.initial_arrangement((2, 1, 1)).same_subspace(A1)
    with pytest.raises(PreconditionError, match="Bergman"):
        u23.initial_arrangement((1, 1, 0))


def test_reduce_mod_p_examples(u23):
    assert u23.reduce_mod_p(2).matroid == u23.matroid
    with pytest.raises(BadPrimeError):
        Arrangement([[1, 0, 2], [0, 1, 1]]).reduce_mod_p(2)
    assert Arrangement([[1, 0, 2], [0, 1, 1]]).reduce_mod_p(3).matroid == uniform_matroid(2, 3)
    for p in (2, 3, 5):
        assert Arrangement([[1, 0], [0, 1]]).reduce_mod_p(p).matroid == boolean_matroid(2)
    with pytest.raises(BadPrimeError):
        Arrangement([[2, 0], [0, 1]]).reduce_mod_p(2)


def _fan_points(M, data):
    w = data.draw(st.lists(st.integers(0, 3), min_size=M.n, max_size=M.n).map(tuple))
    return w if M.in_bergman_fan(w) else tuple(0 for _ in w)


@given(arrangements(max_n=5), st.data())
def test_initial_arrangement_realizes_initial_matroid_for_every_basis(A, data):
    w = _fan_points(A.matroid, data)
    Mw = A.matroid.initial_matroid(w)
    ref = A.initial_arrangement(w)
    assert ref.matroid == Mw
    for B in Mw.bases:
        assert A.initial_arrangement(w, basis=B).same_subspace(ref)


@given(arrangements(max_n=5), st.data())
def test_initial_arrangement_translation_invariant(A, data):
    w = _fan_points(A.matroid, data)
    c = data.draw(st.integers(0, 3))
    k = data.draw(st.integers(1, 3))
    ref = A.initial_arrangement(w)
    assert A.initial_arrangement(tuple(k * x + c for x in w)).same_subspace(ref)


@given(arrangements(max_n=5))
def test_circuit_forms_vanish_on_columns(A):
    cols = A.columns
    for C in A.matroid.circuits():
        f = A.circuit_form(C)
        assert f.support == C
        assert next(a for a in f.coeffs if a != 0) == 1
        for r in range(A.d):
            assert sum(a * cols[i][r] for i, a in enumerate(f.coeffs)) == 0


@given(arrangements(max_n=5))
def test_row_space_is_an_invariant(A):
    assert Arrangement(A.row_space()).same_subspace(A)
    assert column_matroid(A.row_space(), A.field) == A.matroid
    assert rank(A.row_space(), A.field) == A.d
