"""Realized arrangements: column matroids, circuit forms and initial arrangements.

An arrangement is a ``d x n`` matrix whose columns ``c_1..c_n`` are the
coefficient vectors of the linear forms ``f_i(t) = c_i . t``. Its row space
is the linear subspace ``X`` of ``k^n`` that the forms embed ``k^d`` onto.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import BadPrimeError, PreconditionError
from .fields import Field, Matrix, PrimeField, Rationals, kernel, rank, rref, transpose
from .matroid import Matroid, mask_of


def column_matroid(matrix: Sequence[Sequence], field: Field) -> Matroid:
    rows = tuple(tuple(field.convert(x) for x in r) for r in matrix)
    if not rows or not rows[0]:
        raise PreconditionError("empty matrix")
    d, n = len(rows), len(rows[0])
    if any(len(r) != n for r in rows):
        raise PreconditionError("ragged matrix")
    cols = transpose(rows)
    zero_cols = [i + 1 for i, c in enumerate(cols) if all(x == 0 for x in c)]
    if zero_cols:
        raise PreconditionError(f"zero column(s) {zero_cols}: the arrangement has a loop")
    if rank(rows, field) != d:
        raise PreconditionError("matrix is rank deficient: the arrangement is not essential")
    bases = []
    for combo in combinations(range(n), d):
        sub = [[rows[r][c] for c in combo] for r in range(d)]
        if rank(sub, field) == d:
            bases.append(sum(1 << c for c in combo))
    return Matroid._from_masks(n, d, bases)


@dataclass(frozen=True)
class CircuitForm:
    """A linear relation ``sum_i a_i c_i = 0`` supported exactly on ``circuit``."""

    circuit: frozenset[int]
    coeffs: tuple

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, a in enumerate(self.coeffs) if a != 0)


class Arrangement:
    """A central essential arrangement with exact entries over Q or F_p."""

    def __init__(self, matrix: Sequence[Sequence], field: Field | None = None):
        self.field = field if field is not None else Rationals()
        rows = tuple(tuple(self.field.convert(x) for x in r) for r in matrix)
        self.matroid = column_matroid(rows, self.field)
        self.matrix: Matrix = rows

    @property
    def d(self) -> int:
        return len(self.matrix)

    @property
    def n(self) -> int:
        return len(self.matrix[0])

    @property
    def columns(self) -> Matrix:
        return transpose(self.matrix)

    def row_space(self) -> Matrix:
        """Canonical (RREF) basis of the subspace ``X``."""
        return rref(self.matrix, self.field)[0]

    def same_subspace(self, other: Arrangement) -> bool:
        return self.field == other.field and self.row_space() == other.row_space()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Arrangement):
            return NotImplemented
        return self.field == other.field and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash((self.field, self.matrix))

    def __repr__(self) -> str:
        return f"Arrangement(field={self.field}, matrix={[list(map(str, r)) for r in self.matrix]})"

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "matrix": [[str(x) for x in r] for r in self.matrix]}

    # circuits

    def circuit_form(self, C: Iterable[int]) -> CircuitForm:
        C = frozenset(C)
        mask_of(C, self.n)
        idx = sorted(C)
        cols = self.columns
        sub = [[cols[i - 1][r] for i in idx] for r in range(self.d)]
        ker = kernel(sub, self.field, len(idx))
        if len(ker) != 1:
            raise PreconditionError(f"{sorted(C)} is not a circuit (relation space has dimension {len(ker)})")
        rel = ker[0]
        if any(a == 0 for a in rel):
            raise PreconditionError(f"{sorted(C)} is not a circuit (relation support drops)")
        inv = self.field.inv(rel[0])
        coeffs = [self.field.zero] * self.n
        for i, a in zip(idx, rel):
            coeffs[i - 1] = _scale(self.field, a, inv)
        return CircuitForm(C, tuple(coeffs))

    def initial_arrangement(self, w: Sequence[int], basis: Iterable[int] | None = None) -> Arrangement:
        """The arrangement ``A_w`` realizing the initial matroid ``M_w``.

        Uses the initial forms of the fundamental-circuit relations for a
        basis ``B`` of ``M_w`` (colex-smallest unless ``basis`` is given);
        the new subspace is their common zero set.
        """
        M = self.matroid
        w = tuple(w)
        Mw = M.initial_matroid(w)
        if not Mw.is_loop_free():
            raise PreconditionError(f"w={list(w)} is outside the Bergman fan (M_w has loops {sorted(Mw.loops())})")
        if basis is None:
            B = Mw.bases[0]
        else:
            B = frozenset(basis)
            if not Mw.is_basis(B):
                raise PreconditionError(f"{sorted(B)} is not a basis of M_w")
        forms = []
        for i in range(1, self.n + 1):
            if i in B:
                continue
            circ = M.fundamental_circuit(i, B)
            forms.append(initial_form(self.circuit_form(circ), w).coeffs)
        space = kernel(forms, self.field, self.n) if forms else _identity(self.n, self.field)
        if len(space) != self.d:
            raise PreconditionError(f"initial forms cut out a subspace of dimension {len(space)}, expected {self.d}")
        rows = rref(space, self.field)[0]
        try:
            Aw = Arrangement(rows, self.field)
        except PreconditionError as exc:
            raise PreconditionError(f"initial arrangement is degenerate over {self.field}: {exc}") from exc
        if Aw.matroid != Mw:
            raise PreconditionError(
                f"initial arrangement over {self.field} does not realize M_w for w={list(w)}"
            )
        return Aw

    def reduce_mod_p(self, p: int) -> Arrangement:
        if not isinstance(self.field, Rationals):
            raise PreconditionError("reduction mod p needs an arrangement over Q")
        F = PrimeField(p)
        rows = [[F.convert(x) for x in r] for r in self.matrix]
        try:
            Ap = Arrangement(rows, F)
        except PreconditionError as exc:
            raise BadPrimeError(f"bad prime {p}: {exc}") from exc
        if Ap.matroid != self.matroid:
            raise BadPrimeError(f"bad prime {p}: the column matroid changes mod {p}")
        return Ap


def _scale(field: Field, a, b):
    x = a * b
    return x % field.p if isinstance(field, PrimeField) else x


def _identity(n: int, field: Field) -> Matrix:
    return tuple(tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n))


def initial_form(form: CircuitForm, w: Sequence[int]) -> CircuitForm:
    """Keep the terms of minimal ``w``-weight on the support, zero the rest."""
    w = tuple(w)
    if len(w) != len(form.coeffs):
        raise PreconditionError("weight vector length does not match the form")
    supp = [i for i, a in enumerate(form.coeffs) if a != 0]
    if not supp:
        return form
    low = min(w[i] for i in supp)
    coeffs = tuple(a if a != 0 and w[i] == low else type(a)(0) for i, a in enumerate(form.coeffs))
    return CircuitForm(form.circuit, coeffs)

