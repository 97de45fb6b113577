"""Exact scalar fields (Q and F_p) and Gaussian elimination over them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import BadPrimeError, PreconditionError

Matrix = tuple[tuple, ...]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class Field:
    """Interface shared by :class:`Rationals` and :class:`PrimeField`."""

    def convert(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    zero = 0
    one = 1

    def to_json(self):
        raise NotImplementedError


@dataclass(frozen=True)
class Rationals(Field):
    def convert(self, x) -> Fraction:
        if isinstance(x, str):
            return Fraction(x.strip())
        if isinstance(x, float):
            raise PreconditionError("floating-point entries are not exact")
        return Fraction(x)

    def inv(self, x) -> Fraction:
        return 1 / Fraction(x)

    def to_json(self):
        return "Q"

    def __str__(self) -> str:
        return "Q"


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise PreconditionError(f"{self.p} is not prime")

    def convert(self, x) -> int:
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise BadPrimeError(f"denominator {x.denominator} vanishes mod {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if isinstance(x, int):
            return x % self.p
        raise TypeError(f"cannot read {x!r} in F_{self.p}")

    def inv(self, x) -> int:
        return pow(x, -1, self.p)

    def to_json(self):
        return {"p": self.p}

    def __str__(self) -> str:
        return f"F_{self.p}"


def _normalize(field: Field, x):
    return x % field.p if isinstance(field, PrimeField) else x


def rref(rows: Sequence[Sequence], field: Field) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form (zero rows dropped) and pivot columns."""
    m = [[field.convert(x) for x in r] for r in rows]
    if not m:
        return (), ()
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][c])
        m[r] = [_normalize(field, x * inv) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [_normalize(field, a - f * b) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return tuple(tuple(row) for row in m[:r]), tuple(pivots)


def rank(rows: Sequence[Sequence], field: Field) -> int:
    return len(rref(rows, field)[1])


def kernel(rows: Sequence[Sequence], field: Field, ncols: int | None = None) -> Matrix:
    """Basis of ``{x : rows @ x = 0}``, one vector per free column, in RREF-derived form."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = rref(rows, field) if rows else ((), ())
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for row, pc in zip(red, pivots):
            v[pc] = _normalize(field, -row[f])
        basis.append(tuple(v))
    return tuple(basis)


def transpose(rows: Sequence[Sequence]) -> Matrix:
    return tuple(zip(*rows))
