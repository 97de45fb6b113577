"""Brute-force F_p point counts on the parameter space ``F_p^d`` of an arrangement."""

from __future__ import annotations

from collections import Counter
from typing import Sequence

import numpy as np

from .errors import PreconditionError
from .fields import PrimeField
from .realization import Arrangement


def _prime_of(A: Arrangement, q: int | None) -> int:
    if not isinstance(A.field, PrimeField):
        raise PreconditionError("point counts need an arrangement over F_p (use reduce_mod_p)")
    p = A.field.p
    if q is not None and q != p:
        raise PreconditionError(f"only q = p is supported (got q={q}, p={p})")
    return p


def _form_values(A: Arrangement, p: int) -> np.ndarray:
    """Values ``f_i(t)`` mod p for every ``t`` in ``F_p^d``; shape ``(p^d, n)``."""
    d = A.d
    grid = np.indices((p,) * d).reshape(d, -1).T.astype(np.int64)
    C = np.array(A.matrix, dtype=np.int64)
    return grid @ C % p


def _weighted_product(vals: np.ndarray, u: Sequence[int], p: int) -> np.ndarray:
    prod = np.ones(vals.shape[0], dtype=np.int64)
    for i, ui in enumerate(u):
        col = vals[:, i]
        for _ in range(ui):
            prod = prod * col % p
    return prod


def _u_or_ones(A: Arrangement, u) -> tuple[int, ...]:
    if u is None:
        return (1,) * A.n
    u = tuple(u)
    if len(u) != A.n or any(x < 1 for x in u):
        raise PreconditionError("u must have length n and positive entries")
    return u


def count_points_complement(A: Arrangement, q: int | None = None) -> int:
    """``#{t in F_q^d : f_i(t) != 0 for all i}``."""
    p = _prime_of(A, q)
    vals = _form_values(A, p)
    return int(np.all(vals != 0, axis=1).sum())


def count_points_milnor(A: Arrangement, u: Sequence[int] | None = None, q: int | None = None) -> int:
    """``#{t in F_q^d : prod_i f_i(t)^{u_i} == 1}``."""
    p = _prime_of(A, q)
    u = _u_or_ones(A, u)
    return int((_weighted_product(_form_values(A, p), u, p) == 1).sum())


def milnor_fiber_counts(A: Arrangement, u: Sequence[int] | None = None, q: int | None = None) -> dict[int, int]:
    """Point counts of every fiber ``prod_i f_i^{u_i} = c``, ``c`` in ``F_q``."""
    p = _prime_of(A, q)
    u = _u_or_ones(A, u)
    vals = _weighted_product(_form_values(A, p), u, p)
    counts = Counter(int(v) for v in vals)
    return {c: counts.get(c, 0) for c in range(p)}
