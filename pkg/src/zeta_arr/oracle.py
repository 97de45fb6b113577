"""Ground truth by brute force: F_p point counts and jet counts over F_p[pi]/(pi^(l+1)).

A level-``l`` jet of the parameter space is a ``d``-tuple of truncated power
series ``t_j = sum_k a_{jk} pi^k``. For ``f = prod_i f_i(t)^{u_i}`` the
naive coefficient counts jets with ``ord f == l`` and the angular one jets
with ``f == pi^l`` exactly; both are normalized by ``p^((l+1) d)``. The
origin variants restrict to jets with ``t(0) == 0``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import BudgetExceededError, PreconditionError
from .fields import PrimeField, Rationals
from .pointcount import count_points_complement, count_points_milnor, milnor_fiber_counts
from .realization import Arrangement
from .zeta import dl_pointcount_series, igusa_series, specialize_L

__all__ = [
    "DEFAULT_BUDGET",
    "JET_VARIANTS",
    "JetCountReport",
    "VerifyReport",
    "count_points_complement",
    "count_points_milnor",
    "jet_count",
    "milnor_fiber_counts",
    "verify",
]

DEFAULT_BUDGET = 10**8
CHUNK = 1 << 16

JET_VARIANTS = (
    "naive-exact-order",
    "angular-component-one",
    "origin-naive-exact-order",
    "origin-angular-component-one",
)


@dataclass(frozen=True)
class JetCountReport:
    p: int
    ell: int
    variant: str
    u: tuple[int, ...]
    d: int
    jet_count: int
    evaluated: int

    @property
    def total(self) -> int:
        return self.p ** ((self.ell + 1) * self.d)

    @property
    def normalized(self) -> Fraction:
        return Fraction(self.jet_count, self.total)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "deg": self.ell,
            "variant": self.variant,
            "u": list(self.u),
            "jets": str(self.jet_count),
            "normalized": str(self.normalized),
        }


def _series_mul(x: np.ndarray, y: np.ndarray, p: int) -> np.ndarray:
    out = np.zeros_like(x)
    m = x.shape[1]
    for a in range(m):
        xa = x[:, a : a + 1]
        out[:, a:] += xa * y[:, : m - a]
        out[:, a:] %= p
    return out


def _count_range(args) -> int:
    C, u, p, ell, origin, angular, start, stop = args
    d = C.shape[0]
    m = ell + 1
    free = ell if origin else m
    idx = np.arange(start, stop, dtype=np.int64)
    jets = np.zeros((idx.size, d, m), dtype=np.int64)
    first = 1 if origin else 0
    for j in range(d):
        for k in range(first, first + free):
            jets[:, j, k] = idx % p
            idx //= p
    f = np.zeros((jets.shape[0], m), dtype=np.int64)
    f[:, 0] = 1
    for i, ui in enumerate(u):
        g = np.tensordot(C[:, i], jets, axes=([0], [1])) % p
        for _ in range(ui):
            f = _series_mul(f, g, p)
    low_zero = np.all(f[:, :ell] == 0, axis=1) if ell else np.ones(f.shape[0], dtype=bool)
    lead = f[:, ell]
    hit = low_zero & (lead == 1) if angular else low_zero & (lead != 0)
    return int(hit.sum())


def jet_count(
    A: Arrangement,
    ell: int,
    variant: str = "naive-exact-order",
    u: Sequence[int] | None = None,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> JetCountReport:
    """Count level-``ell`` jets of ``F_p^d`` meeting the variant's order condition."""
    if not isinstance(A.field, PrimeField):
        raise PreconditionError("jet counts need an arrangement over F_p")
    if variant not in JET_VARIANTS:
        raise PreconditionError(f"unknown jet variant {variant!r}")
    p = A.field.p
    origin = variant.startswith("origin-")
    angular = variant.endswith("angular-component-one")
    if ell < 0 or (angular and ell < 1):
        raise PreconditionError(f"order {ell} not allowed for {variant}")
    u = tuple(u) if u is not None else (1,) * A.n
    if len(u) != A.n or any(x < 1 for x in u):
        raise PreconditionError("u must have length n and positive entries")
    evaluated = p ** ((ell if origin else ell + 1) * A.d)
    if evaluated > budget:
        raise BudgetExceededError(f"{evaluated} jets exceed the budget of {budget}")
    C = np.array(A.matrix, dtype=np.int64)
    tasks = [
        (C, u, p, ell, origin, angular, s, min(s + CHUNK, evaluated)) for s in range(0, evaluated, CHUNK)
    ]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            N = sum(pool.map(_count_range, tasks))
    else:
        N = sum(map(_count_range, tasks))
    return JetCountReport(p, ell, variant, u, A.d, N, evaluated)


@dataclass
class VerifyReport:
    u: tuple[int, ...]
    degree: int
    primes: tuple[int, ...]
    checks: list[dict] = field(default_factory=list)

    @property
    def failures(self) -> list[dict]:
        return [c for c in self.checks if c["status"] == "fail"]

    @property
    def skipped(self) -> list[dict]:
        return [c for c in self.checks if c["status"] == "over-budget"]

    @property
    def passed(self) -> bool:
        return not self.failures and not self.skipped

    def to_json(self) -> dict:
        return {
            "u": list(self.u),
            "degree": self.degree,
            "primes": list(self.primes),
            "checks": self.checks,
            "passed": self.passed,
        }


def verify(
    A: Arrangement,
    primes: Sequence[int],
    D: int = 3,
    u: Sequence[int] | None = None,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> VerifyReport:
    """Compare the Igusa and Denef-Loeser series with jet counts, for every prime and order.

    Raises :class:`~zeta_arr.errors.BadPrimeError` when a prime changes the
    matroid. Checks whose enumeration would exceed ``budget`` are recorded
    with status ``over-budget`` instead of being run.
    """
    if not isinstance(A.field, Rationals):
        raise PreconditionError("verify needs an arrangement over Q")
    u = tuple(u) if u is not None else (1,) * A.n
    report = VerifyReport(u, D, tuple(primes))
    reduced = [(p, A.reduce_mod_p(p)) for p in primes]
    expected = {}
    for variant in ("global", "origin"):
        expected[variant] = igusa_series(A, u, D, variant)
    for p, Ap in reduced:
        naive = {v: specialize_L(s, p) for v, s in expected.items()}
        dl = {v: dl_pointcount_series(Ap, p, u, D, v) for v in ("global", "origin")}
        for ell in range(D + 1):
            for jv in JET_VARIANTS:
                origin = jv.startswith("origin-")
                angular = jv.endswith("angular-component-one")
                if angular and ell < 1:
                    continue
                series = (dl if angular else naive)["origin" if origin else "global"]
                want = series[ell]
                row = {"p": p, "deg": ell, "variant": jv, "expected": str(want)}
                try:
                    rep = jet_count(Ap, ell, jv, u, budget, workers)
                except BudgetExceededError:
                    row.update(actual=None, jets=None, status="over-budget")
                else:
                    got = rep.normalized
                    row.update(actual=str(got), jets=str(rep.jet_count), status="pass" if got == want else "fail")
                report.checks.append(row)
    return report
