"""Exhaustive small matroids: every labeled matroid on n <= 5, isomorphism types on 6."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from zeta_arr.matroid import Matroid


def _masks(n: int, k: int) -> list[int]:
    return [sum(1 << i for i in c) for c in combinations(range(n), k)]


@lru_cache(maxsize=None)
def labeled_matroids(n: int) -> tuple[Matroid, ...]:
    """All matroids of rank >= 1 on ``{1..n}`` (1, 4, 15, 67, 405 for n = 1..5)."""
    out = []
    for d in range(1, n + 1):
        subs = _masks(n, d)
        for pick in range(1, 1 << len(subs)):
            M = Matroid._from_masks(n, d, [s for j, s in enumerate(subs) if pick >> j & 1])
            if M.satisfies_basis_exchange():
                out.append(M)
    return tuple(out)


def _relabel(mask: int, perm: tuple[int, ...]) -> int:
    out = 0
    for i, j in enumerate(perm):
        if mask >> i & 1:
            out |= 1 << j
    return out


def canonical_form(M: Matroid) -> tuple:
    return min(
        (M.d, tuple(sorted(_relabel(b, p) for b in M.basis_masks)))
        for p in permutations(range(M.n))
    )


@lru_cache(maxsize=None)
def matroid_types(n: int) -> tuple[Matroid, ...]:
    """One representative per isomorphism type of rank >= 1 matroid on n elements."""
    if n <= 5:
        pool = labeled_matroids(n)
    else:
        # a matroid on n elements is B_n or an extension of a smaller type by a non-coloop
        pool = [Matroid._from_masks(n, n, [(1 << n) - 1])]
        new = 1 << (n - 1)
        for N in matroid_types(n - 1):
            cands = [m | new for m in _masks(n - 1, N.d - 1) if N.is_independent(m)]
            for pick in range(1 << len(cands)):
                extra = [c for j, c in enumerate(cands) if pick >> j & 1]
                M = Matroid._from_masks(n, N.d, list(N.basis_masks) + extra)
                if M.satisfies_basis_exchange():
                    pool.append(M)
    seen = {}
    for M in pool:
        seen.setdefault(canonical_form(M), M)
    return tuple(seen[k] for k in sorted(seen))
