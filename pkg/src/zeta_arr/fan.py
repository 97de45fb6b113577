"""Lattice points of the Bergman fan and its decomposition into chains of flats.

Every ``w`` in ``Trop(M) ∩ Z_{>=0}^n`` is uniquely
``c0 * (1,..,1) + sum_j c_j * 1_{G_j}`` with ``c0 >= 0``, ``c_j >= 1`` and
``G_1 ⊊ ... ⊊ G_k`` a chain of proper nonempty flats. On each such cone the
initial matroid is constant and the weight is linear, which turns the
lattice-point sums into products of geometric series.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import PreconditionError
from .matroid import Flat, Matroid, mask_of, set_of


@dataclass(frozen=True)
class FlagChain:
    flats: tuple[Flat, ...] = ()

    def __post_init__(self):
        for a, b in zip(self.flats, self.flats[1:]):
            if not a.elements < b.elements:
                raise PreconditionError("chain flats must be strictly increasing")
            if not a.rank < b.rank:
                raise PreconditionError("ranks must strictly increase along a chain of flats")

    def __len__(self) -> int:
        return len(self.flats)

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(G.rank for G in self.flats)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(G) for G in self.flats)

    def sort_key(self):
        return (len(self.flats), tuple(tuple(sorted(G.elements)) for G in self.flats))

    def indicator_sum(self, n: int) -> tuple[int, ...]:
        w = [0] * n
        for G in self.flats:
            for i in G.elements:
                w[i - 1] += 1
        return tuple(w)

    def to_json(self) -> list[list[int]]:
        return [sorted(G.elements) for G in self.flats]


@dataclass(frozen=True)
class ChainPoint:
    chain: FlagChain
    c0: int
    c: tuple[int, ...]

    def __post_init__(self):
        if self.c0 < 0 or len(self.c) != len(self.chain) or any(x < 1 for x in self.c):
            raise PreconditionError("chain point needs c0 >= 0 and every c_j >= 1")

    def encode(self, n: int) -> tuple[int, ...]:
        w = [self.c0] * n
        for cj, G in zip(self.c, self.chain.flats):
            for i in G.elements:
                w[i - 1] += cj
        return tuple(w)


def check_u(u, n: int) -> tuple[int, ...]:
    if u is None:
        return (1,) * n
    u = tuple(u)
    if len(u) != n:
        raise PreconditionError(f"u has length {len(u)}, expected {n}")
    if any(x < 1 for x in u):
        raise PreconditionError("every entry of u must be >= 1")
    return u


def _vectors_of_degree(u: tuple[int, ...], ell: int, lo) -> Iterator[tuple[int, ...]]:
    """Integer vectors with ``w_i >= lo_i`` and ``u . w == ell``, in lexicographic order."""
    n = len(u)
    lows = (lo,) * n if isinstance(lo, int) else tuple(lo)
    tail_min = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        tail_min[i] = tail_min[i + 1] + lows[i] * u[i]
    w = [0] * n

    def rec(i: int, rest: int):
        if i == n - 1:
            if rest % u[i] == 0 and rest // u[i] >= lows[i]:
                w[i] = rest // u[i]
                yield tuple(w)
            return
        v = lows[i]
        while v * u[i] + tail_min[i + 1] <= rest:
            w[i] = v
            yield from rec(i + 1, rest - v * u[i])
            v += 1

    if ell >= tail_min[0]:
        yield from rec(0, ell)


def lattice_points(M: Matroid, ell: int, strict: bool = False, u: Sequence[int] | None = None) -> list[tuple[int, ...]]:
    """Fan points ``w`` (``w >= 0``, or ``w > 0`` when strict) with ``u . w == ell``."""
    if ell < 0:
        raise PreconditionError("degree must be >= 0")
    u = check_u(u, M.n)
    return [
        w for w in _vectors_of_degree(u, ell, 1 if strict else 0) if M.in_bergman_fan_by_level_sets(w)
    ]


def proper_flats(M: Matroid) -> list[Flat]:
    full = frozenset(range(1, M.n + 1))
    return [F for F in M.flats() if F.elements and F.elements != full]


def chains(M: Matroid) -> list[FlagChain]:
    """All chains of proper nonempty flats, the empty chain included."""
    if not M.is_loop_free():
        raise PreconditionError("chains need a loop-free matroid")
    flats = proper_flats(M)
    out: list[FlagChain] = []

    def extend(prefix: tuple[Flat, ...]):
        out.append(FlagChain(prefix))
        last = prefix[-1].elements if prefix else frozenset()
        for F in flats:
            if last < F.elements:
                extend(prefix + (F,))

    extend(())
    out.sort(key=FlagChain.sort_key)
    return out


def chain_matroid(M: Matroid, chain: FlagChain) -> Matroid:
    """The initial matroid at the interior point ``sum_j 1_{G_j}`` of the chain's cone."""
    Mw = M.initial_matroid(chain.indicator_sum(M.n))
    if not Mw.is_loop_free():
        raise PreconditionError("chain matroid has loops: the chain contains a non-flat")
    return Mw


def decode(M: Matroid, w: Sequence[int]) -> ChainPoint:
    w = tuple(w)
    if len(w) != M.n:
        raise PreconditionError(f"weight vector has length {len(w)}, expected {M.n}")
    if any(x < 0 for x in w):
        raise PreconditionError("decode needs a nonnegative weight vector")
    c0 = min(w)
    levels = sorted(set(w))
    flats = []
    cs = []
    # level sets shrink as t grows, so walk the thresholds downwards
    for lo, hi in reversed(list(zip(levels, levels[1:]))):
        m = mask_of((i + 1 for i, x in enumerate(w) if x >= hi), M.n)
        if not M.is_flat(m):
            raise PreconditionError(f"w={list(w)} is outside the Bergman fan ({sorted(set_of(m))} is not a flat)")
        flats.append(Flat(set_of(m), M.rank(m)))
        cs.append(hi - lo)
    return ChainPoint(FlagChain(tuple(flats)), c0, tuple(cs))


def chain_points_of_degree(
    M: Matroid, chain: FlagChain, ell: int, strict: bool = False, u: Sequence[int] | None = None
) -> list[ChainPoint]:
    """All points of the cone over ``chain`` with ``u . w == ell``."""
    u = check_u(u, M.n)
    steps = (sum(u),) + tuple(sum(u[i - 1] for i in G.elements) for G in chain.flats)
    lows = (1 if strict else 0,) + (1,) * len(chain)
    return [ChainPoint(chain, c[0], c[1:]) for c in _vectors_of_degree(steps, ell, lows)]


def check_chain_bijection(M: Matroid, max_degree: int, u: Sequence[int] | None = None) -> bool:
    """Whether the chain cones tile the fan lattice points exactly, up to ``max_degree``."""
    cs = chains(M)
    for ell in range(max_degree + 1):
        for strict in (False, True):
            direct = lattice_points(M, ell, strict, u)
            encoded = [p.encode(M.n) for ch in cs for p in chain_points_of_degree(M, ch, ell, strict, u)]
            if len(encoded) != len(set(encoded)) or sorted(encoded) != direct:
                return False
    return True
