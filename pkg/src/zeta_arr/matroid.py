"""Matroids stored as explicit basis families.

Elements are labelled ``1..n``. Internally every subset is an int bitmask
with bit ``i - 1`` standing for element ``i``; numeric order of masks is the
colexicographic order of subsets, which is the canonical order used
throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import PreconditionError
from .laurent import LaurentPolyL

__all__ = [
    "Flat",
    "Matroid",
    "boolean_matroid",
    "uniform_matroid",
    "mask_of",
    "set_of",
]


def mask_of(elements: Iterable[int], n: int) -> int:
    m = 0
    for e in elements:
        if not isinstance(e, int) or not 1 <= e <= n:
            raise PreconditionError(f"element {e!r} outside 1..{n}")
        m |= 1 << (e - 1)
    return m


def set_of(mask: int) -> frozenset[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def _sorted_tuple(mask: int) -> tuple[int, ...]:
    return tuple(sorted(set_of(mask)))


@dataclass(frozen=True)
class Flat:
    elements: frozenset[int]
    rank: int

    def __iter__(self):
        return iter(sorted(self.elements))

    def __len__(self) -> int:
        return len(self.elements)


class Matroid:
    """A rank ``d`` matroid on ``{1..n}`` given by its bases.

    ``check=True`` validates the basis-exchange axiom; constructors that
    produce matroids by construction (column matroids, initial matroids)
    skip it.
    """

    def __init__(self, n: int, d: int, bases: Iterable[Iterable[int]], *, check: bool = True):
        if n < 1:
            raise PreconditionError("empty ground set")
        if d < 1 or d > n:
            raise PreconditionError(f"rank {d} impossible on {n} elements")
        masks = set()
        for B in bases:
            B = tuple(B)
            if len(set(B)) != len(B):
                raise PreconditionError(f"repeated element in basis {B}")
            m = mask_of(B, n)
            if len(B) != d:
                raise PreconditionError(f"basis {sorted(B)} does not have {d} elements")
            masks.add(m)
        if not masks:
            raise PreconditionError("a matroid needs at least one basis")
        self.n = n
        self.d = d
        self._bases = tuple(sorted(masks))
        self._basis_set = frozenset(masks)
        if check and not self.satisfies_basis_exchange():
            raise PreconditionError("basis family violates the exchange axiom")

    @classmethod
    def _from_masks(cls, n: int, d: int, masks: Iterable[int]) -> Matroid:
        self = cls.__new__(cls)
        self.n = n
        self.d = d
        self._bases = tuple(sorted(set(masks)))
        self._basis_set = frozenset(self._bases)
        if not self._bases:
            raise PreconditionError("a matroid needs at least one basis")
        return self

    # basic data

    @property
    def basis_masks(self) -> tuple[int, ...]:
        return self._bases

    @property
    def bases(self) -> list[frozenset[int]]:
        """Bases in colex order."""
        return [set_of(b) for b in self._bases]

    @property
    def ground_mask(self) -> int:
        return (1 << self.n) - 1

    def is_basis(self, B: Iterable[int]) -> bool:
        return mask_of(B, self.n) in self._basis_set

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matroid):
            return NotImplemented
        return (self.n, self.d, self._bases) == (other.n, other.d, other._bases)

    def __hash__(self) -> int:
        return hash((self.n, self.d, self._bases))

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, d={self.d}, bases={[sorted(b) for b in self.bases]})"

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d, "bases": [list(_sorted_tuple(b)) for b in self._bases]}

    # axioms

    def satisfies_basis_exchange(self) -> bool:
        bases = self._basis_set
        for B1 in self._bases:
            for B2 in self._bases:
                diff1 = B1 & ~B2
                diff2 = B2 & ~B1
                e_bits = diff1
                while e_bits:
                    e = e_bits & -e_bits
                    e_bits ^= e
                    f_bits = diff2
                    ok = False
                    while f_bits:
                        f = f_bits & -f_bits
                        f_bits ^= f
                        if (B1 ^ e) | f in bases:
                            ok = True
                            break
                    if not ok:
                        return False
        return True

    # rank and independence

    def rank(self, S: Iterable[int] | int) -> int:
        """Max over bases of ``|B ∩ S|``; ``S`` may be an iterable or a mask."""
        m = S if isinstance(S, int) else mask_of(S, self.n)
        if m < 0 or m > self.ground_mask:
            raise PreconditionError("subset outside the ground set")
        return self._rank_mask(m)

    def _rank_mask(self, m: int) -> int:
        cache = self.__dict__.setdefault("_rank_cache", {})
        r = cache.get(m)
        if r is None:
            r = max((b & m).bit_count() for b in self._bases)
            cache[m] = r
        return r

    @cached_property
    def independent_masks(self) -> frozenset[int]:
        """Downward closure of the basis family."""
        seen = set(self._bases)
        frontier = list(self._bases)
        while frontier:
            nxt = []
            for m in frontier:
                bits = m
                while bits:
                    b = bits & -bits
                    bits ^= b
                    s = m ^ b
                    if s not in seen:
                        seen.add(s)
                        nxt.append(s)
            frontier = nxt
        return frozenset(seen)

    @cached_property
    def rank_table(self) -> tuple[int, ...]:
        """Rank of every subset, indexed by mask (dynamic programming over subsets)."""
        indep = self.independent_masks
        table = [0] * (1 << self.n)
        for m in range(1, 1 << self.n):
            if m in indep:
                table[m] = m.bit_count()
            else:
                best = 0
                bits = m
                while bits:
                    b = bits & -bits
                    bits ^= b
                    r = table[m ^ b]
                    if r > best:
                        best = r
                table[m] = best
        return tuple(table)

    def is_independent(self, S: Iterable[int] | int) -> bool:
        m = S if isinstance(S, int) else mask_of(S, self.n)
        return m in self.independent_masks

    def closure(self, S: Iterable[int] | int) -> frozenset[int]:
        m = S if isinstance(S, int) else mask_of(S, self.n)
        return set_of(self._closure_mask(m))

    def _closure_mask(self, m: int) -> int:
        r = self._rank_mask(m)
        out = m
        for i in range(self.n):
            b = 1 << i
            if not m & b and self._rank_mask(m | b) == r:
                out |= b
        return out

    def is_flat(self, S: Iterable[int] | int) -> bool:
        m = S if isinstance(S, int) else mask_of(S, self.n)
        return self._closure_mask(m) == m

    # structure

    def loops(self) -> frozenset[int]:
        covered = 0
        for b in self._bases:
            covered |= b
        return set_of(self.ground_mask & ~covered)

    def is_loop_free(self) -> bool:
        return not self.loops()

    def circuits(self) -> list[frozenset[int]]:
        """Minimal dependent sets, ordered by size then colex."""
        indep = self.independent_masks
        found: list[int] = []
        for size in range(1, self.d + 2):
            for combo in combinations(range(self.n), size):
                m = 0
                for i in combo:
                    m |= 1 << i
                if m in indep:
                    continue
                if any(c & m == c for c in found):
                    continue
                found.append(m)
        found.sort(key=lambda c: (c.bit_count(), c))
        return [set_of(c) for c in found]

    def fundamental_circuit(self, i: int, B: Iterable[int]) -> frozenset[int]:
        """The unique circuit inside ``B ∪ {i}`` for a basis ``B`` and ``i ∉ B``."""
        Bm = mask_of(B, self.n)
        if Bm not in self._basis_set:
            raise PreconditionError(f"{sorted(set_of(Bm))} is not a basis")
        im = mask_of([i], self.n)
        if Bm & im:
            raise PreconditionError(f"element {i} lies in the basis")
        # b belongs to the circuit iff B - b + i is again a basis
        circ = im
        bits = Bm
        while bits:
            b = bits & -bits
            bits ^= b
            if (Bm ^ b) | im in self._basis_set:
                circ |= b
        return set_of(circ)

    def flats(self) -> list[Flat]:
        """All flats, ordered by rank then colex."""
        masks = {self._closure_mask(m) for m in self.independent_masks}
        ordered = sorted(masks, key=lambda m: (self._rank_mask(m), m))
        return [Flat(set_of(m), self._rank_mask(m)) for m in ordered]

    def characteristic_polynomial(self) -> LaurentPolyL:
        """``sum over I ⊆ E of (-1)^|I| L^(d - rk I)``, by direct inclusion-exclusion."""
        cache = self.__dict__.get("_chi")
        if cache is not None:
            return cache
        counts: dict[int, int] = {}
        table = self.rank_table
        for m in range(1 << self.n):
            e = self.d - table[m]
            counts[e] = counts.get(e, 0) + (-1 if m.bit_count() & 1 else 1)
        chi = LaurentPolyL(counts)
        self.__dict__["_chi"] = chi
        return chi

    # weights

    def _check_weight(self, w: Sequence[int]) -> tuple[int, ...]:
        w = tuple(w)
        if len(w) != self.n:
            raise PreconditionError(f"weight vector has length {len(w)}, expected {self.n}")
        return w

    def _basis_weight(self, b: int, w: tuple[int, ...]) -> int:
        s = 0
        i = 0
        while b:
            if b & 1:
                s += w[i]
            b >>= 1
            i += 1
        return s

    def weight(self, w: Sequence[int]) -> int:
        """``wt_M(w)``: the maximum of ``sum_{i in B} w_i`` over bases ``B``."""
        w = self._check_weight(w)
        return max(self._basis_weight(b, w) for b in self._bases)

    def greedy_weight(self, w: Sequence[int]) -> int:
        """Same value as :meth:`weight`, via the matroid greedy algorithm."""
        w = self._check_weight(w)
        order = sorted(range(self.n), key=lambda i: -w[i])
        indep = self.independent_masks
        cur = 0
        total = 0
        for i in order:
            if cur | (1 << i) in indep:
                cur |= 1 << i
                total += w[i]
        return total

    def initial_matroid(self, w: Sequence[int]) -> Matroid:
        """``M_w``: keep exactly the bases of maximal ``w``-weight (may have loops)."""
        w = self._check_weight(w)
        weights = [self._basis_weight(b, w) for b in self._bases]
        top = max(weights)
        return Matroid._from_masks(self.n, self.d, (b for b, s in zip(self._bases, weights) if s == top))

    def in_bergman_fan(self, w: Sequence[int]) -> bool:
        """Whether ``M_w`` is loop-free."""
        return self.initial_matroid(w).is_loop_free()

    def in_bergman_fan_by_level_sets(self, w: Sequence[int]) -> bool:
        """Membership via flats: every upper level set ``{i : w_i >= t}`` must be a flat."""
        w = self._check_weight(w)
        if not self.is_loop_free():
            return False
        for t in sorted(set(w))[1:]:
            m = 0
            for i, wi in enumerate(w):
                if wi >= t:
                    m |= 1 << i
            if not self.is_flat(m):
                return False
        return True


def uniform_matroid(d: int, n: int) -> Matroid:
    return Matroid._from_masks(n, d, (sum(1 << i for i in c) for c in combinations(range(n), d)))


def boolean_matroid(n: int) -> Matroid:
    return Matroid._from_masks(n, n, [(1 << n) - 1])
