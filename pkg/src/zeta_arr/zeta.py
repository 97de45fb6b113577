"""Motivic Igusa zeta functions of arrangements and the point-count Denef-Loeser series.

The coefficient of ``T^l`` in the Igusa series is the sum, over fan points
``w >= 0`` (``w > 0`` at the origin) with ``u . w == l``, of
``chi_{M_w}(L) * L^(-d - wt_M(w))``. The Denef-Loeser series replaces
``chi_{M_w}(L)`` by the number of F_q-points of the Milnor fiber of the
initial arrangement ``A_w``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .errors import PreconditionError
from .fan import FlagChain, chain_matroid, chains, check_chain_bijection, check_u, lattice_points
from .fields import PrimeField
from .laurent import LaurentPolyL
from .matroid import Matroid
from .pointcount import count_points_milnor
from .realization import Arrangement

VARIANTS = ("global", "origin")

MONODROMY_NOTE = (
    "Milnor fibers carry the scalar mu_n action; point counts forget it"
)

Coefficient = Union[LaurentPolyL, Fraction]


def _matroid_of(source) -> Matroid:
    M = source.matroid if isinstance(source, Arrangement) else source
    if not isinstance(M, Matroid):
        raise TypeError("expected a Matroid or an Arrangement")
    if not M.is_loop_free():
        raise PreconditionError(f"matroid has loops {sorted(M.loops())}")
    return M


def _check_variant(variant: str) -> bool:
    if variant not in VARIANTS:
        raise PreconditionError(f"variant must be one of {VARIANTS}, got {variant!r}")
    return variant == "origin"


def _coeff_to_json(c):
    if isinstance(c, LaurentPolyL):
        return c.to_json()
    return str(c)


@dataclass(frozen=True)
class ZetaSeries:
    """Coefficients of ``T^0 .. T^D``: Laurent polynomials in L, or rationals once specialized."""

    coeffs: tuple

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, ell: int):
        return self.coeffs[ell]

    def __iter__(self):
        return iter(self.coeffs)

    def to_json(self) -> list[dict]:
        return [{"deg": ell, "coeff": _coeff_to_json(c)} for ell, c in enumerate(self.coeffs)]


def zero_series(D: int) -> ZetaSeries:
    return ZetaSeries((LaurentPolyL.zero(),) * (D + 1))


def igusa_series(
    source: Matroid | Arrangement,
    u: Sequence[int] | None = None,
    D: int = 12,
    variant: str = "global",
) -> ZetaSeries:
    """Truncated motivic Igusa zeta series, by direct summation over fan lattice points."""
    M = _matroid_of(source)
    strict = _check_variant(variant)
    u = check_u(u, M.n)
    if D < 0:
        raise PreconditionError("truncation order must be >= 0")
    chi_cache: dict[Matroid, LaurentPolyL] = {}
    coeffs = []
    for ell in range(D + 1):
        acc = LaurentPolyL.zero()
        for w in lattice_points(M, ell, strict, u):
            Mw = M.initial_matroid(w)
            chi = chi_cache.get(Mw)
            if chi is None:
                chi = chi_cache[Mw] = Mw.characteristic_polynomial()
            acc = acc + chi.shift(-M.d - M.weight(w))
        coeffs.append(acc)
    return ZetaSeries(tuple(coeffs))


@dataclass(frozen=True)
class ZetaTerm:
    """``coeff * T^t_exp / prod (1 - L^-a T^b)`` over ``factors``."""

    coeff: LaurentPolyL
    t_exp: int
    factors: tuple[tuple[int, int], ...]
    chain: FlagChain | None = None

    def __post_init__(self):
        if any(a < 1 or b < 1 for a, b in self.factors):
            raise PreconditionError("denominator factors need a >= 1 and b >= 1")
        if self.t_exp < 0:
            raise PreconditionError("numerator T-exponent must be >= 0")

    def to_json(self) -> dict:
        return {
            "chain": self.chain.to_json() if self.chain is not None else None,
            "coeff": self.coeff.to_json(),
            "t_exp": self.t_exp,
            "denominator": [[a, b] for a, b in self.factors],
        }


@dataclass(frozen=True)
class ZetaRational:
    terms: tuple[ZetaTerm, ...]
    variant: str = "global"
    u: tuple[int, ...] = field(default=())

    def expand(self, D: int) -> ZetaSeries:
        return expand(self, D)

    def normalize(self) -> NormalizedZeta:
        return normalize(self)

    def to_json(self) -> list[dict]:
        return [t.to_json() for t in self.terms]


def igusa_rational(
    M: Matroid | Arrangement,
    u: Sequence[int] | None = None,
    variant: str = "global",
    check_degree: int = 8,
) -> ZetaRational:
    """Closed form of the Igusa series as a sum over chains of flats.

    Each chain ``G_1 ⊊ ... ⊊ G_k`` (ranks ``r_j``) contributes
    ``chi_{M_F}(L) L^(-d - sum r_j) T^(sum u(G_j))``
    over ``prod_j (1 - L^-r_j T^u(G_j)) * (1 - L^-d T^|u|)``; the origin
    variant shifts by one more ``L^-d T^|u|``. The chain tiling of the fan
    is re-checked up to ``check_degree`` before the form is trusted.
    """
    M = _matroid_of(M)
    strict = _check_variant(variant)
    u = check_u(u, M.n)
    if check_degree >= 0 and not check_chain_bijection(M, check_degree, u):
        raise PreconditionError("chain decomposition does not match the fan lattice points")
    total_u = sum(u)
    terms = []
    for ch in chains(M):
        chi = chain_matroid(M, ch).characteristic_polynomial()
        steps = tuple(sum(u[i - 1] for i in G.elements) for G in ch.flats)
        coeff = chi.shift(-M.d - sum(ch.ranks))
        t_exp = sum(steps)
        if strict:
            coeff = coeff.shift(-M.d)
            t_exp += total_u
        factors = tuple(zip(ch.ranks, steps)) + ((M.d, total_u),)
        terms.append(ZetaTerm(coeff, t_exp, factors, ch))
    return ZetaRational(tuple(terms), variant, u)


def _times_geometric(series: list[LaurentPolyL], a: int, b: int) -> list[LaurentPolyL]:
    """Multiply by ``1 / (1 - L^-a T^b)``, truncating at the current length."""
    out = list(series)
    for k in range(b, len(out)):
        if out[k - b]:
            out[k] = out[k] + out[k - b].shift(-a)
    return out


def expand(Z: ZetaRational, D: int) -> ZetaSeries:
    if D < 0:
        raise PreconditionError("truncation order must be >= 0")
    total = [LaurentPolyL.zero()] * (D + 1)
    for term in Z.terms:
        if term.t_exp > D:
            continue
        s = [LaurentPolyL.zero()] * (D + 1)
        s[term.t_exp] = term.coeff
        for a, b in term.factors:
            s = _times_geometric(s, a, b)
        total = [x + y for x, y in zip(total, s)]
    return ZetaSeries(tuple(total))


def specialize_L(Z: ZetaSeries, q) -> ZetaSeries:
    """Substitute ``L := q`` in every coefficient."""
    q = Fraction(q)
    if q == 0:
        raise PreconditionError("cannot specialize L at 0")
    return ZetaSeries(tuple(c.evaluate(q) for c in Z.coeffs))


# closed forms over a common denominator


class Poly2:
    """Integer Laurent polynomial in L and T, keyed by ``(L-exponent, T-exponent)``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def from_term(cls, coeff: LaurentPolyL, t_exp: int) -> Poly2:
        return cls({(e, t_exp): c for e, c in coeff.terms()})

    @classmethod
    def one_minus(cls, a: int, b: int) -> Poly2:
        return cls({(0, 0): 1, (-a, b): -1})

    def __add__(self, other: Poly2) -> Poly2:
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, 0) + v
        return Poly2(acc)

    def __neg__(self) -> Poly2:
        return Poly2({k: -v for k, v in self.terms.items()})

    def __mul__(self, other: Poly2) -> Poly2:
        acc: dict[tuple[int, int], int] = {}
        for (e1, t1), c1 in self.terms.items():
            for (e2, t2), c2 in other.terms.items():
                k = (e1 + e2, t1 + t2)
                acc[k] = acc.get(k, 0) + c1 * c2
        return Poly2(acc)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly2) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], -kv[0][0]))


@dataclass(frozen=True)
class NormalizedZeta:
    """``numerator / prod (1 - L^-a T^b)^m`` with ``denominator = ((a, b, m), ...)``."""

    numerator: Poly2
    denominator: tuple[tuple[int, int, int], ...]

    def to_json(self) -> dict:
        return {
            "numerator": [[eL, eT, str(c)] for (eL, eT), c in self.numerator.sorted_terms()],
            "denominator": [list(f) for f in self.denominator],
        }


def _combine(terms: list[tuple[int, ZetaTerm]]) -> NormalizedZeta:
    common: Counter = Counter()
    for _, t in terms:
        for f, m in Counter(t.factors).items():
            common[f] = max(common[f], m)
    num = Poly2()
    for sign, t in terms:
        part = Poly2.from_term(t.coeff, t.t_exp)
        missing = common - Counter(t.factors)
        for (a, b), m in sorted(missing.items()):
            for _ in range(m):
                part = part * Poly2.one_minus(a, b)
        num = num + (part if sign > 0 else -part)
    denom = tuple((a, b, m) for (a, b), m in sorted(common.items()))
    return NormalizedZeta(num, denom)


def normalize(Z: ZetaRational) -> NormalizedZeta:
    return _combine([(1, t) for t in Z.terms])


def rational_equal(Z1: ZetaRational, Z2: ZetaRational) -> bool:
    """Exact equality of two closed forms (numerator of the difference vanishes)."""
    diff = _combine([(1, t) for t in Z1.terms] + [(-1, t) for t in Z2.terms])
    return diff.numerator.is_zero()


# Denef-Loeser series, specialized to point counts


def dl_pointcount_series(
    A: Arrangement,
    q: int | None = None,
    u: Sequence[int] | None = None,
    D: int = 12,
    variant: str = "global",
) -> ZetaSeries:
    """Series whose ``T^l`` coefficient sums ``#F_{A_w}(F_q) q^(-d - wt(w))`` over fan points.

    ``A`` may be over Q (reduced mod ``q``) or already over ``F_q``. The
    ``w = 0`` point contributes to ``T^0`` in the global variant.
    """
    strict = _check_variant(variant)
    if isinstance(A.field, PrimeField):
        if q is not None and q != A.field.p:
            raise PreconditionError(f"only q = p is supported (got q={q}, p={A.field.p})")
        Ap = A
    else:
        if q is None:
            raise PreconditionError("q is required for an arrangement over Q")
        Ap = A.reduce_mod_p(q)
    p = Ap.field.p
    M = Ap.matroid
    u = check_u(u, M.n)
    if D < 0:
        raise PreconditionError("truncation order must be >= 0")
    count_cache: dict[tuple, int] = {}
    coeffs = []
    for ell in range(D + 1):
        acc = Fraction(0)
        for w in lattice_points(M, ell, strict, u):
            Aw = Ap.initial_arrangement(w)
            cnt = count_cache.get(Aw.matrix)
            if cnt is None:
                cnt = count_cache[Aw.matrix] = count_points_milnor(Aw, u)
            acc += Fraction(cnt, p ** (M.d + M.weight(w)))
        coeffs.append(acc)
    return ZetaSeries(tuple(coeffs))
