"""Integer Laurent polynomials in the symbol L (the class of the affine line)."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPolyL:
    """Immutable Laurent polynomial ``sum c_e L^e`` with integer coefficients.

    Zero coefficients are never stored.

    >>> L = LaurentPolyL.gen()
    >>> (L - 1) * (L - 2)
    LaurentPolyL('L^2 - 3*L + 2')
    >>> ((L - 1) * L**-2).evaluate(3)
    Fraction(2, 9)
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if not isinstance(e, int) or isinstance(e, bool):
                raise TypeError(f"exponent must be int, got {e!r}")
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficient must be int, got {c!r}")
            acc[e] = acc.get(e, 0) + c
        self._terms = tuple(sorted(((e, c) for e, c in acc.items() if c), reverse=True))
        self._hash = None

    # constructors

    @classmethod
    def gen(cls) -> LaurentPolyL:
        return cls({1: 1})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPolyL:
        return cls({exponent: coeff})

    @classmethod
    def const(cls, c: int) -> LaurentPolyL:
        return cls({0: c})

    @classmethod
    def zero(cls) -> LaurentPolyL:
        return cls()

    # accessors

    def terms(self) -> tuple[tuple[int, int], ...]:
        """(exponent, coefficient) pairs, highest exponent first."""
        return self._terms

    def coeff(self, e: int) -> int:
        for ee, c in self._terms:
            if ee == e:
                return c
        return 0

    @property
    def degree(self) -> int | None:
        return self._terms[0][0] if self._terms else None

    @property
    def low_degree(self) -> int | None:
        return self._terms[-1][0] if self._terms else None

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    # arithmetic

    @staticmethod
    def _coerce(other) -> LaurentPolyL | None:
        if isinstance(other, LaurentPolyL):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return LaurentPolyL.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return LaurentPolyL(self._terms + o._terms)

    __radd__ = __add__

    def __neg__(self) -> LaurentPolyL:
        return LaurentPolyL((e, -c) for e, c in self._terms)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in o._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPolyL(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPolyL:
        if k < 0:
            # only monomials are units
            if len(self._terms) != 1 or self._terms[0][1] not in (1, -1):
                raise ValueError("negative power of a non-unit")
            (e, c), = self._terms
            return LaurentPolyL({e * k: c ** (-k)})
        out = LaurentPolyL.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> LaurentPolyL:
        """Multiply by L^k."""
        return LaurentPolyL((e + k, c) for e, c in self._terms)

    def evaluate(self, q) -> Fraction:
        """Substitute L := q (exact)."""
        q = Fraction(q)
        if q == 0 and self._terms and self._terms[-1][0] < 0:
            raise ZeroDivisionError("negative power of L at L = 0")
        return sum((c * q ** e for e, c in self._terms), Fraction(0))

    # comparison / hashing

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    # text forms

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self._terms):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = "L" if e == 1 else f"L^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPolyL('{self}')"

    def to_json(self) -> dict[str, str]:
        """``{"L^e": "c"}`` with decimal-string coefficients, highest exponent first."""
        return {f"L^{e}": str(c) for e, c in self._terms}

    @classmethod
    def from_json(cls, obj: Mapping[str, str]) -> LaurentPolyL:
        terms = {}
        for key, val in obj.items():
            if not key.startswith("L^"):
                raise ValueError(f"bad monomial key {key!r}")
            terms[int(key[2:])] = int(val)
        return cls(terms)

