"""Exact coefficient arithmetic: rationals and sparse parameter polynomials.

The coefficient ring is Q[h, lam, ...]: polynomials in named central scalar
parameters with arbitrary-precision rational coefficients.  Rationals are
stdlib ``fractions.Fraction`` (always stored reduced, positive denominator).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

Rational = Fraction

# A monomial in the parameters: sorted tuple of (name, power), powers > 0.
Monomial = tuple[tuple[str, int], ...]


class UnboundParameterError(ValueError):
    """Raised when evaluation meets a parameter with no binding."""

    def __init__(self, name: str):
        super().__init__(f"parameter {name!r} is not bound")
        self.name = name


def binom(n: int, k: int) -> Fraction:
    """Binomial coefficient C(n, k) as a Fraction; 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binom requires non-negative arguments")
    return Fraction(math.comb(n, k))


def factorial(n: int) -> Fraction:
    """Exact n! as a Fraction."""
    if n < 0:
        raise ValueError("factorial requires a non-negative argument")
    return Fraction(math.factorial(n))


def _term_order_key(item):
    mono, _ = item
    return (sum(p for _, p in mono), mono)


_TERM_SPLIT = re.compile(r" ([+-]) ")
_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^([0-9]+))?$")
_NUMBER = re.compile(r"^[0-9]+(?:/[0-9]+)?$")


class ParamPoly:
    """Sparse multivariate polynomial in named parameters over Fraction.

    Terms map a monomial (sorted tuple of (name, power) pairs, no zero
    powers) to a nonzero Fraction, so structural equality of the term map
    is semantic equality.  Instances are immutable; all operations return
    new values.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Monomial, Fraction] | None = None):
        canonical: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                canonical[mono] = canonical.get(mono, Fraction(0)) + coeff
                if not canonical[mono]:
                    del canonical[mono]
        self._terms = canonical

    @classmethod
    def zero(cls) -> ParamPoly:
        return cls()

    @classmethod
    def one(cls) -> ParamPoly:
        return cls.const(1)

    @classmethod
    def const(cls, value) -> ParamPoly:
        return cls({(): Fraction(value)})

    @classmethod
    def param(cls, name: str, power: int = 1) -> ParamPoly:
        if power < 0:
            raise ValueError("parameter powers must be non-negative")
        if power == 0:
            return cls.one()
        return cls({((name, power),): Fraction(1)})

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {()}

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (error otherwise)."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((), Fraction(0))

    def parameters(self) -> set[str]:
        return {name for mono in self._terms for name, _ in mono}

    def degree(self) -> int:
        """Total degree; 0 for constants (including zero)."""
        return max((sum(p for _, p in mono) for mono in self._terms), default=0)

    @staticmethod
    def _lift(value):
        if isinstance(value, ParamPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return ParamPoly.const(value)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + coeff
        return ParamPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly({mono: -coeff for mono, coeff in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    @staticmethod
    def _mul_monomials(m1: Monomial, m2: Monomial) -> Monomial:
        if not m1:
            return m2
        if not m2:
            return m1
        powers = dict(m1)
        for name, p in m2:
            powers[name] = powers.get(name, 0) + p
        return tuple(sorted(powers.items()))

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = self._mul_monomials(m1, m2)
                terms[mono] = terms.get(mono, Fraction(0)) + c1 * c2
        return ParamPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined")
        result = ParamPoly.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __bool__(self):
        return bool(self._terms)

    def evaluate(self, bindings: dict) -> Fraction:
        """Substitute every parameter and return the exact value.

        Every parameter occurring in the polynomial must be bound.
        """
        result = Fraction(0)
        for mono, coeff in self._terms.items():
            value = coeff
            for name, power in mono:
                if name not in bindings:
                    raise UnboundParameterError(name)
                value *= Fraction(bindings[name]) ** power
            result += value
        return result

    def substitute(self, bindings: dict) -> ParamPoly:
        """Bind a subset of the parameters, keeping the rest symbolic."""
        out = ParamPoly.zero()
        for mono, coeff in self._terms.items():
            factor = ParamPoly.const(coeff)
            for name, power in mono:
                if name in bindings:
                    factor = factor * (Fraction(bindings[name]) ** power)
                else:
                    factor = factor * ParamPoly.param(name, power)
            out = out + factor
        return out

    @staticmethod
    def _monomial_text(mono: Monomial) -> str:
        return "*".join(
            name if power == 1 else f"{name}^{power}" for name, power in mono
        )

    def text(self) -> str:
        """Canonical rendering: total degree, then exponent vector.

        Example: ``1 + 3*h + 2*h^2``.
        """
        if not self._terms:
            return "0"
        items = sorted(self._terms.items(), key=_term_order_key)
        pieces = []
        for i, (mono, coeff) in enumerate(items):
            sign = ""
            if i > 0:
                sign = " - " if coeff < 0 else " + "
                coeff = abs(coeff)
            if not mono:
                body = str(coeff)
            elif coeff == 1:
                body = self._monomial_text(mono)
            elif coeff == -1:
                body = "-" + self._monomial_text(mono)
            else:
                body = f"{coeff}*{self._monomial_text(mono)}"
            pieces.append(sign + body)
        return "".join(pieces)

    @classmethod
    def from_text(cls, text: str) -> ParamPoly:
        """Parse the canonical text rendering back into a polynomial."""
        text = text.strip()
        if not text:
            raise ValueError("empty polynomial text")
        if text == "0":
            return cls.zero()
        pieces = _TERM_SPLIT.split(text)
        terms: dict[Monomial, Fraction] = {}
        sign = Fraction(1)
        for i, piece in enumerate(pieces):
            if i % 2 == 1:
                sign = Fraction(-1) if piece == "-" else Fraction(1)
                continue
            mono, coeff = cls._parse_term(piece)
            terms[mono] = terms.get(mono, Fraction(0)) + sign * coeff
        return cls(terms)

    @staticmethod
    def _parse_term(piece: str) -> tuple[Monomial, Fraction]:
        piece = piece.strip()
        coeff = Fraction(1)
        if piece.startswith("-"):
            coeff = Fraction(-1)
            piece = piece[1:]
        powers: dict[str, int] = {}
        for factor in piece.split("*"):
            factor = factor.strip()
            if _NUMBER.match(factor):
                coeff *= Fraction(factor)
                continue
            m = _FACTOR.match(factor)
            if m is None:
                raise ValueError(f"cannot parse polynomial factor {factor!r}")
            name, power = m.group(1), int(m.group(2) or 1)
            powers[name] = powers.get(name, 0) + power
        mono = tuple(sorted((n, p) for n, p in powers.items() if p > 0))
        return mono, coeff

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"ParamPoly({self.text()})"
