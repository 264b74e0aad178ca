"""The free associative algebra with identity over the parameter ring.

Words are tuples of generators, polynomials are sparse maps word -> ParamPoly.
No relations are applied here: ``A*B`` and ``B*A`` stay distinct words, which
is what makes structural equality of term maps semantic equality.  Quotients
by commutation relations live in :mod:`ncbinom.rewrite`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .scalars import ParamPoly


class ContextMismatchError(ValueError):
    """Arithmetic attempted between values from different algebra contexts."""


@dataclass(frozen=True)
class Generator:
    """One symbol of the alphabet; ``central`` marks it as commuting with
    everything (only the rewrite layer acts on this flag)."""

    name: str
    central: bool = False
    index: int = 0


# A word (monomial of the free algebra): possibly empty tuple of generators.
Word = tuple[Generator, ...]


def word_key(word: Word):
    """Canonical order: length first, then generator declaration order."""
    return (len(word), tuple(g.index for g in word))


def word_text(word: Word) -> str:
    """Run-length rendering, e.g. ``A^2*B``; the empty word is ``1``."""
    if not word:
        return "1"
    parts = []
    for name, run in itertools.groupby(g.name for g in word):
        count = sum(1 for _ in run)
        parts.append(name if count == 1 else f"{name}^{count}")
    return "*".join(parts)


class Algebra:
    """A generator context: an ordered alphabet with centrality flags.

    Equality is structural (same names, flags, order), so algebras built
    independently from the same description interoperate.
    """

    __slots__ = ("generators", "_by_name")

    def __init__(self, *names: str, central=()):
        central = frozenset(central)
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        unknown = central - set(names)
        if unknown:
            raise ValueError(f"central flags for unknown generators: {sorted(unknown)}")
        self.generators = tuple(
            Generator(name, name in central, i) for i, name in enumerate(names)
        )
        self._by_name = {g.name: g for g in self.generators}

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        names = ", ".join(
            f"{g.name}{'*' if g.central else ''}" for g in self.generators
        )
        return f"Algebra({names})"

    def generator(self, name: str) -> Generator:
        try:
            return self._by_name[name]
        except KeyError:
            raise ValueError(f"unknown generator {name!r}") from None

    def has_generator(self, name: str) -> bool:
        return name in self._by_name

    def word(self, *names: str) -> Word:
        return tuple(self.generator(name) for name in names)

    def gen(self, name: str) -> NCPoly:
        """The generator as a polynomial atom."""
        return NCPoly(self, {(self.generator(name),): ParamPoly.one()})

    def zero(self) -> NCPoly:
        return NCPoly(self, {})

    def one(self) -> NCPoly:
        return NCPoly(self, {(): ParamPoly.one()})

    def from_terms(self, terms) -> NCPoly:
        """Build a polynomial from (word, coefficient) pairs, merging duplicates."""
        acc: dict[Word, ParamPoly] = {}
        for word, coeff in terms:
            word = tuple(word)
            acc[word] = acc.get(word, ParamPoly.zero()) + coeff
        return NCPoly(self, acc)


class NCPoly:
    """Finite ParamPoly-weighted sum of words; immutable."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: Algebra, terms: dict[Word, ParamPoly]):
        pruned = {}
        for word, coeff in terms.items():
            if not isinstance(coeff, ParamPoly):
                coeff = ParamPoly.const(coeff)
            if not coeff.is_zero():
                pruned[word] = coeff
        self.algebra = algebra
        self.terms = pruned

    def _coerce(self, other) -> NCPoly | None:
        if isinstance(other, NCPoly):
            if other.algebra != self.algebra:
                raise ContextMismatchError(
                    "operands belong to different algebra contexts"
                )
            return other
        if isinstance(other, (int, Fraction, ParamPoly)):
            coeff = other if isinstance(other, ParamPoly) else ParamPoly.const(other)
            return NCPoly(self.algebra, {(): coeff})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            terms[word] = terms.get(word, ParamPoly.zero()) + coeff
        return NCPoly(self.algebra, terms)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly(self.algebra, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: dict[Word, ParamPoly] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                word = w1 + w2
                coeff = c1 * c2
                if word in terms:
                    terms[word] = terms[word] + coeff
                else:
                    terms[word] = coeff
        return NCPoly(self.algebra, terms)

    def __rmul__(self, other):
        # scalars commute with everything, so left scalar action is the same
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined")
        result = self.algebra.one()
        for _ in range(n):
            result = self * result
        return result

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self.algebra == other.algebra and self.terms == other.terms
        if isinstance(other, (int, Fraction, ParamPoly)):
            return self == self._coerce(other)
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int | None:
        """Maximal word length, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(len(w) for w in self.terms)

    def truncate(self, max_degree: int) -> NCPoly:
        """Drop all words longer than ``max_degree``."""
        return NCPoly(
            self.algebra,
            {w: c for w, c in self.terms.items() if len(w) <= max_degree},
        )

    def coefficient(self, word: Word) -> ParamPoly:
        return self.terms.get(tuple(word), ParamPoly.zero())

    def substitute(self, bindings: dict) -> NCPoly:
        """Bind coefficient parameters (e.g. h -> 1), keeping words intact."""
        return NCPoly(
            self.algebra, {w: c.substitute(bindings) for w, c in self.terms.items()}
        )

    def canonical_terms(self):
        """Terms sorted by word length, then generator declaration order."""
        return sorted(self.terms.items(), key=lambda item: word_key(item[0]))

    def text(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for i, (word, coeff) in enumerate(self.canonical_terms()):
            sign, body = self._term_text(word, coeff, lead=(i == 0))
            pieces.append((" - " if sign < 0 else " + ") + body if i else body)
        return "".join(pieces)

    @staticmethod
    def _term_text(word: Word, coeff: ParamPoly, lead: bool):
        """Return (sign, body); sign only meaningful for non-lead terms."""
        terms = coeff.terms
        if len(terms) == 1:
            ((_, value),) = terms.items()
            sign = -1 if value < 0 else 1
            shown = coeff if (lead or sign > 0) else -coeff
            if not word:
                return sign, shown.text()
            if shown == 1:
                return sign, word_text(word)
            if shown == -1:
                return sign, "-" + word_text(word)
            return sign, f"{shown.text()}*{word_text(word)}"
        body = f"({coeff.text()})"
        if word:
            body += f"*{word_text(word)}"
        return 1, body

    def to_json(self) -> dict:
        return {
            "terms": [
                {"coeff": coeff.text(), "word": [g.name for g in word]}
                for word, coeff in self.canonical_terms()
            ]
        }

    @classmethod
    def from_json(cls, algebra: Algebra, doc: dict) -> NCPoly:
        terms = []
        for entry in doc["terms"]:
            word = algebra.word(*entry["word"])
            terms.append((word, ParamPoly.from_text(entry["coeff"])))
        return algebra.from_terms(terms)

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"NCPoly({self.text()})"


def commutator(x: NCPoly, p: NCPoly) -> NCPoly:
    """The inner derivation of x applied to p: x*p - p*x."""
    return x * p - p * x


def twisted_power(a: NCPoly, b: NCPoly, k: int) -> NCPoly:
    """Apply X -> a*X + [b, X] to the identity k times.

    The result is homogeneous of degree k when a and b are generators,
    since both left multiplication and the commutator raise degree by 1.
    """
    if a.algebra != b.algebra:
        raise ContextMismatchError("a and b must share an algebra context")
    if k < 0:
        raise ValueError("k must be non-negative")
    result = a.algebra.one()
    for _ in range(k):
        result = a * result + commutator(b, result)
    return result
