"""Normal-ordering rewrite systems over the free algebra.

A RelationSystem quotients the free algebra by adjacent-swap rules: every
out-of-order adjacent pair of distinct non-central generators rewrites to a
replacement polynomial.  Normal forms are the PBW-style ordered monomials
(central generators first, then the non-central alphabet order), so equality
in the quotient reduces to structural equality of normal forms.

Termination of the built-in families follows from a two-part measure that
every admissible replacement term must respect: either it is the plain
transposition (the word's inversion count drops by one at an unchanged
letter multiset), or its multiset of non-central letters is strictly smaller
(a letter vanishes or is replaced by strictly earlier ones), which is
well-founded in the Dershowitz-Manna multiset order.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field

from .freealg import Algebra, ContextMismatchError, Generator, NCPoly, Word
from .scalars import ParamPoly

DEFAULT_BUDGET = 10**6

FAMILIES = ("commutative", "hsq", "weyl")


class RewriteError(Exception):
    pass


class InvalidSystemError(RewriteError):
    """normal_form was called on a system that fails validation."""


class BudgetExceededError(RewriteError):
    """The rule-application budget ran out; the system is likely pathological."""


@dataclass
class ValidationReport:
    ok: bool
    violations: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)


def _dm_smaller(candidate: Counter, reference: Counter) -> bool:
    """Dershowitz-Manna multiset order on generator positions.

    True iff ``candidate`` < ``reference``: they differ, and every position
    whose count grew is compensated by a strictly later position whose count
    shrank.
    """
    if candidate == reference:
        return False
    for pos, count in candidate.items():
        if count > reference.get(pos, 0):
            if not any(
                later > pos and candidate.get(later, 0) < ref_count
                for later, ref_count in reference.items()
            ):
                return False
    return True


class RelationSystem:
    """An ordered alphabet plus adjacent-swap rewrite rules.

    ``rules`` maps an out-of-order pair of generator names
    ``(later, earlier)`` to its normal-form replacement polynomial.
    Immutable after construction; ``normal_form`` is pure.
    """

    def __init__(self, algebra: Algebra, rules: dict[tuple[str, str], NCPoly],
                 name: str | None = None, builtin: bool = False):
        self.algebra = algebra
        self.name = name
        self.builtin = builtin
        self.alphabet: tuple[Generator, ...] = tuple(
            sorted(algebra.generators, key=lambda g: (not g.central, g.index))
        )
        self._position = {g: i for i, g in enumerate(self.alphabet)}
        self.rules = dict(rules)
        self._report: ValidationReport | None = None

    def gen(self, name: str) -> NCPoly:
        return self.algebra.gen(name)

    def position(self, gen: Generator) -> int:
        return self._position[gen]

    def _noncentral_multiset(self, word: Word) -> Counter:
        return Counter(self._position[g] for g in word if not g.central)

    def _is_normal_word(self, word: Word) -> bool:
        return all(
            self._position[word[i]] <= self._position[word[i + 1]]
            for i in range(len(word) - 1)
        )

    def validate(self) -> ValidationReport:
        """Check rule coverage, normal-form replacements, and admissibility.

        Violations are reported, not raised: an inadmissible rule is the
        signal this operation exists to produce.
        """
        if self._report is not None:
            return self._report
        violations: list[str] = []
        warnings: list[str] = []

        noncentral = [g for g in self.alphabet if not g.central]
        required = {
            (later.name, earlier.name)
            for i, earlier in enumerate(noncentral)
            for later in noncentral[i + 1:]
        }
        for pair in sorted(required - set(self.rules)):
            violations.append(f"missing rule for out-of-order pair {pair[0]}{pair[1]}")

        for (later_name, earlier_name), replacement in self.rules.items():
            label = f"rule {later_name}{earlier_name}"
            if not (self.algebra.has_generator(later_name)
                    and self.algebra.has_generator(earlier_name)):
                violations.append(f"{label}: unknown generator in pair")
                continue
            later = self.algebra.generator(later_name)
            earlier = self.algebra.generator(earlier_name)
            if later.central or earlier.central:
                violations.append(
                    f"{label}: central generators commute implicitly, no rule allowed"
                )
                continue
            if self._position[later] <= self._position[earlier]:
                violations.append(f"{label}: pair is not out of order")
                continue
            if replacement.algebra != self.algebra:
                violations.append(f"{label}: replacement from a different context")
                continue
            pair_multiset = self._noncentral_multiset((later, earlier))
            transposed = (earlier, later)
            for word, _ in replacement.canonical_terms():
                if not self._is_normal_word(word):
                    violations.append(
                        f"{label}: replacement term '{_word_name(word)}' "
                        "is not in normal form"
                    )
                if word == transposed:
                    continue
                term_multiset = self._noncentral_multiset(word)
                degree_drops = sum(term_multiset.values()) < sum(pair_multiset.values())
                if not (degree_drops or _dm_smaller(term_multiset, pair_multiset)):
                    violations.append(
                        f"{label}: replacement term '{_word_name(word)}' "
                        "decreases neither the inversion count nor the "
                        "non-central letter multiset"
                    )

        if not self.builtin:
            warnings.append(
                "user-defined system: confluence is only checked statistically"
            )
        self._report = ValidationReport(not violations, violations, warnings)
        return self._report

    def _find_redex(self, word: Word, strategy: str) -> int | None:
        positions = range(len(word) - 1)
        if strategy == "rightmost":
            positions = reversed(positions)
        for i in positions:
            if self._position[word[i]] > self._position[word[i + 1]]:
                return i
        return None

    def normal_form(self, p: NCPoly, budget: int = DEFAULT_BUDGET,
                    strategy: str = "leftmost") -> NCPoly:
        """Rewrite to the ordered-monomial normal form.

        ``strategy`` picks which redex each step reduces ("leftmost" or
        "rightmost"); for confluent systems the result is the same.
        """
        report = self.validate()
        if not report.ok:
            raise InvalidSystemError("; ".join(report.violations))
        if p.algebra != self.algebra:
            raise ContextMismatchError("polynomial belongs to a different context")
        if strategy not in ("leftmost", "rightmost"):
            raise ValueError(f"unknown strategy {strategy!r}")

        acc: dict[Word, ParamPoly] = {}
        work: list[tuple[Word, ParamPoly]] = list(p.terms.items())
        steps = 0
        while work:
            word, coeff = work.pop()
            i = self._find_redex(word, strategy)
            if i is None:
                acc[word] = acc.get(word, ParamPoly.zero()) + coeff
                continue
            steps += 1
            if steps > budget:
                raise BudgetExceededError(
                    f"exceeded {budget} rule applications; "
                    "system looks non-terminating"
                )
            left, right = word[:i], word[i + 2:]
            x, y = word[i], word[i + 1]
            if x.central or y.central:
                work.append((left + (y, x) + right, coeff))
                continue
            replacement = self.rules[(x.name, y.name)]
            for rword, rcoeff in replacement.terms.items():
                work.append((left + rword + right, coeff * rcoeff))
        return NCPoly(self.algebra, acc)

    def quotient_eq(self, p: NCPoly, q: NCPoly, budget: int = DEFAULT_BUDGET) -> bool:
        """Equality in the quotient algebra: identical normal forms."""
        return self.normal_form(p, budget) == self.normal_form(q, budget)

    def __repr__(self):
        label = self.name or "user"
        return f"RelationSystem({label}, {len(self.rules)} rules)"


def _word_name(word: Word) -> str:
    return "".join(g.name for g in word) if word else "1"


def make_family(family: str) -> RelationSystem:
    """One of the built-in relation families.

    commutative: BA -> AB over {A, B}
    hsq:         BA -> AB + h*A^2 over {A, B} (the commutator of B with A
                 is h times A squared)
    weyl:        BA -> AB + C over {C central, A, B}
    """
    if family == "commutative":
        alg = Algebra("A", "B")
        a, b = alg.gen("A"), alg.gen("B")
        rules = {("B", "A"): a * b}
    elif family == "hsq":
        alg = Algebra("A", "B")
        a, b = alg.gen("A"), alg.gen("B")
        rules = {("B", "A"): a * b + ParamPoly.param("h") * a * a}
    elif family == "weyl":
        alg = Algebra("C", "A", "B", central=("C",))
        a, b, c = alg.gen("A"), alg.gen("B"), alg.gen("C")
        rules = {("B", "A"): a * b + c}
    else:
        raise ValueError(f"unknown relation family {family!r}")
    return RelationSystem(alg, rules, name=family, builtin=True)


def load_system(source) -> RelationSystem:
    """Load a user-defined system from a JSON document, file path, or dict.

    Schema::

        {"alphabet": [{"name": "C", "central": true}, ...],
         "rules": [{"pair": ["B", "A"], "replacement": <NCPoly JSON>}]}
    """
    if isinstance(source, str):
        with open(source, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    else:
        doc = source
    names = [entry["name"] for entry in doc["alphabet"]]
    central = tuple(e["name"] for e in doc["alphabet"] if e.get("central", False))
    algebra = Algebra(*names, central=central)
    rules = {}
    for entry in doc.get("rules", []):
        later, earlier = entry["pair"]
        rules[(later, earlier)] = NCPoly.from_json(algebra, entry["replacement"])
    return RelationSystem(algebra, rules, name=None, builtin=False)
