"""Binomial expansion engines over a non-commutative pair A, B.

Everything here is exact free-algebra computation.  The two expansion
families are the twisted-power form (binomial sum over {(A+d_B)^k 1} B^(n-k))
and the M-basis form (ordered binomial sums M_n plus derivation corrections),
together with the closed forms they specialize to when the commutator [B, A]
is h*A^2 (gamma coefficients) or a central element C (Weyl-style).

The brute-force oracle throughout is ``(a + b) ** n`` in the free algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .freealg import Algebra, NCPoly, commutator, twisted_power
from .rewrite import FAMILIES, RelationSystem, load_system, make_family
from .scalars import ParamPoly, binom, factorial

EXPAND_METHODS = (
    "brute",
    "theorem1",
    "corollary1",
    "theorem2",
    "closed_hsq",
    "closed_weyl",
)

# which closed-form method requires which relation family
_CLOSED_METHODS = {"closed_hsq": "hsq", "closed_weyl": "weyl"}


class IncompatibleRelationError(ValueError):
    """An expansion method was paired with a relation it does not fit."""


def free_pair() -> Algebra:
    """The free two-generator context the expansions live in."""
    return Algebra("A", "B")


def weyl_triple() -> Algebra:
    """Generators A, B plus a central C to absorb the commutator."""
    return Algebra("C", "A", "B", central=("C",))


def _ab(algebra: Algebra | None) -> tuple[Algebra, NCPoly, NCPoly]:
    if algebra is None:
        algebra = free_pair()
    return algebra, algebra.gen("A"), algebra.gen("B")


def m_basis(n: int, algebra: Algebra | None = None) -> NCPoly:
    """The ordered binomial sum M_n = sum_k C(n,k) A^k B^(n-k)."""
    if algebra is None:
        algebra = free_pair()
    gen_a = algebra.generator("A")
    gen_b = algebra.generator("B")
    return algebra.from_terms(
        ((gen_a,) * k + (gen_b,) * (n - k), binom(n, k)) for k in range(n + 1)
    )


def twisted_expand(n: int, algebra: Algebra | None = None) -> NCPoly:
    """Binomial expansion sum_k C(n,k) {(A+d_B)^k 1} B^(n-k).

    Free-algebra equal to (A+B)^n: the twisted powers absorb every
    reordering correction while the binomial coefficient survives.
    """
    algebra, a, b = _ab(algebra)
    total = algebra.zero()
    for k in range(n + 1):
        total = total + binom(n, k) * twisted_power(a, b, k) * b ** (n - k)
    return total


def essential_part(k: int, via: str = "difference",
                   algebra: Algebra | None = None) -> NCPoly:
    """D_k = (A+d_B)^k 1 - A^k, the deviation from the commutative power.

    via="difference" subtracts the plain power from the twisted power;
    via="recurrence" builds D_{j+1} = d_B(A^j) + (A + d_B) D_j from D_0 = 0.
    Both paths agree; D_0 = D_1 = 0 and D_k vanishes identically whenever
    A and B commute.
    """
    algebra, a, b = _ab(algebra)
    if via == "difference":
        return twisted_power(a, b, k) - a ** k
    if via == "recurrence":
        d = algebra.zero()
        for j in range(k):
            d = commutator(b, a ** j) + a * d + commutator(b, d)
        return d
    raise ValueError(f"unknown via {via!r}")


def essential_expand(n: int, algebra: Algebra | None = None) -> NCPoly:
    """Expansion M_n + sum_k C(n,k) D_k B^(n-k); equals (A+B)^n freely."""
    algebra, a, b = _ab(algebra)
    total = m_basis(n, algebra)
    for k in range(n + 1):
        d_k = essential_part(k, algebra=algebra)
        if not d_k.is_zero():
            total = total + binom(n, k) * d_k * b ** (n - k)
    return total


def m_derivation_expand(n: int, algebra: Algebra | None = None) -> NCPoly:
    """Expansion M_n + sum_{k<=n-2} (A+B)^k d_B(M_{n-1-k}).

    The (A+B)^k factors are computed by brute power so the identity is
    checked against an independent path, not through itself.
    """
    algebra, a, b = _ab(algebra)
    s = a + b
    total = m_basis(n, algebra)
    for k in range(n - 1):
        total = total + s ** k * commutator(b, m_basis(n - 1 - k, algebra))
    return total


def m_product_defect(n: int, algebra: Algebra | None = None) -> NCPoly:
    """M_1 * M_n - M_{n+1} - d_B(M_n); identically zero."""
    algebra, a, b = _ab(algebra)
    m_n = m_basis(n, algebra)
    return m_basis(1, algebra) * m_n - m_basis(n + 1, algebra) - commutator(b, m_n)


def m_power_defect(n: int, algebra: Algebra | None = None) -> NCPoly:
    """M_1^n - M_n - sum_{k<=n-2} M_1^k d_B(M_{n-1-k}); identically zero."""
    algebra, a, b = _ab(algebra)
    m_1 = m_basis(1, algebra)
    total = m_1 ** n - m_basis(n, algebra)
    for k in range(n - 1):
        total = total - m_1 ** k * commutator(b, m_basis(n - 1 - k, algebra))
    return total


def gamma_factor(n: int) -> ParamPoly:
    """The product (1+h)(1+2h)...(1+(n-1)h); empty product for n <= 1.

    Computed by the first-order recurrence gamma_{k+1} = (1 + k*h) gamma_k.
    Evaluates to 1 at h=0 and to n! at h=1.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    h = ParamPoly.param("h")
    value = ParamPoly.one()
    for k in range(1, n):
        value = (1 + k * h) * value
    return value


def closed_form_hsq(n: int, algebra: Algebra | None = None) -> NCPoly:
    """Ordered-basis closed form sum_k C(n,k) gamma_k(h) A^k B^(n-k).

    Quotient-equal to (A+B)^n under the relation [B, A] = h*A^2.
    """
    if algebra is None:
        algebra = free_pair()
    gen_a = algebra.generator("A")
    gen_b = algebra.generator("B")
    return algebra.from_terms(
        ((gen_a,) * k + (gen_b,) * (n - k), binom(n, k) * gamma_factor(k))
        for k in range(n + 1)
    )


def _weyl_coeff_value(n: int, k: int) -> Fraction:
    return factorial(n) / (factorial(n - 2 * k) * factorial(k) * Fraction(2) ** k)


def weyl_coefficient(n: int, k: int, via: str = "closed",
                     algebra: Algebra | None = None) -> NCPoly:
    """Central coefficient n!/((n-2k)! k! 2^k) * C^k of the Weyl closed form.

    via="closed" evaluates that quotient directly; via="recurrence" builds
    the triangle row by row from the seed value 1 at k=0.
    """
    if algebra is None:
        algebra = weyl_triple()
    if k < 0 or 2 * k > n:
        raise ValueError(f"k must satisfy 0 <= 2k <= n, got n={n}, k={k}")
    if via == "closed":
        word = (algebra.generator("C"),) * k
        return NCPoly(algebra, {word: ParamPoly.const(_weyl_coeff_value(n, k))})
    if via == "recurrence":
        c = algebra.gen("C")
        row = {0: algebra.one()}
        for m in range(n):
            new = {0: algebra.one()}
            for j in range(1, (m + 1) // 2 + 1):
                term = row.get(j, algebra.zero())
                new[j] = term + (m + 2 - 2 * j) * c * row[j - 1]
            row = new
        return row[k]
    raise ValueError(f"unknown via {via!r}")


def closed_form_weyl(n: int, algebra: Algebra | None = None) -> NCPoly:
    """Closed form sum_{2k<=n} M_{n-2k} * A(n,k) when [B, A] = C is central.

    Quotient-equal to (A+B)^n under the Weyl relation; the C powers are
    kept on the right as constructed (they are central anyway).
    """
    if algebra is None:
        algebra = weyl_triple()
    total = algebra.zero()
    for k in range(n // 2 + 1):
        total = total + m_basis(n - 2 * k, algebra) * weyl_coefficient(
            n, k, algebra=algebra
        )
    return total


def weyl_m_text(n: int) -> str:
    """Render the Weyl closed form over the M-basis, e.g. ``M_2 + C``."""
    pieces = []
    for k in range(n // 2 + 1):
        value = _weyl_coeff_value(n, k)
        m = n - 2 * k
        factors = []
        if value != 1:
            factors.append(str(value))
        if k == 1:
            factors.append("C")
        elif k > 1:
            factors.append(f"C^{k}")
        if m > 0:
            factors.append(f"M_{m}")
        pieces.append("*".join(factors) if factors else "M_0")
    return " + ".join(pieces)


def _exp_series(p: NCPoly, order: int) -> NCPoly:
    """sum_{k<=order} p^k / k!, truncated to total degree <= order."""
    total = p.algebra.one()
    power = p.algebra.one()
    for k in range(1, order + 1):
        power = (power * p).truncate(order)
        total = total + power * (1 / factorial(k))
    return total


def exp_defect(which: str, order: int, algebra: Algebra | None = None) -> NCPoly:
    """Defect of an exponential factorization, truncated by total degree.

    which="factored": e^(A+B) - [e^(A+d_B) 1] e^B
    which="split":    e^(A+B) - e^A e^B - sum_k (1/k!) D_k e^B

    Both identities hold degree by degree, so the truncated defect is
    exactly zero for every order.
    """
    algebra, a, b = _ab(algebra)
    lhs = _exp_series(a + b, order)
    e_b = _exp_series(b, order)
    if which == "factored":
        twisted = algebra.zero()
        for k in range(order + 1):
            twisted = twisted + twisted_power(a, b, k) * (1 / factorial(k))
        rhs = twisted * e_b
    elif which == "split":
        rhs = _exp_series(a, order) * e_b
        for k in range(order + 1):
            d_k = essential_part(k, algebra=algebra)
            if not d_k.is_zero():
                rhs = rhs + d_k * (1 / factorial(k)) * e_b
    else:
        raise ValueError(f"unknown identity {which!r}")
    return (lhs - rhs).truncate(order)


def resolve_relation(relation) -> tuple[RelationSystem | None, str | None]:
    """Accept None, a family name, a JSON file path, or a RelationSystem.

    Returns the system plus the identifier used in reports.
    """
    if relation is None:
        return None, None
    if isinstance(relation, RelationSystem):
        return relation, relation.name or "user"
    if isinstance(relation, str):
        if relation in FAMILIES:
            return make_family(relation), relation
        return load_system(relation), relation
    raise TypeError(f"cannot interpret {relation!r} as a relation system")


@dataclass
class ExpansionReport:
    """One expansion next to its brute-force oracle verdict."""

    n: int
    method: str
    relation: str | None
    oracle_match: bool
    result: NCPoly

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "method": self.method,
            "relation": self.relation,
            "oracle_match": self.oracle_match,
            "result": self.result.to_json(),
        }


def expansion_report(n: int, method: str, relation=None) -> ExpansionReport:
    """Run one expansion method and compare it against (A+B)^n.

    Free-algebra methods are compared structurally when no relation is
    given, else by quotient equality under the relation.  The closed forms
    require their own family (supplied automatically when omitted).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    system, label = resolve_relation(relation)
    required = _CLOSED_METHODS.get(method)
    if required is not None:
        if system is None:
            system, label = make_family(required), required
        elif label != required:
            raise IncompatibleRelationError(
                f"method {method} requires the {required} relation, got {label}"
            )
    algebra = system.algebra if system is not None else free_pair()
    if not (algebra.has_generator("A") and algebra.has_generator("B")):
        raise IncompatibleRelationError(
            "the relation system must declare generators A and B"
        )
    if method == "brute":
        result = (algebra.gen("A") + algebra.gen("B")) ** n
    elif method == "theorem1":
        result = twisted_expand(n, algebra)
    elif method == "corollary1":
        result = essential_expand(n, algebra)
    elif method == "theorem2":
        result = m_derivation_expand(n, algebra)
    elif method == "closed_hsq":
        result = closed_form_hsq(n, algebra)
    elif method == "closed_weyl":
        result = closed_form_weyl(n, algebra)
    else:
        raise ValueError(f"unknown method {method!r}")
    brute = (algebra.gen("A") + algebra.gen("B")) ** n
    if system is None:
        match = result == brute
    else:
        match = system.quotient_eq(result, brute)
    return ExpansionReport(n, method, label, match, result)
