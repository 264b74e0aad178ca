import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncbinom.freealg import (
    Algebra,
    ContextMismatchError,
    NCPoly,
    commutator,
    twisted_power,
    word_text,
)
from ncbinom.scalars import ParamPoly

ALG = Algebra("A", "B", "C")
A, B, C = ALG.gen("A"), ALG.gen("B"), ALG.gen("C")


def ncpolys(max_degree=3):
    words = st.lists(
        st.sampled_from(ALG.generators), min_size=0, max_size=max_degree
    ).map(tuple)
    terms = st.lists(st.tuples(words, st.integers(-3, 3)), min_size=1, max_size=4)
    return terms.map(ALG.from_terms)


def test_word_rendering():
    assert word_text(ALG.word()) == "1"
    assert word_text(ALG.word("A", "A", "B")) == "A^2*B"
    assert word_text(ALG.word("B", "A", "B")) == "B*A*B"


def test_basic_arithmetic():
    assert A + ALG.zero() == A
    assert A + B - B == A
    assert A * B + A * B == 2 * A * B
    assert A * B != B * A
    assert 1 * (A * B + C) == A * B + C
    assert (A + B) * ALG.one() == A + B


def test_pow_is_free_expansion():
    assert (A + B) ** 0 == ALG.one()
    assert (A + B) ** 2 == A * A + A * B + B * A + B * B
    cube = (A + B) ** 3
    assert len(cube.terms) == 8
    assert all(coeff == 1 for coeff in cube.terms.values())


def test_degree_additive_on_words():
    p = A * B * C
    q = B * B
    assert (p * q).degree() == p.degree() + q.degree()
    assert ALG.one().degree() == 0
    assert ALG.zero().degree() is None


@given(ncpolys(), ncpolys(), ncpolys())
@settings(deadline=None)
def test_multiplication_associative(p, q, r):
    assert (p * q) * r == p * (q * r)


@given(ncpolys(), ncpolys())
@settings(deadline=None)
def test_left_action_commutes_with_derivation(a, x):
    assert a * commutator(a, x) == commutator(a, a * x)


@given(ncpolys(), ncpolys(), ncpolys())
@settings(deadline=None)
def test_derivation_leibniz(a, x, y):
    assert commutator(a, x * y) == commutator(a, x) * y + x * commutator(a, y)


@given(ncpolys(), ncpolys())
@settings(deadline=None)
def test_right_action_difference(a, x):
    assert a * x - commutator(a, x) == x * a


@given(ncpolys(), ncpolys(), ncpolys())
@settings(deadline=None)
def test_jacobi_identity(a, b, c):
    total = (
        commutator(a, commutator(b, c))
        + commutator(b, commutator(c, a))
        + commutator(c, commutator(a, b))
    )
    assert total.is_zero()


def test_commutator_examples():
    assert commutator(A, ALG.one()).is_zero()
    assert commutator(B, A) == B * A - A * B
    assert commutator(B, A * A) == B * A * A - A * A * B


def test_twisted_power_values():
    assert twisted_power(A, B, 0) == ALG.one()
    assert twisted_power(A, B, 1) == A
    assert twisted_power(A, B, 2) == A * A + B * A - A * B
    with pytest.raises(ValueError):
        twisted_power(A, B, -1)


def test_twisted_power_homogeneous():
    for k in range(6):
        value = twisted_power(A, B, k)
        assert all(len(word) == k for word in value.terms)


def test_context_mismatch_raises():
    other = Algebra("A", "B")
    with pytest.raises(ContextMismatchError):
        A + other.gen("A")
    with pytest.raises(ContextMismatchError):
        twisted_power(A, other.gen("B"), 2)


def test_structural_algebra_equality():
    assert Algebra("A", "B") == Algebra("A", "B")
    assert Algebra("A", "B") != Algebra("B", "A")
    assert Algebra("C", "A", central=("C",)) != Algebra("C", "A")
    # independently built contexts interoperate
    p = Algebra("A", "B").gen("A") + Algebra("A", "B").gen("B")
    assert p == Algebra("A", "B").gen("A") + Algebra("A", "B").gen("B")


def test_text_rendering():
    h = ParamPoly.param("h")
    assert (A + B).text() == "A + B"
    assert (A * A - A * B).text() == "A^2 - A*B"
    assert ((1 + h) * A * A).text() == "(1 + h)*A^2"
    assert (-2 * A).text() == "-2*A"
    assert ALG.zero().text() == "0"
    assert ALG.one().text() == "1"
    assert (h * A).text() == "h*A"


def test_scalar_coefficient_arithmetic():
    h = ParamPoly.param("h")
    assert h * A + h * A == 2 * h * A
    assert (h * A).substitute({"h": 1}) == A
    assert (h * A).substitute({"h": 0}).is_zero()


def test_json_round_trip():
    h = ParamPoly.param("h")
    p = (1 + h) * A * A - 2 * A * B + ALG.one()
    doc = p.to_json()
    assert doc["terms"][0] == {"coeff": "1", "word": []}
    assert NCPoly.from_json(ALG, doc) == p


def test_coefficient_lookup():
    p = 3 * A * B + C
    assert p.coefficient(ALG.word("A", "B")) == 3
    assert p.coefficient(ALG.word("B", "A")).is_zero()


def test_truncate():
    p = (A + B) ** 3 + A * B + ALG.one()
    assert p.truncate(2) == A * B + ALG.one()
    assert p.truncate(3) == p
