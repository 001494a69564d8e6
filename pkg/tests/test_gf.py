import random

import pytest
from hypothesis import given, settings, strategies as st

from rankhull.errors import NonPrimeP, NotInBaseField, ReducibleModulus
from rankhull.gf import FieldTower, build_field, is_irreducible, standard_tower, FiniteField

TOWERS = [(2, 1), (2, 2), (3, 1), (3, 2), (4, 1), (5, 1)]


def test_f16_generator_relation(f16):
    w = f16.omega
    assert w == 2
    assert f16.pow(w, 4) == f16.add(w, 1)


def test_f9_omega_squared(f9):
    w = f9.omega
    assert f9.mul(w, w) == f9.neg(1)


def test_f4_relation(f4):
    w = f4.omega
    assert f4.add(f4.mul(w, w), f4.add(w, 1)) == 0


def test_build_rejects_nonprime():
    with pytest.raises(NonPrimeP):
        build_field(4, 1, 1, None, [1, 1, 1])


def test_build_rejects_reducible_and_names_it():
    # z^2 + 1 = (z + 1)^2 over F_2
    with pytest.raises(ReducibleModulus) as exc:
        build_field(2, 1, 1, None, [1, 0, 1])
    assert exc.value.name == "top_modulus"
    with pytest.raises(ReducibleModulus) as exc:
        build_field(2, 2, 1, [1, 0, 1], [2, 1, 1])
    assert exc.value.name == "base_modulus"


def test_irreducibility_exhaustive_small():
    F2 = FiniteField(2)
    # degree 4 irreducibles over F_2: exactly three
    count = 0
    for low in range(16):
        coeffs = [(low >> i) & 1 for i in range(4)] + [1]
        count += is_irreducible(coeffs, F2)
    assert count == 3


def test_frobenius_examples(f16):
    w = f16.omega
    assert f16.frobenius_power(w, 1) == f16.mul(w, w)
    assert f16.frobenius_power(w, 2) == f16.add(w, 1)
    for x in f16.elements():
        assert f16.frobenius_power(x, 4) == x
        assert f16.frobenius_power(x, 0) == x


def test_sigma_examples(f16, f9):
    assert f16.sigma(f16.omega) == f16.add(f16.omega, 1)
    assert f9.sigma(f9.omega) == f9.neg(f9.omega)
    assert f16.sigma(1) == 1 and f9.sigma(1) == 1


def test_trace_examples(f9, f16):
    for a in range(3):
        for b in range(3):
            assert f9.trace(f9.from_coeffs([a, b])) == 2 * a % 3
    assert f9.trace(f9.add(1, f9.omega)) == 2
    assert f9.trace(0) == 0
    assert f16.trace(f16.omega) == 0


def test_norm_examples(f9):
    assert f9.norm(f9.add(1, f9.omega)) == 2
    assert f9.norm(1) == 1
    assert f9.norm(0) == 0
    for a in range(3):
        for b in range(3):
            assert f9.norm(f9.from_coeffs([a, b])) == (a * a + b * b) % 3


def test_square_root_examples(f16_over_f4, f9):
    T = f16_over_f4
    w = 2  # the generator of F_4 inside F_q
    assert T.square_root(w) == T.Fq.mul(w, w)
    assert T.square_root(1) == 1
    assert f9.square_root(2) is None
    assert f9.square_root(1) == 1
    with pytest.raises(NotInBaseField):
        f9.square_root(f9.omega)


def test_square_root_unique_in_char2(f16_over_f4):
    Fq = f16_over_f4.Fq
    for x in Fq.elements():
        y = Fq.sqrt(x)
        assert Fq.mul(y, y) == x


@pytest.mark.parametrize("q,m", TOWERS)
def test_tower_invariants(q, m):
    T = standard_tower(q, m)
    rng = random.Random(q * 100 + m)
    xs = [rng.randrange(T.order) for _ in range(1000)]
    for x in xs:
        assert T.sigma(T.sigma(x)) == x
        assert T.in_base(T.trace(x))
        assert T.in_base(T.norm(x))
    for x, y in zip(xs, xs[1:]):
        assert T.trace(T.add(x, y)) == T.add(T.trace(x), T.trace(y))
        c = y % T.q
        assert T.trace(T.mul(c, x)) == T.mul(c, T.trace(x))
        for i in range(T.degree):
            assert T.frobenius_power(T.mul(x, y), i) == T.mul(T.frobenius_power(x, i), T.frobenius_power(y, i))
    for x in xs[:50]:
        prod = 1
        for i in range(T.degree):
            prod = T.mul(prod, T.frobenius_power(x, i))
        assert prod == T.norm(x)


@pytest.mark.parametrize("q,m", TOWERS)
def test_multiplicative_order(q, m):
    T = standard_tower(q, m)
    for x in T.nonzero():
        assert T.pow(x, T.order - 1) == 1


@pytest.mark.parametrize("q,m", TOWERS)
def test_base_field_embedding(q, m):
    T = standard_tower(q, m)
    for a in range(T.q):
        for b in range(T.q):
            assert T.add(a, b) == T.Fq.add(a, b)
            assert T.mul(a, b) == T.Fq.mul(a, b)
    assert {x for x in T.elements() if T.frobenius_power(x, 1) == x} == set(range(T.q))


def test_config_roundtrip(f16_over_f4):
    cfg = f16_over_f4.config()
    assert FieldTower.from_config(cfg) == f16_over_f4
    assert cfg["base_modulus"] == [1, 1, 1]


def test_parse_accepts_coefficient_arrays(f9, f16_over_f4):
    assert f9.parse([1, 1]) == f9.add(1, f9.omega)
    assert f9.parse(4) == 4
    T = f16_over_f4
    assert T.parse([[0, 1], [1, 0]]) == T.from_coeffs([2, 1])


def test_field_element_wrapper(f9):
    w = f9.element(f9.omega)
    one = f9.element(1)
    assert w * w == -one
    assert (one + w).norm() == 2
    assert w.sigma() == -w
    assert (w / w) == 1
    assert w.coeffs == (0, 1)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 15), st.integers(0, 15), st.integers(0, 15))
def test_field_axioms_f16(a, b, c):
    T = standard_tower(2, 2)
    assert T.mul(a, T.add(b, c)) == T.add(T.mul(a, b), T.mul(a, c))
    assert T.mul(T.mul(a, b), c) == T.mul(a, T.mul(b, c))
    if a:
        assert T.mul(a, T.inv(a)) == 1


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 80), st.integers(0, 80))
def test_field_axioms_f81(a, b):
    T = standard_tower(3, 2)
    assert T.sub(T.add(a, b), b) == a
    assert T.add(a, T.neg(a)) == 0
    if b:
        assert T.mul(T.div(a, b), b) == a
