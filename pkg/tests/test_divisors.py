import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dihedra import (
    IntegerFunction,
    InvalidArgumentError,
    divisor_transform,
    divisors,
    euler_phi,
    inverse_divisor_transform,
    k_divisors,
    moebius,
    prime_factors,
)
from dihedra.divisors import is_squarefree, signed_squarefree_quotients

ns = st.integers(min_value=1, max_value=2000)


def test_divisors_known_values():
    assert divisors(1) == (1,)
    assert divisors(12) == (1, 2, 3, 4, 6, 12)
    assert divisors(45) == (1, 3, 5, 9, 15, 45)
    assert prime_factors(1) == ()
    assert prime_factors(12) == (2, 3)
    assert prime_factors(45) == (3, 5)


def test_positivity_checks():
    for fn in (divisors, prime_factors, euler_phi, moebius):
        with pytest.raises(InvalidArgumentError):
            fn(0)
        with pytest.raises(InvalidArgumentError):
            fn(-3)


@given(ns)
def test_divisors_are_exactly_the_divisors(n):
    divs = divisors(n)
    assert list(divs) == sorted(divs)
    assert set(divs) == {d for d in range(1, n + 1) if n % d == 0}


@given(ns)
def test_euler_phi_by_counting(n):
    assert euler_phi(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


@given(ns)
def test_phi_divisor_sum(n):
    # sum of phi over divisors of n is n
    assert divisor_transform(euler_phi, n) == n


@given(ns)
def test_moebius_divisor_sum(n):
    assert divisor_transform(moebius, n) == (1 if n == 1 else 0)


def test_k_divisors_known_values():
    assert k_divisors(12, 0) == frozenset({12})
    assert k_divisors(12, 1) == frozenset({4, 6})
    assert k_divisors(12, 2) == frozenset({2})
    assert k_divisors(12, 3) == frozenset()
    assert k_divisors(30, 3) == frozenset({1})
    with pytest.raises(InvalidArgumentError):
        k_divisors(12, -1)


@given(ns)
def test_k_divisors_partition_squarefree_quotients(n):
    # the k-divisor sets are disjoint and exhaust {q | n : n/q squarefree};
    # they cover all of divisors(n) exactly when n is squarefree
    r = len(prime_factors(n))
    seen = set()
    for k in range(r + 1):
        block = k_divisors(n, k)
        assert not (block & seen)
        seen |= block
    assert seen == {q for q in divisors(n) if is_squarefree(n // q)}
    assert (seen == set(divisors(n))) == is_squarefree(n)
    assert k_divisors(n, r + 1) == frozenset()


@given(ns)
def test_signed_quotients_match_moebius(n):
    table = dict()
    for sign, q in signed_squarefree_quotients(n):
        assert moebius(n // q) == sign
        table[q] = sign
    for q in divisors(n):
        assert moebius(n // q) == table.get(q, 0)


def _random_integer_function(draw, n):
    divs = divisors(n)
    table = draw(
        st.fixed_dictionaries(
            {},
            optional={
                q: st.integers(min_value=-50, max_value=50) for q in divs
            },
        )
    )
    return IntegerFunction(n, table)


@st.composite
def integer_functions(draw):
    n = draw(ns)
    return _random_integer_function(draw, n)


@given(integer_functions())
@settings(max_examples=300)
def test_transform_then_inverse_is_identity(psi):
    n = psi.modulus
    phi = IntegerFunction(
        n, {q: divisor_transform(psi, q) for q in divisors(n)}
    )
    for q in divisors(n):
        assert inverse_divisor_transform(phi, q) == psi(q)


@given(integer_functions())
@settings(max_examples=300)
def test_inverse_matches_moebius_sum(phi):
    n = phi.modulus
    for q in divisors(n):
        moebius_sum = sum(moebius(q // d) * phi(d) for d in divisors(q))
        assert inverse_divisor_transform(phi, q) == moebius_sum


def test_integer_function_validation():
    f = IntegerFunction(12, {1: 3, 4: -2})
    assert f(1) == 3 and f(4) == -2
    assert f(5) == 0 and f(7) == 0  # off-support
    assert f.support() == (1, 4)
    with pytest.raises(InvalidArgumentError):
        IntegerFunction(12, {5: 1})  # 5 does not divide 12
    with pytest.raises(InvalidArgumentError):
        IntegerFunction(12, {4: True})
    with pytest.raises(InvalidArgumentError):
        f(0)
