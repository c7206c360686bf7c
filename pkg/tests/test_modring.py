import math
from itertools import product

import pytest
from hypothesis import given, strategies as st

from qgcipher.modring import (
    CompositeModulus,
    Modulus,
    ModulusMismatch,
    NotAUnit,
    Residue,
    add,
    as_int,
    egcd,
    inv,
    inv_mod,
    is_prime,
    is_unit,
    mul,
    neg,
)

Z313 = Modulus(313)


def test_add_examples():
    assert add(add(Z313(160), Z313(143)), Z313(9)).value == 312
    assert add(Modulus(5)(0), Modulus(5)(0)).value == 0
    assert add(Modulus(7)(4), Modulus(7)(6)).value == 3


def test_mul_examples():
    assert mul(Z313(25), Z313(37)).value == 299
    for x in range(313):
        assert mul(Z313(1), Z313(x)).value == x


def test_neg_examples():
    assert neg(Z313(288)).value == 25
    assert neg(Z313(0)).value == 0
    assert neg(Z313(36)).value == 277


@pytest.mark.parametrize("a, expected", [(25, 288), (1, 1), (39, 305), (213, 241), (151, 199), (200, 36)])
def test_inv_examples(a, expected):
    assert inv(Z313(a)).value == expected


def test_inv_matches_fermat_for_prime():
    for a in range(1, 313):
        assert inv_mod(a, 313) == pow(a, 311, 313)


def test_inv_rejects_non_unit():
    with pytest.raises(NotAUnit):
        inv(Modulus(10)(5))
    with pytest.raises(NotAUnit):
        inv(Z313(0))


def test_is_unit_examples():
    assert is_unit(Z313(62))
    assert not is_unit(Z313(0))
    assert not is_unit(Modulus(10)(5))


def test_modulus_mismatch():
    with pytest.raises(ModulusMismatch):
        Modulus(5)(1) + Modulus(7)(1)
    with pytest.raises(ModulusMismatch):
        Modulus(5)(1) * Modulus(7)(1)
    with pytest.raises(ModulusMismatch):
        as_int(Modulus(5)(1), 7)


def test_modulus_construction():
    with pytest.raises(ValueError):
        Modulus(1)
    assert Modulus(313).is_prime
    assert not Modulus(10).is_prime
    with pytest.raises(CompositeModulus):
        Modulus(10).require_prime()
    with pytest.raises(ValueError):
        Residue(5, Modulus(5))


def test_is_prime_against_sieve():
    primes = [p for p in range(2, 2000) if all(p % d for d in range(2, int(p ** 0.5) + 1))]
    assert [p for p in range(2000) if is_prime(p)] == primes


@pytest.mark.parametrize("n", range(2, 12))
def test_ring_laws_exhaustive(n):
    Z = Modulus(n)
    els = Z.elements()
    for a, b in product(els, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
        assert -(-a) == a
    for a, b, c in product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("n", range(2, 12))
def test_units_exhaustive(n):
    Z = Modulus(n)
    for a in Z.elements():
        image = {(a * x).value for x in Z.elements()}
        assert a.is_unit() == (len(image) == n) == (math.gcd(a.value, n) == 1)
        if a.is_unit():
            assert (a * a.inverse()).value == 1 % n


@given(st.integers(1, 2**31), st.integers(2, 2**31))
def test_egcd_bezout(a, n):
    g, x, y = egcd(a, n)
    assert g == math.gcd(a, n)
    assert a * x + n * y == g
    if g == 1:
        assert a * inv_mod(a, n) % n == 1
