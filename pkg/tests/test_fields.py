import numpy as np
import pytest

from chardeg.fields import FieldError, field_from_json, field_make


def test_prime_field_modulus_convention():
    F = field_make(3, 1)
    assert F.modulus == (0, 1)
    assert F.order == 3


def test_f4_modulus():
    assert field_make(2, 2).modulus == (1, 1, 1)


def test_f9_modulus_minimal_scan():
    # x^2 + 1 is the first irreducible in candidate-integer order over F_3
    assert field_make(3, 2).modulus == (1, 0, 1)


def test_field_make_deterministic():
    a = field_make(5, 2)
    b = field_make(5, 2)
    assert a.modulus == b.modulus
    assert a is b  # cached


def test_field_make_rejects_bad_input():
    with pytest.raises(FieldError):
        field_make(6, 1)
    with pytest.raises(FieldError):
        field_make(2, 0)
    with pytest.raises(FieldError):
        field_make(2, 21)  # order 2^21 over the cap


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (7, 2), (3, 4)])
def test_field_axioms_exhaustive(p, k):
    """Associativity, distributivity and inverses on the full tables."""
    F = field_make(p, k)
    q = F.order
    assert q <= 81
    add_t, mul_t, neg_t, inv_t = F.tables
    idx = np.arange(q)
    # commutativity
    assert np.array_equal(add_t, add_t.T)
    assert np.array_equal(mul_t, mul_t.T)
    # associativity over all triples
    ab_c = mul_t[mul_t[:, :, None], idx[None, None, :]]
    a_bc = mul_t[idx[:, None, None], mul_t[None, :, :]]
    assert np.array_equal(ab_c, a_bc)
    ab_c = add_t[add_t[:, :, None], idx[None, None, :]]
    a_bc = add_t[idx[:, None, None], add_t[None, :, :]]
    assert np.array_equal(ab_c, a_bc)
    # distributivity over all triples
    lhs = mul_t[idx[:, None, None], add_t[None, :, :]]
    rhs = add_t[
        mul_t[idx[:, None, None], idx[None, :, None]],
        mul_t[idx[:, None, None], idx[None, None, :]],
    ]
    assert np.array_equal(lhs, rhs)
    # additive and multiplicative inverses
    assert np.array_equal(add_t[idx, neg_t], np.zeros(q, dtype=np.int64))
    assert np.array_equal(mul_t[idx[1:], inv_t[1:]], np.ones(q - 1, dtype=np.int64))


def test_generator_has_full_order():
    F = field_make(3, 2)
    g = F.generator
    seen = set()
    x = 1
    for _ in range(F.order - 1):
        x = F.mul(x, g)
        seen.add(x)
    assert len(seen) == F.order - 1


def test_scalar_pow_and_inv():
    F = field_make(7, 1)
    for a in range(1, 7):
        assert F.mul(a, F.inv(a)) == 1
        assert F.power(a, 6) == 1


def test_json_round_trip():
    F = field_make(3, 2)
    assert field_from_json(F.to_json()) is F
    with pytest.raises(FieldError):
        field_from_json({"p": 3, "k": 2, "modulus": [2, 0, 1]})
