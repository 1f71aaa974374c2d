from math import gcd

import pytest

from core.errors import NotAUnitError, RingError, RingMismatchError
from core.ring import ChainInfo, inv, is_unit, reduce_mod_gamma, ring_new, unit_normalizer, xgcd


def test_chain_ring_structure():
    assert ring_new(25).chain == ChainInfo(p=5, e=2, gamma=5)
    assert ring_new(8).chain == ChainInfo(p=2, e=3, gamma=2)


def test_non_chain_ring():
    ring = ring_new(30)
    assert not ring.is_chain
    assert ring.residue_field is None
    with pytest.raises(RingError):
        ring.require_chain()


def test_prime_is_field():
    ring = ring_new(7)
    assert ring.is_field
    assert ring.residue_field == ring


@pytest.mark.parametrize('m', [0, 1, -5, 2 ** 64, 2.5, True])
def test_bad_modulus(m):
    with pytest.raises(RingError):
        ring_new(m)


def test_ring_new_is_cached():
    assert ring_new(12) is ring_new(12)


def test_arithmetic_wraps():
    ring = ring_new(6)
    assert (ring.elem(3) * ring.elem(5)).value == 3
    assert (ring.elem(4) + ring.elem(5)).value == 3
    assert (ring.elem(1) - ring.elem(2)).value == 5
    assert (-ring.elem(2)).value == 4
    assert (2 * ring.elem(4)).value == 2


def test_mixed_rings_rejected():
    with pytest.raises(RingMismatchError):
        ring_new(4).elem(1) + ring_new(8).elem(1)


def test_non_numeric_operand_rejected():
    with pytest.raises(TypeError):
        ring_new(4).elem(1) + "1"


def test_xgcd_bezout():
    g, s, t = xgcd(240, 46)
    assert g == 2
    assert s * 240 + t * 46 == 2


def test_inverse():
    ring = ring_new(30)
    assert inv(ring.elem(7)).value == 13
    assert (ring.elem(11) * inv(ring.elem(11))).value == 1


def test_inverse_of_non_unit():
    with pytest.raises(NotAUnitError):
        inv(ring_new(30).elem(6))


def test_units_of_z12():
    ring = ring_new(12)
    assert [v for v in range(12) if is_unit(ring.elem(v))] == [1, 5, 7, 11]


@pytest.mark.parametrize('a,m', [(4, 6), (9, 12), (10, 30), (0, 8), (6, 8), (5, 25)])
def test_unit_normalizer(a, m):
    c = unit_normalizer(a, m)
    assert gcd(c, m) == 1
    assert (c * a) % m == gcd(a, m) % m


def test_reduce_mod_gamma():
    ring = ring_new(25)
    r = reduce_mod_gamma(ring.elem(7))
    assert r.value == 2
    assert r.ring == ring_new(5)


def test_reduce_mod_gamma_needs_chain_ring():
    with pytest.raises(RingError):
        reduce_mod_gamma(ring_new(6).elem(1))
