import pytest
from hypothesis import given, strategies as st

from constacyclic import ff_construct, ff_enumerate
from constacyclic.errors import CapExceeded, ContextMismatch, NotPrime, ZeroInverse


def test_prime_field_context():
    ctx = ff_construct(7, 1)
    assert ctx.q == 7
    assert ctx.modulus == (0, 1)


def test_f16_and_f9_moduli():
    assert ff_construct(2, 4).q == 16
    # smallest monic irreducible quadratic over F_3, low degree first: y^2 + 1
    assert ff_construct(3, 2).modulus == (1, 0, 1)
    assert ff_construct(2, 4).modulus == (1, 0, 0, 1, 1)


def test_construction_is_deterministic():
    ff_construct.cache_clear()
    a = ff_construct(5, 3)
    ff_construct.cache_clear()
    assert ff_construct(5, 3).modulus == a.modulus


def test_construct_errors():
    with pytest.raises(NotPrime):
        ff_construct(9, 1)
    with pytest.raises(CapExceeded):
        ff_construct(2, 21)
    assert ff_construct(97, 4, cap=None).q == 97**4


def test_small_arithmetic():
    F3 = ff_construct(3)
    assert F3(2) + F3(2) == 1
    assert F3(2) * F3(2) == 1
    assert ff_construct(7)(3).inverse() == 5
    assert F3(1).inverse() == 1


def test_f16_generator_order():
    F16 = ff_construct(2, 4)
    w = F16.generator()
    assert w * w**14 == 1
    assert w.inverse() == w**14
    assert len({(w**k).value for k in range(15)}) == 15


def test_pow():
    F3, F13 = ff_construct(3), ff_construct(13)
    assert F3(2) ** 9 == 2
    assert F13(4) ** 13 == 4
    assert F13(0) ** 0 == 1
    assert F13(5) ** 0 == 1


def test_sqrt():
    F13, F7 = ff_construct(13), ff_construct(7)
    assert F13.sqrt(0) == 0
    assert F13.sqrt(4) == 2
    assert F7.sqrt(3) is None


def test_enumerate():
    assert [e.value for e in ff_enumerate(ff_construct(2))] == [0, 1]
    assert [e.value for e in ff_enumerate(ff_construct(3))] == [0, 1, 2]
    F4 = ff_enumerate(ff_construct(2, 2))
    assert len({e.value for e in F4}) == 4 and F4[0] == 0


def test_errors():
    with pytest.raises(ZeroInverse):
        ff_construct(5)(0).inverse()
    with pytest.raises(ContextMismatch):
        ff_construct(3)(1) + ff_construct(5)(1)


def test_text_round_trip():
    F9 = ff_construct(3, 2)
    x = F9.parse("2,1")
    assert str(x) == "2,1"
    assert F9.parse("-1") == F9(2)
    assert F9.parse("g^0") == 1


@pytest.mark.parametrize("p,a", [(2, 1), (3, 1), (5, 1), (2, 3), (3, 2), (2, 4), (5, 2), (2, 8)])
def test_field_axioms_exhaustive(p, a):
    ctx = ff_construct(p, a)
    els = ff_enumerate(ctx)
    for x in els:
        assert x**ctx.q == x
        if x:
            assert x * x.inverse() == 1
    if p > 2:
        assert sum(1 for x in els if ctx.sqrt(x) is not None) == (ctx.q + 1) // 2
        for x in els:
            r = ctx.sqrt(x)
            if r is not None:
                assert r * r == x


@given(st.integers(0, 80), st.integers(0, 80), st.integers(0, 80))
def test_distributive_f81(a, b, c):
    F = ff_construct(3, 4)
    x, y, z = F.from_value(a), F.from_value(b), F.from_value(c)
    assert x * (y + z) == x * y + x * z
    assert (x - y) + y == x
