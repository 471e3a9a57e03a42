import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from promislow.errors import CtxMismatch, NotPrime
from promislow.prime_field import FieldCtx, FieldElement, ctx_new, from_int, is_prime


@pytest.mark.parametrize("d", [2, 7, 11, 97])
def test_ctx_accepts_primes(d):
    assert ctx_new(d).d == d


@pytest.mark.parametrize("d", [4, 1, 0, -3, 9, 91])
def test_ctx_rejects_non_primes(d):
    with pytest.raises(NotPrime):
        ctx_new(d)


def test_is_prime_matches_sieve():
    sieve = [n for n in range(2, 500) if all(n % k for k in range(2, n))]
    assert [n for n in range(-5, 500) if is_prime(n)] == sieve


def test_small_examples():
    assert from_int(1, FieldCtx(2)) + from_int(1, FieldCtx(2)) == 0
    gf5 = FieldCtx(5)
    assert gf5(4) * gf5(4) == 1
    # the constant 4 in s reduces to 1 in characteristic 3 and to 0 in characteristic 2
    assert from_int(4, FieldCtx(3)) == 1
    assert from_int(4, FieldCtx(2)) == 0


@pytest.mark.parametrize("n, d, expected", [(-1, 2, 1), (4, 2, 0), (-3, 7, 4), (10**20 + 3, 7, (10**20 + 3) % 7)])
def test_from_int(n, d, expected):
    assert from_int(n, FieldCtx(d)).value == expected


def test_mismatched_moduli():
    with pytest.raises(CtxMismatch):
        FieldCtx(3)(1) + FieldCtx(5)(1)
    with pytest.raises(CtxMismatch):
        FieldCtx(3)(1) * FieldCtx(5)(1)


def test_immutable():
    a = FieldCtx(3)(2)
    with pytest.raises(AttributeError):
        a.value = 1


@pytest.mark.parametrize("d", [2, 3, 5, 7])
def test_field_axioms_exhaustive(d):
    els = FieldCtx(d).elements()
    for a, b, c in itertools.product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
    for a, b in itertools.product(els, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
        assert 0 <= (a - b).value < d
        assert (a - b) + b == a
        assert -a + a == 0


@pytest.mark.parametrize("d", [2, 3, 5, 7, 11])
def test_fermat_inverse(d):
    ctx = FieldCtx(d)
    for a in ctx.elements()[1:]:
        assert a * a ** (d - 2) == 1
        assert a * a.inverse() == 1


@given(st.integers(-100, 100), st.sampled_from([2, 3, 5, 7, 11]))
def test_negation_of_from_int(n, d):
    ctx = FieldCtx(d)
    assert from_int(n, ctx) + from_int(-n, ctx) == 0


def test_canonical_representative_and_hash():
    ctx = FieldCtx(7)
    assert FieldElement(-1, ctx).value == 6
    assert {ctx(8), ctx(1)} == {ctx(1)}
