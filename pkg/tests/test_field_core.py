"""Base field arithmetic: values against the integer model, exact inversion
costs, Montgomery sanity, and the fault-injection hook."""

import pytest

from pairing381 import Engine
from pairing381.params import P, Q


def test_round_trip_and_ring_ops_match_integer_model(engine, rng):
    for spec, mod in (("fp", P), ("fq", Q)):
        make = getattr(engine, spec)
        for _ in range(200):
            a = rng.randrange(mod)
            b = rng.randrange(mod)
            fa, fb = make(a), make(b)
            assert fa.to_int() == a
            assert (fa + fb).to_int() == (a + b) % mod
            assert (fa - fb).to_int() == (a - b) % mod
            assert (-fa).to_int() == (-a) % mod
            assert (fa * fb).to_int() == a * b % mod
            assert fa.square().to_int() == a * a % mod


def test_zero_and_one_behave(engine):
    zero, one = engine.fp(0), engine.fp(1)
    x = engine.fp(12345)
    assert (x + zero) == x
    assert (x * one) == x
    assert (x * zero).is_zero()
    assert (x - x).is_zero()


def test_construction_reduces_and_rejects_nothing_in_range(engine):
    assert engine.fp(P - 1).to_int() == P - 1
    assert engine.fq(Q - 1).to_int() == Q - 1


def test_fp_inversion_is_exactly_608_multiplications(engine, rng):
    """The Fermat chain for p-2 costs bitlen-1 squarings plus popcount-1
    multiplies: 380 + 228 = 608. Confirmed arithmetically here, then against
    the live counter."""
    assert (P - 2).bit_length() == 381
    assert bin(P - 2).count("1") == 229
    assert (381 - 1) + (229 - 1) == 608

    x = engine.fp(rng.randrange(1, P))
    before = engine.counter.snapshot()
    xi = x.inverse()
    d = engine.counter.delta(before)
    assert xi.to_int() == pow(x.to_int(), -1, P)
    assert d.i1 == 1
    assert d.inv_m1 == 608
    assert d.m1 == 0 and d.s1 == 0   # chain internals are not double-counted


def test_fq_inversion_is_exactly_417_multiplications(engine, rng):
    assert (Q - 2).bit_length() == 255
    assert bin(Q - 2).count("1") == 164
    assert (255 - 1) + (164 - 1) == 417
    x = engine.fq(rng.randrange(1, Q))
    before = engine.counter.snapshot()
    xi = x.inverse()
    d = engine.counter.delta(before)
    assert xi.to_int() == pow(x.to_int(), -1, Q)
    assert d.iq == 1
    assert d.inv_mq == 417


def test_inverse_of_zero_raises(engine):
    with pytest.raises(ZeroDivisionError):
        engine.fp(0).inverse()


def test_m1_equivalent_weighs_inversions(engine, rng):
    before = engine.counter.snapshot()
    engine.fp(rng.randrange(1, P)).inverse()
    d = engine.counter.delta(before)
    assert d.m1_equivalent() == 608


def test_word_backend_matches_bigint_backend(rng):
    for w in (16, 32, 64):
        eb = Engine()
        ew = Engine(word_size=w, backend="words")
        for _ in range(20):
            a = rng.randrange(P)
            b = rng.randrange(P)
            assert (eb.fp(a) * eb.fp(b)).to_int() == (ew.fp(a) * ew.fp(b)).to_int()
            assert eb.fp(a).square().to_int() == ew.fp(a).square().to_int()
        x = rng.randrange(1, Q)
        assert eb.fq(x).inverse().to_int() == ew.fq(x).inverse().to_int()


def test_montgomery_sane_and_fault_injection():
    e = Engine()
    assert e.montgomery_sane()
    e.inject_fault()
    assert not e.montgomery_sane()
    # the fault is engine-local: a fresh engine is clean
    assert Engine().montgomery_sane()


def test_mixed_field_operands_rejected(engine):
    with pytest.raises(TypeError):
        engine.fp(1) + engine.fq(1)


def test_field_element_bytes_round_trip(engine, rng):
    x = engine.fp(rng.randrange(P))
    raw = x.to_bytes()
    assert len(raw) == 48
    assert int.from_bytes(raw, "big") == x.to_int()
