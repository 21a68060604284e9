"""Word-level cost law of the interleaved Montgomery multiplier: for
s = ceil(384/w) limbs, one multiplication costs s(2s+1) word multiplies and
2(2s^2+2s+1) word additions, independent of operand values."""

import pytest

from pairing381 import Engine, cios_cost_model
from pairing381.params import ANALYTIC_WORD_SIZES, EXECUTABLE_WORD_SIZES, P


@pytest.mark.parametrize("w", EXECUTABLE_WORD_SIZES)
def test_measured_word_costs_equal_the_law(w, rng):
    e = Engine(word_size=w, backend="words")
    want_mul, want_add = cios_cost_model(w)
    for _ in range(5):
        a = e.fp(rng.randrange(P))
        b = e.fp(rng.randrange(P))
        before = e.counter.snapshot()
        a * b
        d = e.counter.delta(before)
        assert d.word_mul == want_mul
        assert d.word_add == want_add


@pytest.mark.parametrize("w", EXECUTABLE_WORD_SIZES)
def test_squaring_charges_the_same_word_costs(w, rng):
    e = Engine(word_size=w, backend="words")
    want_mul, want_add = cios_cost_model(w)
    a = e.fp(rng.randrange(P))
    before = e.counter.snapshot()
    a.square()
    d = e.counter.delta(before)
    assert (d.word_mul, d.word_add) == (want_mul, want_add)


def test_analytic_table():
    expected = {
        16: (1176, 2402),
        24: (528, 1090),
        32: (300, 626),
        48: (136, 290),
        64: (78, 170),
        96: (36, 82),
    }
    for w in ANALYTIC_WORD_SIZES:
        assert cios_cost_model(w) == expected[w]


def test_unsupported_word_size_rejected():
    with pytest.raises(ValueError):
        cios_cost_model(17)
    with pytest.raises(ValueError):
        Engine(word_size=20, backend="words")
