import random

from hypothesis import given, strategies as st

from fusion_paths.heisenberg.algebra import (
    ONE,
    NormalMonomial,
    add_into,
    normal_order,
    random_rewrite,
    word_weight,
)

letters = st.tuples(st.sampled_from("hef"), st.integers(-2, 3))
words = st.lists(letters, max_size=6)


def _str(vec):
    return {str(m): c for m, c in vec.items() if c}


def test_normal_order_basic_commutators():
    assert _str(normal_order([("f", 0), ("e", 1)])) == {"e_1 f_0": 1, "h_1": -1}
    assert _str(normal_order([("e", 1), ("h", 2)])) == {"h_2 e_1": 1}
    assert normal_order([]) == {ONE: 1}


def test_moving_e_past_two_fs():
    # e_1 f_1 f_1 = f_1 f_1 e_1 + 2 h_2 f_1
    lhs = normal_order([("e", 1), ("f", 1), ("f", 1)])
    rhs = add_into(dict(normal_order([("f", 1), ("f", 1), ("e", 1)])),
                   {NormalMonomial.from_counts(h={2: 1}, f={1: 1}): 2})
    assert {m: c for m, c in lhs.items() if c} == {m: c for m, c in rhs.items() if c}


@given(words, st.integers(0, 10 ** 6))
def test_any_rewrite_order_is_confluent(word, seed):
    assert random_rewrite(word, random.Random(seed)) == normal_order(word)


@given(words)
def test_weight_is_conserved(word):
    w = word_weight(word)
    assert all(m.weight == w for m, c in normal_order(word).items() if c)


def test_monomial_weight_and_printing():
    m = NormalMonomial.from_counts(h={2: 1}, e={0: 2}, f={1: 1})
    assert m.weight == (3, 2, 3)
    assert str(m) == "h_2 e_0^2 f_1"
    assert m.length == 4
