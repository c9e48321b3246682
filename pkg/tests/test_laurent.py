from hypothesis import given, strategies as st

from fusion_paths.laurent import Q, Z1, Z2, LaurentPoly3

exps = st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
polys = st.dictionaries(exps, st.integers(-4, 4), max_size=5).map(LaurentPoly3)


def test_printing():
    assert str(LaurentPoly3.one() + Q * Z2) == "1 + q*z2"
    assert str(LaurentPoly3.zero()) == "0"


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == LaurentPoly3.zero()


@given(polys)
def test_json_round_trip(a):
    assert LaurentPoly3.from_json(a.to_json()) == a


def test_evaluate():
    p = Q * Z1 + 2 * Z2 ** 2
    assert p.evaluate(2, 3, 1) == 8
