import pytest
from hypothesis import given, strategies as st

from fusion_paths.paths import (
    CombinatorialPath,
    VerlindePath,
    bijection_iota,
    bijection_iota_inverse,
    complete_decomposition_holds,
    cpath_gradings,
    enumerate_cpaths,
    enumerate_vpaths,
    gradings,
    inversion_identities,
    is_valid_cpath,
    iter_all_triples,
    recursion_partition_check,
)
from fusion_paths.verlinde import verlinde_numbers

small = st.tuples(st.integers(1, 3), st.integers(0, 3), st.integers(1, 5)).filter(lambda t: t[1] <= t[0])


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("N", [1, 2, 3, 4, 5])
def test_counts_match_verlinde_numbers(k, N):
    d = verlinde_numbers(k, N)
    for l in range(k + 1):
        assert len(enumerate_cpaths(k, l, N)) == d[l]
        assert len(enumerate_vpaths(k, l, N)) == d[l]


def test_level_one_example():
    assert len(enumerate_cpaths(1, 0, 3)) == 4
    assert all(is_valid_cpath(p) for p in enumerate_cpaths(2, 1, 4))


def test_json_round_trip():
    for p in enumerate_cpaths(2, 1, 3):
        assert CombinatorialPath.from_json(p.to_json()) == p
    for p in enumerate_vpaths(2, 1, 3):
        assert VerlindePath.from_json(p.to_json()) == p


@given(small)
def test_bijection_is_inverse_and_preserves_gradings(t):
    k, l, N = t
    vps = enumerate_vpaths(k, l, N)
    images = [bijection_iota(p) for p in vps]
    assert sorted(map(repr, images)) == sorted(map(repr, enumerate_cpaths(k, l, N)))
    for p, c in zip(vps, images):
        assert bijection_iota_inverse(c) == p
        assert gradings(p) == cpath_gradings(c)


@given(small)
def test_recursion_partition(t):
    assert recursion_partition_check(*t)


@given(small)
def test_inversion_identities(t):
    k, l, N = t
    if N >= 2:
        assert all(inversion_identities(p) for p in enumerate_vpaths(k, l, N))


@pytest.mark.parametrize("k", [1, 2])
def test_complete_decomposition(k):
    for triple in iter_all_triples(k):
        for N in range(1, 4):
            for p in enumerate_cpaths(k, triple[2], N):
                assert complete_decomposition_holds(p, triple)
