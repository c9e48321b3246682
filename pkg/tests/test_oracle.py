import pytest

from fusion_paths.heisenberg import checks
from fusion_paths.heisenberg.coinvariants import CSV_COLUMNS, CoinvariantSpec, coinvariant_dims, w_coinvariants
from fusion_paths.heisenberg.modules import ModuleSpec, weight_space_dim
from fusion_paths.laurent import Q, Z1, Z2, LaurentPoly3
from fusion_paths.suite import aux_cap_monotone

ONE = LaurentPoly3.one()


def test_small_weight_spaces():
    dim, basis = weight_space_dim(ModuleSpec("W", 1, 1, 1, 1), 1, 1, 1)
    assert dim == 1 and [str(b) for b in basis] == ["h_1"]
    dim, basis = weight_space_dim(ModuleSpec("V", 1, 0, 1, 0), 0, 1, 0)
    assert dim == 1 and [str(b) for b in basis] == ["f_0"]


# frozen from the oracle
@pytest.mark.parametrize("M,N,char", [
    (1, 1, ONE + Q * Z1 * Z2),
    (2, 1, ONE + Q * Z1 + Q * Z1 * Z2 + Q ** 2 * Z1 * Z2),
    (0, 2, ONE + Q * Z2),
    (1, 2, ONE + Q * Z2 + Q * Z1 * Z2 + Q ** 2 * Z1 * Z2),
])
def test_level_one_characters(M, N, char):
    t = w_coinvariants(1, 1, 1, M, N)
    assert t.stabilized
    assert t.character() == char


def test_level_two_character():
    t = w_coinvariants(2, 2, 2, 1, 1)
    assert t.character() == ONE + Q * Z1 * Z2 + Q ** 2 * Z1 ** 2 * Z2 ** 2


def test_negative_index_gives_zero_module():
    assert ModuleSpec("W", 1, 0, 0, -1).is_zero
    assert coinvariant_dims(CoinvariantSpec(ModuleSpec("W", 1, 0, 0, -1), 1, 1)).total == 0


def test_invalid_caps_rejected():
    with pytest.raises(ValueError):
        CoinvariantSpec(ModuleSpec("W", 1, 1, 1, 1), -1, 1)
    with pytest.raises(ValueError):
        CoinvariantSpec(ModuleSpec("W", 1, 1, 1, 1), 1, 1, d_cap=4, aux_cap=2)


def test_csv_format():
    text = w_coinvariants(1, 1, 1, 1, 1).to_csv().splitlines()
    assert text[0] == ",".join(CSV_COLUMNS)
    assert text[1:] == ["W,1,1,1,1,1,1,0,0,0,1,1", "W,1,1,1,1,1,1,1,1,1,1,1"]


def test_aux_cap_is_monotone_and_converges():
    assert aux_cap_monotone()


def test_low_aux_cap_reports_instability():
    t = coinvariant_dims(CoinvariantSpec(ModuleSpec("W", 2, 2, 2, 2), 1, 2, aux_cap=0, aux_step=6))
    exact = coinvariant_dims(CoinvariantSpec(ModuleSpec("W", 2, 2, 2, 2), 1, 2))
    assert t.total >= exact.total
    if t.dims != exact.dims:
        assert not t.stabilized


@pytest.mark.parametrize("k", [1, 2])
def test_aux_dimensions(k):
    for M in range(3):
        for N in range(3):
            for l in range(k + 1):
                for i in range(l + 1):
                    assert checks.verify_aux_dimension(k, l, i, M, N)


@pytest.mark.parametrize("k", [1, 2])
def test_w_recursion(k):
    for l1 in range(k + 1):
        for l2 in range(k + 1):
            for l3 in range(min(l1, l2) + 1):
                assert checks.verify_w_recursion(k, l1, l2, l3, 1, 1)


@pytest.mark.parametrize("k", [1, 2])
def test_character_bridge(k):
    for N in range(1, 4):
        for l in range(k + 1):
            assert checks.verify_character_bridge(k, l, N)


@pytest.mark.parametrize("kind", checks.SEQUENCE_KINDS)
def test_exact_sequences_level_two(kind):
    ran = 0
    for l1 in range(3):
        for l2 in range(3):
            if checks.sequence_applies(kind, 2, l1, l2, 1, 1):
                assert checks.verify_exact_sequence_dims(kind, 2, l1, l2, 1, 1)
                ran += 1
    assert ran


def test_monomial_table():
    from fusion_paths.golden import w1_table
    assert checks.verify_monomial_table(w1_table())


def test_parse_monomial():
    assert str(checks.parse_monomial("f_2h_1")) == "h_1 f_2"
