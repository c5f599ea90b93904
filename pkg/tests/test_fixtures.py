import numpy as np
import pytest

from rcfd.core import components, verify_design, verify_orthogonal
from rcfd.fixtures import FIXTURE_NAMES, SEEDS, fixture_text, get_fixture
from rcfd.core import transpose

from oracles import brute_verify

REGULAR = {"TABLE1": "I_4(4,4;2)", "B18": "I_2(6,18;6)", "L23": "I_1(6,6;6)",
           "EX_D": "I_3(4,2;2)", "EX_DT": "I_3(2,4;2)", "EX_Dp": "I_3(3,9;3)",
           "EX_PROD": "I_3(12,18;6)", "FR1218": "I_1(12,18;6)",
           "S66": "I_2(6,6;2)", "MOLS10": "I_2(10,10;10)"}


@pytest.mark.parametrize("name", sorted(REGULAR))
def test_regular_fixtures(name):
    D = get_fixture(name)
    assert str(D.params) == REGULAR[name]
    assert D.is_regular
    assert brute_verify(D.grid.tolist(), D.q)


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_every_fixture_parses(name):
    assert get_fixture(name).m >= 1
    assert fixture_text(name).strip()


def test_printed_b18_fails_exactly_at_two_cells():
    report = verify_design(get_fixture("B18_PRINTED"))
    assert not report
    locations = {v.location for v in report.violations}
    assert {v.check for v in report.violations} == {"factorial", "row", "column"}
    assert {loc for loc in locations if loc.startswith("row")} == {
        "row 2, coord 1, symbol 3", "row 2, coord 1, symbol 1",
        "row 5, coord 1, symbol 4", "row 5, coord 1, symbol 5"}
    assert {loc for loc in locations if loc.startswith("col")} == {
        "col 0, coord 1, symbol 1", "col 0, coord 1, symbol 3",
        "col 0, coord 1, symbol 4", "col 0, coord 1, symbol 5"}


def test_b18_repair_touches_two_cells():
    a, b = get_fixture("B18_PRINTED").grid, get_fixture("B18").grid
    diff = np.argwhere((a != b).any(axis=2)).tolist()
    assert diff == [[2, 0], [5, 0]]


def test_three_mofs():
    D = get_fixture("THREE_MOFS")
    F = components(D)
    assert all(verify_orthogonal(F[a], F[b]) for a, b in [(0, 1), (0, 2), (1, 2)])
    report = verify_design(D)
    assert not report
    assert "factorial" in {v.check for v in report.violations}


def test_example_transpose_pair():
    assert transpose(get_fixture("EX_DT")) == get_fixture("EX_D")


def test_seed_table_points_at_fixtures():
    for key, name in SEEDS.items():
        D = get_fixture(name)
        assert (D.k, D.m, D.n, D.q) == key and D.is_regular


def test_unknown_fixture():
    with pytest.raises(KeyError):
        get_fixture("NOPE")
