"""Shared fixtures: packaged tables, builtin diagrams, small census caches."""

from importlib.resources import files

import pytest

import symbirack as sb


def load_packaged_table(name: str) -> sb.BirackTable:
    text = files("symbirack").joinpath(f"data/tables/{name}.birack").read_text()
    return sb.parse_birack_matrix(text)


def cyclic_group(n: int) -> tuple[tuple[int, ...], ...]:
    """Multiplication table of Z_n on {1..n} (element i is residue i-1)."""
    return tuple(tuple((i + j) % n + 1 for j in range(n)) for i in range(n))


# Klein four-group: every element is its own inverse.
KLEIN4 = (
    (1, 2, 3, 4),
    (2, 1, 4, 3),
    (3, 4, 1, 2),
    (4, 3, 2, 1),
)


@pytest.fixture(scope="session")
def order3_table() -> sb.BirackTable:
    return load_packaged_table("order3")


@pytest.fixture(scope="session")
def order4_table() -> sb.BirackTable:
    return load_packaged_table("order4")


@pytest.fixture(scope="session")
def constant4_table() -> sb.BirackTable:
    return load_packaged_table("constant4")


@pytest.fixture(scope="session")
def corpus() -> dict[str, sb.Diagram]:
    return sb.builtin_diagrams()


@pytest.fixture(scope="session")
def census2() -> list[sb.BirackTable]:
    return list(sb.enumerate_biracks(2))


@pytest.fixture(scope="session")
def census3() -> list[sb.BirackTable]:
    return list(sb.enumerate_biracks(3))


@pytest.fixture(scope="session")
def records2() -> list[sb.CensusRecord]:
    return list(sb.census_records(2))


@pytest.fixture(scope="session")
def records3() -> list[sb.CensusRecord]:
    return list(sb.census_records(3))


def _perm(text: str, n: int) -> sb.Permutation:
    return sb.Permutation.from_cycles(text, n)


@pytest.fixture(scope="session")
def constructor_tables(order3_table, order4_table, constant4_table) -> list[sb.BirackTable]:
    """Packaged tables plus one or two instances of every constructor."""
    return [
        order3_table,
        order4_table,
        constant4_table,
        sb.trivial_birack(1),
        sb.trivial_birack(3),
        sb.trivial_birack(5),
        sb.core_quandle(cyclic_group(3)),
        sb.core_quandle(cyclic_group(5)),
        sb.core_quandle(KLEIN4),
        sb.alexander_bikei(2, t=1, s=1, v=1),
        sb.alexander_bikei(5, t=4, s=1, v=4),
        sb.alexander_bikei(8, t=3, s=3, v=5),
        sb.constant_action(_perm("(12)", 4), _perm("(12)(34)", 4), _perm("(34)", 4)),
        sb.constant_action(_perm("(12)", 3), _perm("(12)", 3), _perm("()", 3)),
    ]
