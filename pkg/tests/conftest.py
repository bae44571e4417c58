import pytest

from powaut import (
    direct_product,
    make_cyclic,
    make_dihedral,
    make_elementary_abelian,
    make_quaternion,
)

ACCEPTANCE_LINES: list[str] = []


def small_groups():
    """Built-in groups of order <= 16 used across the suite."""
    Z = make_cyclic
    groups = [Z(n) for n in range(1, 17)]
    groups += [make_dihedral(n) for n in range(3, 9)]
    groups += [make_quaternion(n) for n in (2, 3, 4)]
    groups += [make_elementary_abelian(2, 2), make_elementary_abelian(2, 3),
               make_elementary_abelian(2, 4), make_elementary_abelian(3, 2)]
    groups += [
        direct_product(Z(2), Z(4)),
        direct_product(Z(2), Z(6)),
        direct_product(Z(2), Z(8)),
        direct_product(Z(4), Z(4)),
        direct_product(Z(2), make_dihedral(3)),
        direct_product(Z(2), make_dihedral(4)),
        direct_product(Z(2), make_quaternion(2)),
        direct_product(make_elementary_abelian(2, 2), Z(4)),
    ]
    return groups


SMALL_GROUPS = small_groups()
# cheap subset for exhaustive per-element property checks
TINY_GROUPS = [G for G in SMALL_GROUPS if G.size <= 12]


def pytest_addoption(parser):
    parser.addoption("--q16-enumerate", action="store_true", default=False,
                     help="enumerate all 552960 automorphisms of the Q_16 power graph")


@pytest.fixture
def q16_enumerate(request):
    return request.config.getoption("--q16-enumerate")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
