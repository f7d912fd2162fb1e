from fractions import Fraction as F
from pathlib import Path

import pytest

from novalg import AlgebraSpec, CoprodTable, LinMap, MulTable

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


def canonical_bialgebra() -> AlgebraSpec:
    """The 2-dim two-product bialgebra used throughout: e_i < e_i = -e_i,
    e_i > e_i = e_i, coprec(e_i) = -e_i (x) e_i, cosucc(e_i) = e_i (x) e_i."""
    prec = MulTable.from_entries(2, [(0, 0, 0, F(-1)), (1, 1, 1, F(-1))])
    succ = MulTable.from_entries(2, [(0, 0, 0, F(1)), (1, 1, 1, F(1))])
    coprec = CoprodTable.from_entries(2, [(0, 0, 0, F(-1)), (1, 1, 1, F(-1))])
    cosucc = CoprodTable.from_entries(2, [(0, 0, 0, F(1)), (1, 1, 1, F(1))])
    return AlgebraSpec(dim=2, ops={"prec": prec, "succ": succ},
                       coprods={"coprec": coprec, "cosucc": cosucc})


def truncated_poly3() -> AlgebraSpec:
    """1, x, x^2 modulo x^3 with the Euler derivation x d/dx."""
    mul = MulTable.from_entries(3, [(0, 0, 0, 1), (0, 1, 1, 1), (0, 2, 2, 1),
                                    (1, 0, 1, 1), (1, 1, 2, 1), (2, 0, 2, 1)])
    euler = LinMap([[0, 0, 0], [0, 1, 0], [0, 0, 2]])
    return AlgebraSpec(dim=3, ops={"mul": mul}, maps={"partial": euler})


def matrix2() -> AlgebraSpec:
    """2x2 matrix units E11, E12, E21, E22 with the inner derivation ad(E11)."""
    ent = []

    def idx(a, b):
        return 2 * a + b

    for a in range(2):
        for b in range(2):
            for c in range(2):
                for d in range(2):
                    if b == c:
                        ent.append((idx(a, b), idx(c, d), idx(a, d), F(1)))
    mat = MulTable.from_entries(4, ent)
    grid = [[F(0)] * 4 for _ in range(4)]
    grid[idx(0, 1)][idx(0, 1)] = F(1)
    grid[idx(1, 0)][idx(1, 0)] = F(-1)
    return AlgebraSpec(dim=4, ops={"mul": mat}, maps={"partial": LinMap(grid)})


def zero_spec(n: int) -> AlgebraSpec:
    return AlgebraSpec(dim=n,
                       ops={"prec": MulTable.zero(n), "succ": MulTable.zero(n)},
                       coprods={"coprec": CoprodTable.zero(n),
                                "cosucc": CoprodTable.zero(n)})
