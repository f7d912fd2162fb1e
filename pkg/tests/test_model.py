from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from novalg.linalg import LinMap
from novalg.model import (
    ActionFamily,
    AlgebraSpec,
    CoprodTable,
    MulTable,
    Report,
    SpecError,
    Witness,
    dualize_coprod,
    dualize_mul,
)

rationals = st.builds(F, st.integers(-4, 4), st.integers(1, 3))


def random_mul(dim):
    return st.builds(
        lambda vals: MulTable([[vals[dim * dim * i + dim * j:
                                     dim * dim * i + dim * j + dim]
                                for j in range(dim)] for i in range(dim)]),
        st.lists(rationals, min_size=dim ** 3, max_size=dim ** 3))


def random_coprod(dim):
    return st.builds(
        lambda vals: CoprodTable([[vals[dim * dim * k + dim * i:
                                        dim * dim * k + dim * i + dim]
                                   for i in range(dim)] for k in range(dim)]),
        st.lists(rationals, min_size=dim ** 3, max_size=dim ** 3))


class TestTables:
    def test_apply_matches_basis_product(self):
        t = MulTable.from_entries(2, [(0, 1, 0, F(2)), (1, 0, 1, F(3))])
        e0, e1 = (F(1), F(0)), (F(0), F(1))
        assert t.apply(e0, e1) == (F(2), F(0))
        assert t.apply(e1, e0) == (F(0), F(3))
        assert t.apply((F(1), F(1)), (F(1), F(1))) == (F(2), F(3))

    def test_left_right_matrices(self):
        t = MulTable.from_entries(2, [(0, 1, 0, F(2))])
        assert t.left_matrix(0).apply((F(0), F(1))) == (F(2), F(0))
        assert t.right_matrix(1).apply((F(1), F(0))) == (F(2), F(0))

    @given(random_mul(2))
    def test_left_mul_map_consistent(self, t):
        x = (F(1), F(2))
        for j in range(2):
            ej = tuple(F(1) if i == j else F(0) for i in range(2))
            assert t.left_mul_map(x).apply(ej) == t.apply(x, ej)
            assert t.right_mul_map(x).apply(ej) == t.apply(ej, x)

    @given(random_mul(2))
    def test_dualize_round_trip(self, t):
        assert t.dualize().dualize() == t

    @given(random_coprod(2))
    def test_coprod_round_trip(self, c):
        assert dualize_mul(dualize_coprod(c)) == c

    def test_zero_dualizes_to_zero(self):
        assert dualize_mul(MulTable.zero(2)) == CoprodTable.zero(2)

    def test_canonical_coprec_dualizes(self):
        # coprec(e_i) = -e_i (x) e_i gives e^i < e^i = -e^i on the dual
        coprec = CoprodTable.from_entries(2, [(0, 0, 0, F(-1)), (1, 1, 1, F(-1))])
        dual = dualize_coprod(coprec)
        assert dual == MulTable.from_entries(2, [(0, 0, 0, F(-1)), (1, 1, 1, F(-1))])

    def test_opposite(self):
        t = MulTable.from_entries(2, [(0, 1, 0, F(5))])
        assert t.opposite() == MulTable.from_entries(2, [(1, 0, 0, F(5))])


class TestActionFamily:
    def test_cube_round_trip(self):
        t = MulTable.from_entries(2, [(0, 1, 0, F(2)), (1, 1, 1, F(-1))])
        fam = ActionFamily.from_cube(t)
        assert fam.to_cube() == t

    def test_left_right(self):
        t = MulTable.from_entries(2, [(0, 1, 0, F(2))])
        left = ActionFamily.from_left(t)
        right = ActionFamily.from_right(t)
        e0 = (F(1), F(0))
        e1 = (F(0), F(1))
        assert left.act_basis(0, e1) == (F(2), F(0))
        assert right.act_basis(1, e0) == (F(2), F(0))

    def test_dual_is_slotwise_transpose(self):
        t = MulTable.from_entries(2, [(0, 1, 0, F(2))])
        fam = ActionFamily.from_left(t)
        assert fam.dual().mats[0] == fam.mats[0].transpose()


class TestAlgebraSpec:
    def test_dimension_validation(self):
        with pytest.raises(SpecError):
            AlgebraSpec(dim=2, ops={"mul": MulTable.zero(3)})
        with pytest.raises(SpecError):
            AlgebraSpec(dim=2, maps={"partial": LinMap.zero(3)})
        with pytest.raises(SpecError):
            AlgebraSpec(dim=2, basis=("a",))

    def test_with_members(self):
        spec = AlgebraSpec(dim=2, ops={"mul": MulTable.zero(2)})
        out = spec.with_members(maps={"partial": LinMap.identity(2)})
        assert "mul" in out.ops and "partial" in out.maps
        assert "partial" not in spec.maps


class TestReport:
    def test_status(self):
        ok = Report(identity="X", violations=0, witnesses=())
        assert ok.passed and ok.status == "pass"
        bad = Report(identity="X", violations=2,
                     witnesses=(Witness((0, 1), (F(1),)),))
        assert not bad.passed and bad.status == "fail"
        assert "2 violations" in bad.summary()

    def test_to_dict_rationals_as_strings(self):
        rep = Report(identity="X", violations=1,
                     witnesses=(Witness((0,), (F(-1, 2),)),))
        d = rep.to_dict()
        assert d["witnesses"][0]["residual"] == ["-1/2"]
