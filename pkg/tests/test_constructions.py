from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from novalg.linalg import BilinearForm, LinMap
from novalg.model import (
    ActionFamily,
    AlgebraSpec,
    CoprodTable,
    MulTable,
    SpecError,
    VerificationError,
    all_pass,
)
from novalg.catalog import Context, check_identities, check_identity, check_profile, evaluate_identity
from novalg.constructions import (
    DOUBLE_CONTRACT,
    MANIN_CONTRACT,
    MatchedPairData,
    NNRepresentation,
    adjoint_nn,
    adjoint_wrt_form,
    bowtie_nn,
    coadjoint_nn,
    double_construction,
    dual_nn_representation,
    frobenius_rep_equivalence,
    manin_from_bialgebra,
    matched_pair_from_bialgebra,
    pairing_form,
    semidirect_assoc,
    semidirect_nn,
)

from conftest import canonical_bialgebra, truncated_poly3, zero_spec

rationals = st.builds(F, st.integers(-2, 2), st.integers(1, 2))


def perturb_family(fam: ActionFamily, a: int, i: int, j: int, delta) -> ActionFamily:
    mats = list(fam.mats)
    grid = [list(row) for row in mats[a].entries]
    grid[i][j] += delta
    mats[a] = LinMap(grid)
    return ActionFamily(mats)


class TestDualRepresentation:
    def test_canonical_adjoint_and_coadjoint(self):
        spec = canonical_bialgebra()
        ad = adjoint_nn(spec)
        assert all_pass(ad.check())
        assert ad.lprec.mats[0] == LinMap([[-1, 0], [0, 0]])
        co = coadjoint_nn(spec)
        assert all_pass(co.check())

    def test_zero_actions_stay_zero(self):
        spec = zero_spec(2)
        rep = NNRepresentation(spec, *(ActionFamily.zero(2, 2),) * 4)
        dual = dual_nn_representation(rep)
        assert all(m.is_zero() for m in dual.lprec.mats + dual.rsucc.mats)

    def test_double_dual_is_identity(self):
        spec = canonical_bialgebra()
        ad = adjoint_nn(spec)
        dd = dual_nn_representation(dual_nn_representation(ad))
        for name in ("lprec", "rprec", "lsucc", "rsucc"):
            assert getattr(dd, name) == getattr(ad, name)

    def test_invalid_input_rejected_with_reports(self):
        spec = canonical_bialgebra()
        ad = adjoint_nn(spec)
        bad = NNRepresentation(spec, perturb_family(ad.lprec, 0, 0, 1, F(1)),
                               ad.rprec, ad.lsucc, ad.rsucc)
        with pytest.raises(VerificationError) as err:
            dual_nn_representation(bad)
        assert any(not r.passed for r in err.value.reports)


class TestSemidirect:
    def test_adjoint_semidirect_passes(self):
        spec = canonical_bialgebra()
        out = semidirect_nn(spec, adjoint_nn(spec))
        assert out.dim == 4
        assert all_pass(check_profile(out, "nn-algebra"))

    def test_zero_rep_gives_trivial_ideal(self):
        spec = canonical_bialgebra()
        rep = NNRepresentation(spec, *(ActionFamily.zero(2, 3),) * 4)
        out = semidirect_nn(spec, rep)
        prec = out.ops["prec"]
        # all products touching the second block vanish
        for i in range(5):
            for j in range(2, 5):
                assert all(v == 0 for v in prec.basis_product(i, j))
                assert all(v == 0 for v in prec.basis_product(j, i))

    def test_corrupted_rep_fails_iff(self):
        spec = canonical_bialgebra()
        ad = adjoint_nn(spec)
        bad = NNRepresentation(spec, perturb_family(ad.lprec, 0, 0, 1, F(1)),
                               ad.rprec, ad.lsucc, ad.rsucc)
        assert not all_pass(bad.check())
        out = semidirect_nn(spec, bad)
        assert not all_pass(check_profile(out, "nn-algebra"))

    @given(st.sampled_from(["lprec", "rprec", "lsucc", "rsucc"]),
           st.integers(0, 1), st.integers(0, 1), st.integers(0, 1),
           st.sampled_from([F(-1), F(1), F(2)]))
    @settings(max_examples=20, deadline=None)
    def test_semidirect_iff_representation(self, fam, a, i, j, delta):
        spec = canonical_bialgebra()
        ad = adjoint_nn(spec)
        fams = {n: getattr(ad, n) for n in ("lprec", "rprec", "lsucc", "rsucc")}
        fams[fam] = perturb_family(fams[fam], a, i, j, delta)
        rep = NNRepresentation(spec, **fams)
        rep_ok = all_pass(rep.check())
        out_ok = all_pass(check_profile(semidirect_nn(spec, rep), "nn-algebra"))
        assert rep_ok == out_ok


class TestMatchedPairAndBowtie:
    def test_trivial_second_factor_reduces_to_semidirect(self):
        spec = canonical_bialgebra()
        ad = adjoint_nn(spec)
        zeroB = AlgebraSpec(dim=2, ops={"prec": MulTable.zero(2),
                                        "succ": MulTable.zero(2)})
        mp = MatchedPairData(
            specA=spec, specB=zeroB,
            lprecA=ad.lprec, rprecA=ad.rprec, lsuccA=ad.lsucc, rsuccA=ad.rsucc,
            lprecB=ActionFamily.zero(2, 2), rprecB=ActionFamily.zero(2, 2),
            lsuccB=ActionFamily.zero(2, 2), rsuccB=ActionFamily.zero(2, 2))
        assert all_pass(mp.check())
        assert bowtie_nn(mp).ops == semidirect_nn(spec, ad).ops

    def test_bialgebra_matched_pair(self):
        mp = matched_pair_from_bialgebra(canonical_bialgebra())
        out = bowtie_nn(mp)
        assert out.dim == 4
        assert all_pass(check_profile(out, "nn-algebra"))

    def test_perturbed_action_breaks_pair_and_bowtie(self):
        mp = matched_pair_from_bialgebra(canonical_bialgebra())
        bad = MatchedPairData(
            specA=mp.specA, specB=mp.specB,
            lprecA=perturb_family(mp.lprecA, 0, 0, 0, F(1)),
            rprecA=mp.rprecA, lsuccA=mp.lsuccA, rsuccA=mp.rsuccA,
            lprecB=mp.lprecB, rprecB=mp.rprecB,
            lsuccB=mp.lsuccB, rsuccB=mp.rsuccB)
        assert not all_pass(bad.check())
        assert not all_pass(check_profile(bowtie_nn(bad), "nn-algebra"))


class TestManin:
    def test_canonical_fixture(self):
        out = manin_from_bialgebra(canonical_bialgebra())
        assert out.dim == 4
        assert all_pass(check_identities(out, MANIN_CONTRACT))

    def test_zero_bialgebra(self):
        out = manin_from_bialgebra(zero_spec(3))
        assert out.dim == 6
        assert out.ops["prec"].is_zero() and out.ops["succ"].is_zero()
        assert all_pass(check_identities(out, MANIN_CONTRACT))

    def test_equals_bowtie_of_matched_pair(self):
        spec = canonical_bialgebra()
        manin = manin_from_bialgebra(spec)
        bow = bowtie_nn(matched_pair_from_bialgebra(spec))
        assert manin.ops["prec"] == bow.ops["prec"]
        assert manin.ops["succ"] == bow.ops["succ"]

    def test_broken_bialgebra_rejected_and_output_fails(self):
        spec = canonical_bialgebra()
        d = [[list(r) for r in p] for p in spec.coprods["coprec"].d]
        d[0][0][0] = F(1)  # flip one coproduct sign
        broken = spec.with_members(coprods={"coprec": CoprodTable(d),
                                            "cosucc": spec.coprods["cosucc"]})
        with pytest.raises(VerificationError):
            manin_from_bialgebra(broken)
        out = manin_from_bialgebra(broken, check=False)
        assert not all_pass(check_identities(out, MANIN_CONTRACT))


class TestSemidirectAssoc:
    def test_adjoint_actions_with_derivation(self):
        spec = truncated_poly3()
        mul = spec.ops["mul"]
        out = semidirect_assoc(spec, ActionFamily.from_left(mul),
                               ActionFamily.from_right(mul), spec.maps["partial"])
        assert out.dim == 6
        assert all_pass(check_identities(out, ("ASSOC", "DER")))

    def test_zero_maps_trivially_differential(self):
        spec = truncated_poly3().with_members(maps={"partial": LinMap.zero(3)})
        mul = spec.ops["mul"]
        out = semidirect_assoc(spec, ActionFamily.from_left(mul),
                               ActionFamily.from_right(mul), LinMap.zero(3))
        assert all_pass(check_identities(out, ("ASSOC", "DER")))

    def test_weight_minus_one_projection(self):
        mul = MulTable.from_entries(2, [(0, 0, 0, 1), (1, 1, 1, 1)])
        proj = LinMap([[1, 0], [0, 0]])
        spec = AlgebraSpec(dim=2, ops={"mul": mul}, maps={"partial": proj},
                           weight=F(-1))
        out = semidirect_assoc(spec, ActionFamily.from_left(mul),
                               ActionFamily.from_right(mul), proj)
        assert all_pass(check_identities(out, ("ASSOC", "DER")))

    def test_derivation_iff_representation_condition(self):
        # spoiling theta breaks the weighted derivation on the sum exactly
        # when the differential-representation equations break
        spec = truncated_poly3()
        mul = spec.ops["mul"]
        l, r = ActionFamily.from_left(mul), ActionFamily.from_right(mul)
        theta = LinMap([[0, 0, 0], [0, 1, 0], [0, 1, 2]])
        ctx = Context(dims={"A": 3, "V": 3}, ops={"mul": mul},
                      maps={"partial": spec.maps["partial"], "theta": theta},
                      families={"l": l, "r": r}, weight=F(0))
        rep_ok = all(evaluate_identity(ctx, i).passed for i in ("DA-REP-1", "DA-REP-2"))
        out = semidirect_assoc(spec, l, r, theta)
        out_ok = check_identity(out, "DER").passed
        assert rep_ok == out_ok == False


class TestDoubleConstruction:
    def asi_fixture(self, lam):
        mul = MulTable.from_entries(2, [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)])
        cop = CoprodTable.from_entries(2, [(1, 1, 1, F(1))])
        d = LinMap.scalar(-1 / lam, 2)
        return AlgebraSpec(dim=2, ops={"mul": mul}, coprods={"coprod": cop},
                           maps={"partial": d, "partial_hat": d}, weight=lam)

    @pytest.mark.parametrize("lam", [F(1), F(-1), F(2)])
    def test_scalar_map_family(self, lam):
        spec = self.asi_fixture(lam)
        assert all_pass(check_profile(spec, "differential-asi-bialgebra"))
        out = double_construction(spec)
        assert all_pass(check_identities(out, DOUBLE_CONTRACT))

    def test_zero_input(self):
        spec = AlgebraSpec(dim=2, ops={"mul": MulTable.zero(2)},
                           coprods={"coprod": CoprodTable.zero(2)},
                           maps={"partial": LinMap.zero(2),
                                 "partial_hat": LinMap.zero(2)})
        out = double_construction(spec)
        assert all_pass(check_identities(out, DOUBLE_CONTRACT))

    @pytest.mark.parametrize("lam", [F(1), F(2)])
    def test_adjoint_identity(self, lam):
        # the adjoint of (partial + hat-dual) for the pairing form swaps the
        # roles: it is (hat + partial-dual)
        spec = self.asi_fixture(lam)
        out = double_construction(spec)
        adj = adjoint_wrt_form(out.maps["partial"], out.forms["form"])
        ph, pa = spec.maps["partial_hat"], spec.maps["partial"]
        n = 2
        grid = [[F(0)] * 4 for _ in range(4)]
        for i in range(n):
            for j in range(n):
                grid[i][j] = ph.entries[i][j]
                grid[n + i][n + j] = pa.entries[j][i]
        assert adj == LinMap(grid)

    def test_substructures_remain_admissible(self):
        # when the double passes, both the base and its dual (with swapped
        # maps) satisfy the admissibility equations
        spec = self.asi_fixture(F(2))
        double_construction(spec)  # raises if anything fails
        dual = AlgebraSpec(dim=2,
                           ops={"mul": spec.coprods["coprod"].dualize()},
                           maps={"partial": spec.maps["partial_hat"].transpose(),
                                 "partial_hat": spec.maps["partial"].transpose()},
                           weight=spec.weight)
        assert all_pass(check_identities(spec, ("ADM-DA-1", "ADM-DA-2")))
        assert all_pass(check_identities(dual, ("ADM-DA-1", "ADM-DA-2")))

    def test_rejects_invalid_input(self):
        spec = self.asi_fixture(F(1))
        bad = spec.with_members(weight=F(3))  # derivations no longer match
        with pytest.raises(VerificationError):
            double_construction(bad)


class TestAdjointWrtForm:
    def test_identity_form_gives_transpose(self):
        m = LinMap([[1, 2], [3, 4]])
        B = BilinearForm([[1, 0], [0, 1]])
        assert adjoint_wrt_form(m, B) == m.transpose()

    @given(st.lists(rationals, min_size=4, max_size=4),
           st.lists(rationals, min_size=4, max_size=4))
    @settings(max_examples=30, deadline=None)
    def test_double_adjoint(self, bvals, mvals):
        B = BilinearForm([bvals[:2], bvals[2:]])
        if not B.is_nondegenerate():
            return
        m = LinMap([mvals[:2], mvals[2:]])
        assert adjoint_wrt_form(adjoint_wrt_form(m, B), B) == m

    def test_degenerate_rejected(self):
        with pytest.raises(VerificationError):
            adjoint_wrt_form(LinMap.identity(2), BilinearForm([[1, 1], [1, 1]]))


class TestFrobeniusEquivalence:
    def test_componentwise_algebra(self):
        mul = MulTable.from_entries(2, [(0, 0, 0, 1), (1, 1, 1, 1)])
        spec = AlgebraSpec(dim=2, ops={"mul": mul},
                           forms={"form": BilinearForm([[1, 0], [0, 1]])},
                           maps={"partial": LinMap.zero(2),
                                 "partial_hat": LinMap.zero(2)})
        report, phi = frobenius_rep_equivalence(spec)
        assert report.passed
        assert phi == LinMap.identity(2)

    def test_scalar_derivation_variant(self):
        mul = MulTable.from_entries(2, [(0, 0, 0, 1), (1, 1, 1, 1)])
        d = LinMap.scalar(F(-1, 2), 2)
        spec = AlgebraSpec(dim=2, ops={"mul": mul},
                           forms={"form": BilinearForm([[1, 0], [0, 1]])},
                           maps={"partial": d, "partial_hat": d}, weight=F(2))
        report, _ = frobenius_rep_equivalence(spec)
        assert report.passed

    def test_mismatched_maps_fail_with_witness(self):
        mul = MulTable.from_entries(2, [(0, 0, 0, 1), (1, 1, 1, 1)])
        spec = AlgebraSpec(dim=2, ops={"mul": mul},
                           forms={"form": BilinearForm([[1, 0], [0, 2]])},
                           maps={"partial": LinMap([[0, 0], [0, 1]]),
                                 "partial_hat": LinMap([[0, 1], [0, 0]])})
        report, _ = frobenius_rep_equivalence(spec)
        assert not report.passed
        assert report.witnesses

    def test_degenerate_form_rejected(self):
        mul = MulTable.from_entries(2, [(0, 0, 0, 1), (1, 1, 1, 1)])
        spec = AlgebraSpec(dim=2, ops={"mul": mul},
                           forms={"form": BilinearForm([[0, 0], [0, 0]])},
                           maps={"partial": LinMap.zero(2),
                                 "partial_hat": LinMap.zero(2)})
        with pytest.raises(VerificationError):
            frobenius_rep_equivalence(spec)


class TestAssociativeMatchedPair:
    def build_ctx(self, spec, perturb=None):
        mul = spec.ops["mul"]
        dualmul = spec.coprods["coprod"].dualize()
        fams = {
            "lA": ActionFamily.from_right(mul).dual(),
            "rA": ActionFamily.from_left(mul).dual(),
            "lB": ActionFamily.from_right(dualmul).dual(),
            "rB": ActionFamily.from_left(dualmul).dual(),
        }
        if perturb:
            fams[perturb] = perturb_family(fams[perturb], 0, 0, 0, F(1))
        return Context(dims={"A": spec.dim, "B": spec.dim},
                       ops={"mulA": mul, "mulB": dualmul}, families=fams)

    def test_bialgebra_gives_matched_pair(self):
        mul = MulTable.from_entries(2, [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)])
        cop = CoprodTable.from_entries(2, [(1, 1, 1, F(1))])
        spec = AlgebraSpec(dim=2, ops={"mul": mul}, coprods={"coprod": cop})
        ctx = self.build_ctx(spec)
        reports = [evaluate_identity(ctx, f"MP-ASSOC-{i}") for i in range(1, 7)]
        assert all_pass(reports)

    def test_perturbed_action_fails(self):
        mul = MulTable.from_entries(2, [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)])
        cop = CoprodTable.from_entries(2, [(1, 1, 1, F(1))])
        spec = AlgebraSpec(dim=2, ops={"mul": mul}, coprods={"coprod": cop})
        ctx = self.build_ctx(spec, perturb="lA")
        reports = [evaluate_identity(ctx, f"MP-ASSOC-{i}") for i in range(1, 7)]
        assert not all_pass(reports)
