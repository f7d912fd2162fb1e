from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from novalg.linalg import LinMap
from novalg.model import AlgebraSpec, CoprodTable, MulTable, SpecError, all_pass
from novalg.catalog import (
    CATALOG,
    PROFILES,
    check_identities,
    check_identity,
    check_profile,
    resolve_identity,
)

from conftest import canonical_bialgebra, truncated_poly3, zero_spec

rationals = st.builds(F, st.integers(-2, 2), st.integers(1, 2))


def cube_strategy(dim):
    return st.builds(
        lambda vals: [[vals[dim * dim * i + dim * j: dim * dim * i + dim * j + dim]
                       for j in range(dim)] for i in range(dim)],
        st.lists(rationals, min_size=dim ** 3, max_size=dim ** 3))


class TestCanonicalExample:
    def test_full_bialgebra_profile(self):
        reports = check_profile(canonical_bialgebra(), "nn-bialgebra")
        assert all_pass(reports)
        assert [r.identity for r in reports] == list(PROFILES["nn-bialgebra"])

    def test_zero_spec_passes(self):
        assert all_pass(check_profile(zero_spec(2), "nn-bialgebra"))

    def test_succ_dropped_fails_exactly_nn2_and_nnbi4(self):
        # with succ = 0 the combined coproduct of the canonical example is
        # identically zero, so only the axioms separating the two coproducts
        # can break; brute force (below) confirms the failing set
        spec = canonical_bialgebra()
        broken = spec.with_members(ops={"prec": spec.ops["prec"],
                                        "succ": MulTable.zero(2)})
        failing = {r.identity for r in check_profile(broken, "nn-bialgebra")
                   if not r.passed}
        assert failing == {"NN-2", "NN-BI-4"}

    def test_nnbi4_failure_matches_brute_force(self):
        spec = canonical_bialgebra()
        broken = spec.with_members(ops={"prec": spec.ops["prec"],
                                        "succ": MulTable.zero(2)})
        prec = broken.ops["prec"]
        circ = prec  # succ is zero
        coprec, cosucc = broken.coprods["coprec"], broken.coprods["cosucc"]

        def lmul(x, t):  # x (x) basis index -> vector
            return [t.c[x][j] for j in range(2)]

        # independent evaluation of the fourth compatibility on (0, 0)
        def t2(cop, k):
            return [[cop.d[k][i][j] for j in range(2)] for i in range(2)]

        def apply_left(op_matrix, tt):
            return [[sum(op_matrix[a][i] * tt[i][b] for i in range(2))
                     for b in range(2)] for a in range(2)]

        def apply_right(op_matrix, tt):
            return [[sum(op_matrix[b][j] * tt[a][j] for j in range(2))
                     for b in range(2)] for a in range(2)]

        def sigma(tt):
            return [[tt[j][i] for j in range(2)] for i in range(2)]

        def add(x, y):
            return [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(x, y)]

        def neg(x):
            return [[-a for a in row] for row in x]

        L = [[circ.c[0][j][k] for j in range(2)] for k in range(2)]
        R = [[circ.c[i][0][k] for i in range(2)] for k in range(2)]
        lhs = add(apply_left(L, t2(coprec, 0)), sigma(apply_left(L, t2(coprec, 0))))
        rhs = add(apply_right(L, t2(cosucc, 0)), sigma(apply_right(R, t2(cosucc, 0))))
        residual = add(lhs, neg(rhs))
        assert any(v != 0 for row in residual for v in row)

    def test_witness_cap(self):
        spec = canonical_bialgebra()
        broken = spec.with_members(ops={"prec": spec.ops["prec"],
                                        "succ": MulTable.zero(2)})
        rep = check_identity(broken, "NN-2", witness_cap=1)
        assert rep.violations == 2
        assert len(rep.witnesses) == 1


def brute_force_assoc(cube, dim):
    """(e_i e_j) e_k - e_i (e_j e_k) from the raw cube, no library calls."""
    bad = []
    for i, j, k in product(range(dim), repeat=3):
        left = [sum(cube[i][j][p] * cube[p][k][m] for p in range(dim))
                for m in range(dim)]
        right = [sum(cube[j][k][q] * cube[i][q][m] for q in range(dim))
                 for m in range(dim)]
        if any(a != b for a, b in zip(left, right)):
            bad.append((i, j, k))
    return bad


class TestAssocOracle:
    def poly_cube(self):
        return [[list(r) for r in p]
                for p in truncated_poly3().ops["mul"].c]

    def test_truncated_polys_associative(self):
        cube = self.poly_cube()
        assert brute_force_assoc(cube, 3) == []
        spec = AlgebraSpec(dim=3, ops={"mul": MulTable(cube)})
        assert check_identity(spec, "ASSOC").passed

    def test_scaling_perturbation_stays_associative(self):
        # x.x = 2 x^2 rescales the basis, so associativity survives; the
        # brute-force oracle fixes the expected outcome
        cube = self.poly_cube()
        cube[1][1][2] = F(2)
        assert brute_force_assoc(cube, 3) == []
        assert check_identity(AlgebraSpec(dim=3, ops={"mul": MulTable(cube)}),
                              "ASSOC").passed

    def test_breaking_perturbation_fails_with_witness(self):
        cube = self.poly_cube()
        cube[1][2][2] = F(1)  # x . x^2 = x^2 breaks associativity
        expected = brute_force_assoc(cube, 3)
        assert expected
        rep = check_identity(AlgebraSpec(dim=3, ops={"mul": MulTable(cube)}), "ASSOC")
        assert not rep.passed
        assert [w.indices for w in rep.witnesses] == expected


class TestDuality:
    @given(cube_strategy(2), cube_strategy(2))
    @settings(max_examples=30, deadline=None)
    def test_coalgebra_iff_dual_algebra(self, c1, c2):
        spec = AlgebraSpec(dim=2, coprods={"coprec": CoprodTable(c1),
                                           "cosucc": CoprodTable(c2)})
        dual = AlgebraSpec(dim=2, ops={"prec": CoprodTable(c1).dualize(),
                                       "succ": CoprodTable(c2).dualize()})
        for co_id, alg_id in (("NN-CO-1", "NN-1"), ("NN-CO-2", "NN-2")):
            assert (check_identity(spec, co_id).passed
                    == check_identity(dual, alg_id).passed)

    @given(cube_strategy(2))
    @settings(max_examples=30, deadline=None)
    def test_novikov_coalgebra_iff_dual(self, c):
        # pairing a*(x)b*(x)c* against the coassociator swaps the roles of the
        # two axioms, so co-axiom 1 matches algebra axiom 2 and vice versa
        spec = AlgebraSpec(dim=2, coprods={"coprod": CoprodTable(c)})
        dual = AlgebraSpec(dim=2, ops={"mul": CoprodTable(c).dualize()})
        for co_id, alg_id in (("NOV-CO-1", "NOV-2"), ("NOV-CO-2", "NOV-1")):
            assert (check_identity(spec, co_id).passed
                    == check_identity(dual, alg_id).passed)


def permute_spec(spec, perm):
    """Relabel basis vector i as sigma(i) in every member."""
    n = spec.dim

    def pm(t):
        return MulTable([[[t.c[perm[i]][perm[j]][perm[k]] for k in range(n)]
                          for j in range(n)] for i in range(n)])

    def pc(t):
        return CoprodTable([[[t.d[perm[k]][perm[i]][perm[j]] for j in range(n)]
                             for i in range(n)] for k in range(n)])

    def pl(m):
        return LinMap([[m.entries[perm[i]][perm[j]] for j in range(n)]
                       for i in range(n)])

    from novalg.model import BilinearForm
    return AlgebraSpec(
        dim=n,
        ops={k: pm(v) for k, v in spec.ops.items()},
        coprods={k: pc(v) for k, v in spec.coprods.items()},
        maps={k: pl(v) for k, v in spec.maps.items()},
        forms={k: BilinearForm([[v.entries[perm[i]][perm[j]] for j in range(n)]
                                for i in range(n)]) for k, v in spec.forms.items()},
        weight=spec.weight)


class TestBasisPermutationInvariance:
    @given(cube_strategy(2), cube_strategy(2), st.sampled_from([(0, 1), (1, 0)]))
    @settings(max_examples=25, deadline=None)
    def test_two_product_identities(self, c1, c2, perm):
        spec = AlgebraSpec(dim=2, ops={"prec": MulTable(c1), "succ": MulTable(c2)})
        other = permute_spec(spec, perm)
        for ident in ("NN-1", "NN-2"):
            assert check_identity(spec, ident).passed == check_identity(other, ident).passed

    @given(cube_strategy(2), cube_strategy(2), st.sampled_from([(0, 1), (1, 0)]))
    @settings(max_examples=25, deadline=None)
    def test_bialgebra_identities(self, c1, d1, perm):
        spec = AlgebraSpec(dim=2, ops={"prec": MulTable(c1), "succ": MulTable(c1)},
                           coprods={"coprec": CoprodTable(d1), "cosucc": CoprodTable(d1)})
        other = permute_spec(spec, perm)
        for ident in ("NN-BI-1", "NN-BI-3"):
            assert check_identity(spec, ident).passed == check_identity(other, ident).passed


class TestNovikovReduction:
    def test_specialization_from_commutative_derivation(self):
        from novalg.derived import gelfand_nn
        g = gelfand_nn(truncated_poly3())
        prec, succ = g.ops["prec"], g.ops["succ"]
        assert prec.is_commutative_pair(succ)
        assert all_pass(check_profile(g, "nn-algebra"))
        assert check_identity(g, "NOV-1", binding={"mul": "prec"}).passed
        assert check_identity(g, "NOV-2", binding={"mul": "prec"}).passed

    @given(cube_strategy(2), cube_strategy(2))
    @settings(max_examples=25, deadline=None)
    def test_reduction_aggregates_agree(self, c, d):
        # symmetric data: succ is the opposite of prec, cosucc the flip of coprec
        prec = MulTable(c)
        coprec = CoprodTable(d)
        nn = AlgebraSpec(dim=2, ops={"prec": prec, "succ": prec.opposite()},
                         coprods={"coprec": coprec, "cosucc": coprec.flip()})
        nov = AlgebraSpec(dim=2, ops={"mul": prec}, coprods={"coprod": coprec})
        assert (all_pass(check_profile(nn, "nn-bialgebra"))
                == all_pass(check_profile(nov, "novikov-bialgebra")))

    def test_positive_reduction_case(self):
        from novalg.derived import gelfand_nn
        g = gelfand_nn(truncated_poly3())
        nn = AlgebraSpec(dim=2 + 1, ops=g.ops,
                         coprods={"coprec": CoprodTable.zero(3),
                                  "cosucc": CoprodTable.zero(3)})
        nov = AlgebraSpec(dim=3, ops={"mul": g.ops["prec"]},
                          coprods={"coprod": CoprodTable.zero(3)})
        assert all_pass(check_profile(nn, "nn-bialgebra"))
        assert all_pass(check_profile(nov, "novikov-bialgebra"))


class TestLiteralVariant:
    def test_literal_implies_symmetrized(self):
        # holding literally (both printed sides vanish) is strictly stronger
        mul = MulTable.from_entries(2, [(0, 0, 0, F(1)), (1, 1, 1, F(1))])
        cop = CoprodTable.from_entries(2, [(0, 0, 1, F(1)), (0, 1, 0, F(1))])
        spec = AlgebraSpec(dim=2, ops={"mul": mul}, coprods={"coprod": cop})
        corrected = check_identity(spec, "NOV-BI-3")
        literal = check_identity(spec, "NOV-BI-3-literal")
        assert not literal.passed
        # the symmetrized form cancels at equal arguments where the literal
        # form already has a nonzero left side
        assert (0, 0) not in {w.indices for w in corrected.witnesses}
        assert (0, 0) in {w.indices for w in literal.witnesses}

    @given(cube_strategy(2), cube_strategy(2))
    @settings(max_examples=25, deadline=None)
    def test_literal_pass_implies_corrected_pass(self, c, d):
        spec = AlgebraSpec(dim=2, ops={"mul": MulTable(c)},
                           coprods={"coprod": CoprodTable(d)})
        if check_identity(spec, "NOV-BI-3-literal").passed:
            assert check_identity(spec, "NOV-BI-3").passed


class TestCatalogPlumbing:
    def test_unknown_identity(self):
        with pytest.raises(SpecError, match="unknown identity"):
            check_identity(zero_spec(2), "NOPE")

    def test_unknown_profile(self):
        with pytest.raises(SpecError, match="unknown profile"):
            check_profile(zero_spec(2), "nope")

    def test_missing_member(self):
        with pytest.raises(SpecError, match="missing operation"):
            check_identity(AlgebraSpec(dim=2), "ASSOC")

    def test_aliases(self):
        assert resolve_identity("DER-LAMBDA").ident == "DER"
        assert resolve_identity("O-OP-1").ident == "O-OP-PREC"

    def test_weight_is_read_from_spec(self):
        mul = MulTable.from_entries(2, [(0, 0, 0, 1), (1, 1, 1, 1)])
        proj = LinMap([[1, 0], [0, 0]])
        spec = AlgebraSpec(dim=2, ops={"mul": mul}, maps={"partial": proj},
                           weight=F(-1))
        assert check_identity(spec, "DER").passed
        assert not check_identity(spec.with_members(weight=F(0)), "DER").passed

    def test_form_nondeg_reports_rank_defect(self):
        from novalg.model import BilinearForm
        spec = AlgebraSpec(dim=2, forms={"form": BilinearForm([[1, 2], [2, 4]])})
        rep = check_identity(spec, "FORM-NONDEG")
        assert not rep.passed
        assert rep.witnesses[0].residual == (F(1),)

    def test_derived_circ_matches_sum(self):
        spec = canonical_bialgebra()
        from novalg.catalog import context_for
        ctx = context_for(spec)
        assert ctx.op("circ") == spec.ops["prec"].add(spec.ops["succ"])

    def test_every_entry_is_well_formed(self):
        for ident, entry in CATALOG.items():
            assert entry.ident == ident
            assert all(s in ("A", "B", "V", "W") for s in entry.spaces)

    def test_profiles_reference_known_identities(self):
        for name, idents in PROFILES.items():
            for ident in idents:
                assert ident in CATALOG, (name, ident)

    def test_reports_are_deterministic_across_threads(self):
        spec = canonical_bialgebra()
        broken = spec.with_members(ops={"prec": spec.ops["prec"],
                                        "succ": MulTable.zero(2)})
        seq = [r.to_dict() for r in check_profile(broken, "nn-bialgebra", threads=1)]
        par = [r.to_dict() for r in check_profile(broken, "nn-bialgebra", threads=4)]
        assert seq == par
