"""Deterministic structure-building maps: dual and (co)adjoint representations,
semidirect products, bowtie algebras from matched pairs, Manin-type doubles on
A + A*, and invariant-form machinery.

No constructor trusts its own precondition: with check=True (the default)
inputs are verified and outputs are re-verified against their contracts, so
every theorem-backed construction doubles as an executable regression test.
check=False builds unconditionally, which the falsifiability tests rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import LinMap, Vec, ZERO, basis_vec
from .model import (
    ActionFamily,
    AlgebraSpec,
    BilinearForm,
    CoprodTable,
    MulTable,
    Report,
    SpecError,
    VerificationError,
    all_pass,
)
from .catalog import (
    Context,
    check_identities,
    check_profile,
    evaluate_identity,
)


# ---------------------------------------------------------------------------
# representations

@dataclass(frozen=True)
class NNRepresentation:
    """Carrier space with the four action families of a two-product algebra."""

    algebra: AlgebraSpec
    lprec: ActionFamily
    rprec: ActionFamily
    lsucc: ActionFamily
    rsucc: ActionFamily
    theta: LinMap | None = None

    def __post_init__(self):
        n, m = self.algebra.dim, self.lprec.carrier_dim
        for fam in (self.lprec, self.rprec, self.lsucc, self.rsucc):
            if fam.domain_dim != n or fam.carrier_dim != m:
                raise SpecError("action family dimensions are inconsistent")
        if self.theta is not None and (self.theta.rows != m or self.theta.cols != m):
            raise SpecError("theta must be an endomorphism of the carrier")

    @property
    def carrier_dim(self) -> int:
        return self.lprec.carrier_dim

    def context(self) -> Context:
        ctx = Context(
            dims={"A": self.algebra.dim, "V": self.carrier_dim},
            ops=self.algebra.ops,
            maps=dict(self.algebra.maps),
            families={"lprec": self.lprec, "rprec": self.rprec,
                      "lsucc": self.lsucc, "rsucc": self.rsucc},
            weight=self.algebra.weight,
        )
        if self.theta is not None:
            ctx.maps["theta"] = self.theta
        return ctx

    def check(self, witness_cap: int = 16) -> list[Report]:
        return check_profile(self.context(), "nn-representation", witness_cap=witness_cap)


def _require(reports: list[Report], what: str):
    if not all_pass(reports):
        raise VerificationError(f"{what} failed verification", reports)


def dual_nn_representation(rep: NNRepresentation, check: bool = True) -> NNRepresentation:
    """The induced representation on the dual carrier:
    (lprec, rprec, lsucc, rsucc) -> (-(rprec+rsucc)*, lsucc*, rprec*, -(lprec+lsucc)*)."""
    if check:
        _require(rep.check(), "input representation")
    rcirc = rep.rprec.add(rep.rsucc)
    lcirc = rep.lprec.add(rep.lsucc)
    out = NNRepresentation(
        algebra=rep.algebra,
        lprec=rcirc.dual().neg(),
        rprec=rep.lsucc.dual(),
        lsucc=rep.rprec.dual(),
        rsucc=lcirc.dual().neg(),
        theta=rep.theta.transpose() if rep.theta is not None else None,
    )
    if check:
        _require(out.check(), "dual representation")
    return out


def adjoint_nn(spec: AlgebraSpec, check: bool = True) -> NNRepresentation:
    """(A, L_prec, R_prec, L_succ, R_succ) on the algebra itself."""
    prec, succ = spec.ops.get("prec"), spec.ops.get("succ")
    if prec is None or succ is None:
        raise SpecError("adjoint representation needs ops 'prec' and 'succ'")
    if check:
        _require(check_profile(spec, "nn-algebra"), "underlying two-product algebra")
    rep = NNRepresentation(
        algebra=spec,
        lprec=ActionFamily.from_left(prec),
        rprec=ActionFamily.from_right(prec),
        lsucc=ActionFamily.from_left(succ),
        rsucc=ActionFamily.from_right(succ),
    )
    if check:
        _require(rep.check(), "adjoint representation")
    return rep


def coadjoint_nn(spec: AlgebraSpec, check: bool = True) -> NNRepresentation:
    """The dual of the adjoint representation, acting on the dual space."""
    return dual_nn_representation(adjoint_nn(spec, check=check), check=check)


def semidirect_nn(spec: AlgebraSpec, rep: NNRepresentation) -> AlgebraSpec:
    """Two-product algebra on A + V; the first block is A, the second is V.

    Built unconditionally: the output satisfies the two-product axioms exactly
    when the action quintuple is a representation, and that equivalence is
    used as a test oracle.
    """
    prec, succ = spec.ops.get("prec"), spec.ops.get("succ")
    if prec is None or succ is None:
        raise SpecError("semidirect product needs ops 'prec' and 'succ'")
    n, m = spec.dim, rep.carrier_dim
    if rep.algebra.dim != n:
        raise SpecError("representation acts for a different algebra dimension")
    total = n + m

    def build(table: MulTable, lfam: ActionFamily, rfam: ActionFamily) -> MulTable:
        cube = [[[ZERO] * total for _ in range(total)] for _ in range(total)]
        for i in range(n):
            for j in range(n):
                row = table.c[i][j]
                for k in range(n):
                    cube[i][j][k] = row[k]
        for i in range(n):
            mat = lfam.mats[i]
            for b in range(m):
                for a in range(m):
                    cube[i][n + b][n + a] = mat.entries[a][b]
        for j in range(n):
            mat = rfam.mats[j]
            for a in range(m):
                for b in range(m):
                    cube[n + a][j][n + b] = mat.entries[b][a]
        return MulTable(cube)

    return AlgebraSpec(
        dim=total,
        ops={"prec": build(prec, rep.lprec, rep.rprec),
             "succ": build(succ, rep.lsucc, rep.rsucc)},
        weight=spec.weight,
    )


# ---------------------------------------------------------------------------
# matched pairs

@dataclass(frozen=True)
class MatchedPairData:
    """Two algebras with the eight cross action families (A on B, B on A)."""

    specA: AlgebraSpec
    specB: AlgebraSpec
    lprecA: ActionFamily
    rprecA: ActionFamily
    lsuccA: ActionFamily
    rsuccA: ActionFamily
    lprecB: ActionFamily
    rprecB: ActionFamily
    lsuccB: ActionFamily
    rsuccB: ActionFamily

    def __post_init__(self):
        nA, nB = self.specA.dim, self.specB.dim
        for fam in (self.lprecA, self.rprecA, self.lsuccA, self.rsuccA):
            if fam.domain_dim != nA or fam.carrier_dim != nB:
                raise SpecError("A-side action family dimensions are inconsistent")
        for fam in (self.lprecB, self.rprecB, self.lsuccB, self.rsuccB):
            if fam.domain_dim != nB or fam.carrier_dim != nA:
                raise SpecError("B-side action family dimensions are inconsistent")

    def context(self) -> Context:
        return Context(
            dims={"A": self.specA.dim, "B": self.specB.dim},
            ops={"precA": self.specA.ops["prec"], "succA": self.specA.ops["succ"],
                 "precB": self.specB.ops["prec"], "succB": self.specB.ops["succ"]},
            families={"lprecA": self.lprecA, "rprecA": self.rprecA,
                      "lsuccA": self.lsuccA, "rsuccA": self.rsuccA,
                      "lprecB": self.lprecB, "rprecB": self.rprecB,
                      "lsuccB": self.lsuccB, "rsuccB": self.rsuccB},
        )

    def rep_of_A_on_B(self) -> NNRepresentation:
        return NNRepresentation(self.specA, self.lprecA, self.rprecA,
                                self.lsuccA, self.rsuccA)

    def rep_of_B_on_A(self) -> NNRepresentation:
        return NNRepresentation(self.specB, self.lprecB, self.rprecB,
                                self.lsuccB, self.rsuccB)

    def check(self, witness_cap: int = 16) -> list[Report]:
        """Representation axioms on both sides plus the twelve compatibilities."""
        reports = self.rep_of_A_on_B().check(witness_cap)
        reports += self.rep_of_B_on_A().check(witness_cap)
        reports += check_profile(self.context(), "matched-pair-nn", witness_cap=witness_cap)
        return reports


def bowtie_nn(mp: MatchedPairData) -> AlgebraSpec:
    """Two-product algebra on A + B with the matched-pair cross products.

    Unconditional build; the Lemma-style equivalence (valid matched pair iff
    the output satisfies the axioms) is exercised by tests.
    """
    nA, nB = mp.specA.dim, mp.specB.dim
    total = nA + nB

    def build(tA: MulTable, tB: MulTable, lA: ActionFamily, rA: ActionFamily,
              lB: ActionFamily, rB: ActionFamily) -> MulTable:
        cube = [[[ZERO] * total for _ in range(total)] for _ in range(total)]
        for i in range(nA):
            for j in range(nA):
                row = tA.c[i][j]
                for k in range(nA):
                    cube[i][j][k] = row[k]
        for a in range(nB):
            for b in range(nB):
                row = tB.c[a][b]
                for c in range(nB):
                    cube[nA + a][nA + b][nA + c] = row[c]
        # x * e_b: r_B(e_b)x in A plus l_A(x)e_b in B
        for i in range(nA):
            for b in range(nB):
                colA = rB.mats[b]
                for k in range(nA):
                    cube[i][nA + b][k] = colA.entries[k][i]
                matB = lA.mats[i]
                for c in range(nB):
                    cube[i][nA + b][nA + c] = matB.entries[c][b]
        # e_a * y: l_B(e_a)y in A plus r_A(y)e_a in B
        for a in range(nB):
            for j in range(nA):
                matA = lB.mats[a]
                for k in range(nA):
                    cube[nA + a][j][k] = matA.entries[k][j]
                matB = rA.mats[j]
                for c in range(nB):
                    cube[nA + a][j][nA + c] = matB.entries[c][a]
        return MulTable(cube)

    return AlgebraSpec(
        dim=total,
        ops={"prec": build(mp.specA.ops["prec"], mp.specB.ops["prec"],
                           mp.lprecA, mp.rprecA, mp.lprecB, mp.rprecB),
             "succ": build(mp.specA.ops["succ"], mp.specB.ops["succ"],
                           mp.lsuccA, mp.rsuccA, mp.lsuccB, mp.rsuccB)},
        weight=mp.specA.weight,
    )


def dual_two_product_algebra(spec: AlgebraSpec) -> AlgebraSpec:
    """The algebra on the dual space whose products are dual to the coproducts."""
    coprec, cosucc = spec.coprods.get("coprec"), spec.coprods.get("cosucc")
    if coprec is None or cosucc is None:
        raise SpecError("dual algebra needs coprods 'coprec' and 'cosucc'")
    return AlgebraSpec(dim=spec.dim,
                       ops={"prec": coprec.dualize(), "succ": cosucc.dualize()},
                       weight=spec.weight)


def matched_pair_from_bialgebra(spec: AlgebraSpec, check: bool = True) -> MatchedPairData:
    """Coadjoint-type matched pair of A and its dual built from a bialgebra."""
    if check:
        _require(check_profile(spec, "nn-bialgebra"), "input bialgebra")
    specA = AlgebraSpec(dim=spec.dim,
                        ops={"prec": spec.ops["prec"], "succ": spec.ops["succ"]})
    specB = dual_two_product_algebra(spec)
    precA, succA = specA.ops["prec"], specA.ops["succ"]
    circA = precA.add(succA)
    precB, succB = specB.ops["prec"], specB.ops["succ"]
    circB = precB.add(succB)
    mp = MatchedPairData(
        specA=specA,
        specB=specB,
        lprecA=ActionFamily.from_right(circA).dual().neg(),
        rprecA=ActionFamily.from_left(succA).dual(),
        lsuccA=ActionFamily.from_right(precA).dual(),
        rsuccA=ActionFamily.from_left(circA).dual().neg(),
        lprecB=ActionFamily.from_right(circB).dual().neg(),
        rprecB=ActionFamily.from_left(succB).dual(),
        lsuccB=ActionFamily.from_right(precB).dual(),
        rsuccB=ActionFamily.from_left(circB).dual().neg(),
    )
    if check:
        _require(mp.check(), "matched pair from bialgebra")
    return mp


def pairing_form(n: int) -> BilinearForm:
    """The symmetric pairing on A + A*: B(x + a*, y + b*) = <a*, y> + <x, b*>."""
    ent = [[ZERO] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        ent[i][n + i] = Fraction(1)
        ent[n + i][i] = Fraction(1)
    return BilinearForm(ent)


MANIN_CONTRACT = ("NN-1", "NN-2", "FORM-SYM", "FORM-NONDEG", "INV-NN")


def manin_from_bialgebra(spec: AlgebraSpec, check: bool = True) -> AlgebraSpec:
    """The double algebra on A + A* with the standard pairing form.

    Assembled directly from the displayed cross products (dual operators on
    each side), independently of bowtie_nn; tests compare the two routes.
    """
    if check:
        _require(check_profile(spec, "nn-bialgebra"), "input bialgebra")
    n = spec.dim
    pA, sA = spec.ops["prec"], spec.ops["succ"]
    oA = pA.add(sA)
    dualg = dual_two_product_algebra(spec)
    pD, sD = dualg.ops["prec"], dualg.ops["succ"]
    oD = pD.add(sD)
    total = 2 * n

    def col(mat: LinMap, j: int) -> Vec:
        return tuple(mat.entries[k][j] for k in range(mat.rows))

    prec_cube = [[[ZERO] * total for _ in range(total)] for _ in range(total)]
    succ_cube = [[[ZERO] * total for _ in range(total)] for _ in range(total)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                prec_cube[i][j][k] = pA.c[i][j][k]
                succ_cube[i][j][k] = sA.c[i][j][k]
                prec_cube[n + i][n + j][n + k] = pD.c[i][j][k]
                succ_cube[n + i][n + j][n + k] = sD.c[i][j][k]
    for i in range(n):
        for j in range(n):
            # e_i prec e^j = L*_{succ,dual}(e^j) e_i - R*_{circ,A}(e_i) e^j
            va = col(sD.left_matrix(j).transpose(), i)
            vd = col(oA.right_matrix(i).transpose(), j)
            for k in range(n):
                prec_cube[i][n + j][k] = va[k]
                prec_cube[i][n + j][n + k] = -vd[k]
            # e^i prec e_j = -R*_{circ,dual}(e^i) e_j + L*_{succ,A}(e_j) e^i
            va = col(oD.right_matrix(i).transpose(), j)
            vd = col(sA.left_matrix(j).transpose(), i)
            for k in range(n):
                prec_cube[n + i][j][k] = -va[k]
                prec_cube[n + i][j][n + k] = vd[k]
            # e_i succ e^j = -L*_{circ,dual}(e^j) e_i + R*_{prec,A}(e_i) e^j
            va = col(oD.left_matrix(j).transpose(), i)
            vd = col(pA.right_matrix(i).transpose(), j)
            for k in range(n):
                succ_cube[i][n + j][k] = -va[k]
                succ_cube[i][n + j][n + k] = vd[k]
            # e^i succ e_j = R*_{prec,dual}(e^i) e_j - L*_{circ,A}(e_j) e^i
            va = col(pD.right_matrix(i).transpose(), j)
            vd = col(oA.left_matrix(j).transpose(), i)
            for k in range(n):
                succ_cube[n + i][j][k] = va[k]
                succ_cube[n + i][j][n + k] = -vd[k]

    out = AlgebraSpec(dim=total,
                      ops={"prec": MulTable(prec_cube), "succ": MulTable(succ_cube)},
                      forms={"form": pairing_form(n)})
    if check:
        _require(check_identities(out, MANIN_CONTRACT), "double algebra on A + A*")
    return out


# ---------------------------------------------------------------------------
# associative / differential side

def semidirect_assoc(spec: AlgebraSpec, l: ActionFamily, r: ActionFamily,
                     theta: LinMap, check: bool = True) -> AlgebraSpec:
    """Algebra on A + V with the module product and the map partial + theta.

    The module axioms of (l, r) are verified; whether partial + theta is a
    weighted derivation of the output is exactly the representation condition
    on (l, r, theta), used as a test oracle, so it is not enforced here.
    """
    mul, pa = spec.ops.get("mul"), spec.maps.get("partial")
    if mul is None or pa is None:
        raise SpecError("semidirect differential algebra needs op 'mul' and map 'partial'")
    n, m = spec.dim, l.carrier_dim
    if l.domain_dim != n or r.domain_dim != n or r.carrier_dim != m:
        raise SpecError("action family dimensions are inconsistent")
    if theta.rows != m or theta.cols != m:
        raise SpecError("theta must be an endomorphism of the carrier")
    if check:
        ctx = Context(dims={"A": n, "V": m}, ops={"mul": mul},
                      families={"l": l, "r": r}, weight=spec.weight)
        _require([evaluate_identity(ctx, "ASSOC-REP")], "module structure")
    total = n + m
    cube = [[[ZERO] * total for _ in range(total)] for _ in range(total)]
    for i in range(n):
        for j in range(n):
            row = mul.c[i][j]
            for k in range(n):
                cube[i][j][k] = row[k]
    for i in range(n):
        mat = l.mats[i]
        for b in range(m):
            for a in range(m):
                cube[i][n + b][n + a] = mat.entries[a][b]
    for j in range(n):
        mat = r.mats[j]
        for a in range(m):
            for b in range(m):
                cube[n + a][j][n + b] = mat.entries[b][a]
    big = [[ZERO] * total for _ in range(total)]
    for i in range(n):
        for j in range(n):
            big[i][j] = pa.entries[i][j]
    for a in range(m):
        for b in range(m):
            big[n + a][n + b] = theta.entries[a][b]
    return AlgebraSpec(dim=total, ops={"mul": MulTable(cube)},
                       maps={"partial": LinMap(big)}, weight=spec.weight)


DOUBLE_CONTRACT = ("ASSOC", "DER", "FORM-SYM", "FORM-NONDEG", "INV-ASSOC")


def double_construction(spec: AlgebraSpec, check: bool = True) -> AlgebraSpec:
    """Associative double on A + A*: the matched-pair product of A with its
    dual algebra, the map partial + partial_hat*, and the pairing form."""
    for name in ("mul",):
        if name not in spec.ops:
            raise SpecError("double construction needs op 'mul'")
    if "coprod" not in spec.coprods:
        raise SpecError("double construction needs coprod 'coprod'")
    for name in ("partial", "partial_hat"):
        if name not in spec.maps:
            raise SpecError(f"double construction needs map {name!r}")
    if check:
        _require(check_profile(spec, "differential-asi-bialgebra"),
                 "differential bialgebra input")
    n = spec.dim
    mul = spec.ops["mul"]
    dualmul = spec.coprods["coprod"].dualize()
    pa, ph = spec.maps["partial"], spec.maps["partial_hat"]
    total = 2 * n

    def col(mat: LinMap, j: int) -> Vec:
        return tuple(mat.entries[k][j] for k in range(mat.rows))

    cube = [[[ZERO] * total for _ in range(total)] for _ in range(total)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                cube[i][j][k] = mul.c[i][j][k]
                cube[n + i][n + j][n + k] = dualmul.c[i][j][k]
    for i in range(n):
        for j in range(n):
            # e_i * e^j = L*_{dual}(e^j) e_i + R*_A(e_i) e^j
            va = col(dualmul.left_matrix(j).transpose(), i)
            vd = col(mul.right_matrix(i).transpose(), j)
            for k in range(n):
                cube[i][n + j][k] = va[k]
                cube[i][n + j][n + k] = vd[k]
            # e^i * e_j = R*_{dual}(e^i) e_j + L*_A(e_j) e^i
            va = col(dualmul.right_matrix(i).transpose(), j)
            vd = col(mul.left_matrix(j).transpose(), i)
            for k in range(n):
                cube[n + i][j][k] = va[k]
                cube[n + i][j][n + k] = vd[k]

    big = [[ZERO] * total for _ in range(total)]
    pht = ph.transpose()
    for i in range(n):
        for j in range(n):
            big[i][j] = pa.entries[i][j]
            big[n + i][n + j] = pht.entries[i][j]
    out = AlgebraSpec(dim=total, ops={"mul": MulTable(cube)},
                      maps={"partial": LinMap(big)},
                      forms={"form": pairing_form(n)}, weight=spec.weight)
    if check:
        _require(check_identities(out, DOUBLE_CONTRACT), "double construction output")
    return out


def adjoint_wrt_form(m: LinMap, B: BilinearForm) -> LinMap:
    """The unique map m^ with B(m x, y) = B(x, m^ y); requires B nondegenerate."""
    if not B.is_nondegenerate():
        raise VerificationError("form is degenerate; no adjoint exists")
    binv = LinMap(B.inverse_entries())
    return binv.compose(m.transpose()).compose(LinMap(B.entries))


def frobenius_rep_equivalence(spec: AlgebraSpec,
                              witness_cap: int = 16) -> tuple[Report, LinMap]:
    """Check that pairing with the invariant form intertwines the regular
    module (with partial) and the dual module (with the adjoint's dual).

    Returns the intertwining report together with the map phi(x) = B(x, -).
    """
    mul = spec.ops.get("mul")
    B = spec.forms.get("form")
    pa = spec.maps.get("partial")
    ph = spec.maps.get("partial_hat")
    if mul is None or B is None or pa is None or ph is None:
        raise SpecError("needs op 'mul', form 'form', maps 'partial' and 'partial_hat'")
    pre = check_identities(spec, ("FORM-SYM", "FORM-NONDEG", "INV-ASSOC"),
                           witness_cap=witness_cap)
    if not all_pass(pre):
        raise VerificationError("input is not a symmetric invariant nondegenerate form", pre)
    n = spec.dim
    phi = LinMap(tuple(tuple(B.entries[i][j] for i in range(n)) for j in range(n)))
    ctx = Context(
        dims={"A": n, "V": n, "W": n},
        ops={"mul": mul},
        maps={"theta1": pa, "theta2": ph.transpose(), "phi": phi},
        families={"l1": ActionFamily.from_left(mul),
                  "r1": ActionFamily.from_right(mul),
                  "l2": ActionFamily.from_right(mul).dual(),
                  "r2": ActionFamily.from_left(mul).dual()},
    )
    return evaluate_identity(ctx, "REP-EQUIV", witness_cap=witness_cap), phi
