"""Derived-structure pipelines: two-product algebras from differential
algebras, four-product splittings from O-operators, dendriform data and
quasi-Frobenius forms, and the capstone weight-0 differential bialgebra to
two-product bialgebra derivation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import LinMap, Vec, ZERO, basis_vec, invert_rows
from .model import (
    ActionFamily,
    AlgebraSpec,
    CoprodTable,
    MulTable,
    Report,
    SpecError,
    VerificationError,
    all_pass,
)
from .catalog import Context, _bv, _vb, check_identities, check_profile
from .constructions import NNRepresentation, pairing_form
from .ybe import OOperatorProblem, check_o_operator


def _require(reports: list[Report], what: str):
    if not all_pass(reports):
        raise VerificationError(f"{what} failed verification", reports)


def _col(m: LinMap, j: int) -> Vec:
    return tuple(m.entries[k][j] for k in range(m.rows))


# ---------------------------------------------------------------------------
# Gelfand-type constructions (weight 0 only)

def gelfand_tables(mul: MulTable, partial: LinMap) -> tuple[MulTable, MulTable]:
    """prec x y = x . partial(y) and succ x y = partial(x) . y as raw tables."""
    n = mul.dim
    prec = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    succ = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for m in range(n):
                pj = partial.entries[m][j]
                if pj != 0:
                    row = mul.c[i][m]
                    for k in range(n):
                        if row[k] != 0:
                            prec[i][j][k] += pj * row[k]
                pi = partial.entries[m][i]
                if pi != 0:
                    row = mul.c[m][j]
                    for k in range(n):
                        if row[k] != 0:
                            succ[i][j][k] += pi * row[k]
    return MulTable(prec), MulTable(succ)


def gelfand_nn(spec: AlgebraSpec, check: bool = True) -> AlgebraSpec:
    """Two-product algebra from a weight-0 differential algebra."""
    if spec.weight != 0:
        raise SpecError("this construction is defined for weight 0 only")
    mul, pa = spec.ops.get("mul"), spec.maps.get("partial")
    if mul is None or pa is None:
        raise SpecError("needs op 'mul' and map 'partial'")
    if check:
        _require(check_identities(spec, ("ASSOC", "DER")), "differential algebra input")
    prec, succ = gelfand_tables(mul, pa)
    out = AlgebraSpec(dim=spec.dim, ops={"prec": prec, "succ": succ})
    if check:
        _require(check_profile(out, "nn-algebra"), "derived two-product algebra")
    return out


def gelfand_dual(spec: AlgebraSpec, check: bool = True) -> AlgebraSpec:
    """Two coproducts from a weight-0 differential coalgebra:
    coprec = (id (x) partial_hat) coprod, cosucc = (partial_hat (x) id) coprod."""
    if spec.weight != 0:
        raise SpecError("this construction is defined for weight 0 only")
    cop, ph = spec.coprods.get("coprod"), spec.maps.get("partial_hat")
    if cop is None or ph is None:
        raise SpecError("needs coprod 'coprod' and map 'partial_hat'")
    if check:
        _require(check_identities(spec, ("COASSOC", "CODER")), "differential coalgebra input")
    n = spec.dim
    dprec = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    dsucc = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for k in range(n):
        plane = cop.d[k]
        for i in range(n):
            for j in range(n):
                v = plane[i][j]
                if v == 0:
                    continue
                for m in range(n):
                    if ph.entries[m][j] != 0:
                        dprec[k][i][m] += v * ph.entries[m][j]
                    if ph.entries[m][i] != 0:
                        dsucc[k][m][j] += v * ph.entries[m][i]
    out = AlgebraSpec(dim=n, coprods={"coprec": CoprodTable(dprec),
                                      "cosucc": CoprodTable(dsucc)})
    if check:
        _require(check_profile(out, "nn-coalgebra"), "derived two-coproduct structure")
    return out


# ---------------------------------------------------------------------------
# four-product splittings

@dataclass(frozen=True)
class PreNovikovSpec:
    """Four products whose pairwise sums form a two-product algebra."""

    dim: int
    lhd1: MulTable
    lhd2: MulTable
    rhd1: MulTable
    rhd2: MulTable

    def __post_init__(self):
        for t in (self.lhd1, self.lhd2, self.rhd1, self.rhd2):
            if t.dim != self.dim:
                raise SpecError("table dimension mismatch")

    def context(self) -> Context:
        return Context(dims={"A": self.dim},
                       ops={"lhd1": self.lhd1, "lhd2": self.lhd2,
                            "rhd1": self.rhd1, "rhd2": self.rhd2})

    def check(self, witness_cap: int = 16) -> list[Report]:
        return check_profile(self.context(), "pre-novikov", witness_cap=witness_cap)


def associated_nn(p: PreNovikovSpec, check: bool = True) -> AlgebraSpec:
    """prec = lhd1 + lhd2 and succ = rhd1 + rhd2."""
    if check:
        _require(p.check(), "four-product input")
    out = AlgebraSpec(dim=p.dim, ops={"prec": p.lhd1.add(p.lhd2),
                                      "succ": p.rhd1.add(p.rhd2)})
    if check:
        _require(check_profile(out, "nn-algebra"), "associated two-product algebra")
        _require(tautological_representation(p).check(), "tautological representation")
    return out


def tautological_representation(p: PreNovikovSpec) -> NNRepresentation:
    """(L_lhd1, R_lhd2, L_rhd1, R_rhd2) of the associated algebra on itself."""
    algebra = AlgebraSpec(dim=p.dim, ops={"prec": p.lhd1.add(p.lhd2),
                                          "succ": p.rhd1.add(p.rhd2)})
    return NNRepresentation(
        algebra=algebra,
        lprec=ActionFamily.from_left(p.lhd1),
        rprec=ActionFamily.from_right(p.lhd2),
        lsucc=ActionFamily.from_left(p.rhd1),
        rsucc=ActionFamily.from_right(p.rhd2),
    )


def pre_novikov_from_o_operator(problem: OOperatorProblem,
                                check: bool = True) -> PreNovikovSpec:
    """Four products on the carrier: u lhd1 v = lprec(Tu)v, u lhd2 v = rprec(Tv)u,
    u rhd1 v = lsucc(Tu)v, u rhd2 v = rsucc(Tv)u."""
    if check:
        _require(problem.rep.check() + check_o_operator(problem), "O-operator input")
    m = problem.rep.carrier_dim
    rep, T = problem.rep, problem.T
    lhd1 = [[[ZERO] * m for _ in range(m)] for _ in range(m)]
    lhd2 = [[[ZERO] * m for _ in range(m)] for _ in range(m)]
    rhd1 = [[[ZERO] * m for _ in range(m)] for _ in range(m)]
    rhd2 = [[[ZERO] * m for _ in range(m)] for _ in range(m)]
    for u in range(m):
        Tu = _col(T, u)
        for v in range(m):
            ev = basis_vec(v, m)
            eu = basis_vec(u, m)
            Tv = _col(T, v)
            lhd1[u][v] = list(rep.lprec.act(Tu, ev))
            lhd2[u][v] = list(rep.rprec.act(Tv, eu))
            rhd1[u][v] = list(rep.lsucc.act(Tu, ev))
            rhd2[u][v] = list(rep.rsucc.act(Tv, eu))
    out = PreNovikovSpec(dim=m, lhd1=MulTable(lhd1), lhd2=MulTable(lhd2),
                         rhd1=MulTable(rhd1), rhd2=MulTable(rhd2))
    if check:
        _require(out.check(), "derived four-product structure")
    return out


def pre_novikov_from_diff_dendriform(spec: AlgebraSpec,
                                     check: bool = True) -> PreNovikovSpec:
    """x lhd1 y = x succ_d D(y), x rhd1 y = D(x) succ_d y,
    x lhd2 y = x prec_d D(y), x rhd2 y = D(x) prec_d y."""
    pd, sd, D = spec.ops.get("prec_d"), spec.ops.get("succ_d"), spec.maps.get("D")
    if pd is None or sd is None or D is None:
        raise SpecError("needs ops 'prec_d', 'succ_d' and map 'D'")
    if check:
        _require(check_profile(spec, "differential-dendriform"), "dendriform input")
    n = spec.dim
    lhd1 = [[None] * n for _ in range(n)]
    lhd2 = [[None] * n for _ in range(n)]
    rhd1 = [[None] * n for _ in range(n)]
    rhd2 = [[None] * n for _ in range(n)]
    for i in range(n):
        di = _col(D, i)
        for j in range(n):
            dj = _col(D, j)
            lhd1[i][j] = list(_bv(sd, i, dj))
            rhd1[i][j] = list(_vb(sd, di, j))
            lhd2[i][j] = list(_bv(pd, i, dj))
            rhd2[i][j] = list(_vb(pd, di, j))
    out = PreNovikovSpec(dim=n, lhd1=MulTable(lhd1), lhd2=MulTable(lhd2),
                         rhd1=MulTable(rhd1), rhd2=MulTable(rhd2))
    if check:
        _require(out.check(), "derived four-product structure")
    return out


QF_CONTRACT = ("NN-1", "NN-2", "FORM-ANTISYM", "FORM-NONDEG", "QF")


def pre_novikov_from_quasi_frobenius(spec: AlgebraSpec,
                                     check: bool = True) -> PreNovikovSpec:
    """Solve B(x lhd1 y, -) = B(- circ x, y), B(x lhd2 y, -) = B(x, y succ -),
    B(x rhd1 y, -) = B(y, - prec x), B(x rhd2 y, -) = B(y circ -, x) using the
    nondegeneracy of the form (one exact linear solve per product and pair)."""
    prec, succ = spec.ops.get("prec"), spec.ops.get("succ")
    B = spec.forms.get("form")
    if prec is None or succ is None or B is None:
        raise SpecError("needs ops 'prec', 'succ' and form 'form'")
    if check:
        _require(check_identities(spec, QF_CONTRACT), "quasi-Frobenius input")
    n = spec.dim
    circ = prec.add(succ)
    binv_t = LinMap(invert_rows(B.entries)).transpose()

    def solve(phi: Vec) -> list:
        # w with sum_p w[p] B[p][k] = phi[k] for all k
        return list(binv_t.apply(phi))

    lhd1 = [[None] * n for _ in range(n)]
    lhd2 = [[None] * n for _ in range(n)]
    rhd1 = [[None] * n for _ in range(n)]
    rhd2 = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            phi1 = tuple(sum((circ.c[k][i][m] * B.entries[m][j] for m in range(n)), ZERO)
                         for k in range(n))
            phi2 = tuple(sum((succ.c[j][k][m] * B.entries[i][m] for m in range(n)), ZERO)
                         for k in range(n))
            phi3 = tuple(sum((prec.c[k][i][m] * B.entries[j][m] for m in range(n)), ZERO)
                         for k in range(n))
            phi4 = tuple(sum((circ.c[j][k][m] * B.entries[m][i] for m in range(n)), ZERO)
                         for k in range(n))
            lhd1[i][j] = solve(phi1)
            lhd2[i][j] = solve(phi2)
            rhd1[i][j] = solve(phi3)
            rhd2[i][j] = solve(phi4)
    out = PreNovikovSpec(dim=n, lhd1=MulTable(lhd1), lhd2=MulTable(lhd2),
                         rhd1=MulTable(rhd1), rhd2=MulTable(rhd2))
    if check:
        _require(out.check(), "derived four-product structure")
        if out.lhd1.add(out.lhd2) != prec or out.rhd1.add(out.rhd2) != succ:
            raise VerificationError("splitting does not recover the input products")
    return out


# ---------------------------------------------------------------------------
# the capstone derivation

DERIVE_PRECONDITIONS = ("THM-MAIN-COND-1", "THM-MAIN-COND-2")


def derive_nn_bialgebra(spec: AlgebraSpec, check: bool = True,
                        diagnostic: bool = False):
    """From a weight-0 differential bialgebra with the two sign-compatibility
    conditions, derive the two-product bialgebra:

    prec/succ from (mul, partial); coprec = (id (x) partial_hat) coprod and
    cosucc = (partial_hat (x) id) coprod.

    With diagnostic=True the output is built unconditionally and returned
    together with all precondition and output reports.
    """
    if spec.weight != 0:
        raise SpecError("this derivation is defined for weight 0 only")
    for name in ("mul",):
        if name not in spec.ops:
            raise SpecError("needs op 'mul'")
    if "coprod" not in spec.coprods:
        raise SpecError("needs coprod 'coprod'")
    for name in ("partial", "partial_hat"):
        if name not in spec.maps:
            raise SpecError(f"needs map {name!r}")
    pre_reports = check_profile(spec, "differential-asi-bialgebra")
    pre_reports += check_identities(spec, DERIVE_PRECONDITIONS)
    if not diagnostic and check and not all_pass(pre_reports):
        raise VerificationError("input fails the derivation preconditions", pre_reports)

    prec, succ = gelfand_tables(spec.ops["mul"], spec.maps["partial"])
    dual_side = gelfand_dual(
        AlgebraSpec(dim=spec.dim, coprods={"coprod": spec.coprods["coprod"]},
                    maps={"partial_hat": spec.maps["partial_hat"]}),
        check=False)
    out = AlgebraSpec(dim=spec.dim,
                      ops={"prec": prec, "succ": succ},
                      coprods={"coprec": dual_side.coprods["coprec"],
                               "cosucc": dual_side.coprods["cosucc"]})
    out_reports = check_profile(out, "nn-bialgebra")
    if diagnostic:
        return out, pre_reports + out_reports
    if check and not all_pass(out_reports):
        raise VerificationError("derived structure fails the bialgebra profile", out_reports)
    return out


def manin_via_differential(spec: AlgebraSpec, check: bool = True) -> AlgebraSpec:
    """The double algebra on A + A* built through the associative double:
    u prec v = u * Dv and u succ v = Du * v for the double's product and map,
    carrying the standard pairing form."""
    from .constructions import double_construction
    double = double_construction(spec, check=check)
    prec, succ = gelfand_tables(double.ops["mul"], double.maps["partial"])
    out = AlgebraSpec(dim=double.dim,
                      ops={"prec": prec, "succ": succ},
                      forms={"form": double.forms["form"]})
    if check:
        _require(check_identities(out, ("NN-1", "NN-2", "INV-NN")),
                 "double two-product algebra")
    return out
