"""The two-product Yang-Baxter machinery: residual evaluation, triangular
bialgebras from antisymmetric solutions, O-operators and their semidirect
lifts, the solution/bilinear-form correspondence, and exhaustive grid search.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .linalg import LinMap, Tensor2, Tensor3, ZERO, invert_rows, sharp
from .model import (
    AlgebraSpec,
    Witness,
    BilinearForm,
    CoprodTable,
    MulTable,
    Report,
    SpecError,
    BudgetError,
    VerificationError,
    all_pass,
)
from .catalog import Context, check_identities, check_profile, evaluate_identity
from .constructions import NNRepresentation, coadjoint_nn, dual_nn_representation, semidirect_nn


@dataclass(frozen=True)
class OOperatorProblem:
    """A linear map T from a representation carrier into the algebra."""

    spec: AlgebraSpec
    rep: NNRepresentation
    T: LinMap

    def __post_init__(self):
        if self.T.rows != self.spec.dim or self.T.cols != self.rep.carrier_dim:
            raise SpecError("T must map the carrier into the algebra")

    def context(self) -> Context:
        return Context(
            dims={"A": self.spec.dim, "V": self.rep.carrier_dim},
            ops=self.spec.ops,
            maps={"T": self.T},
            families={"lprec": self.rep.lprec, "rprec": self.rep.rprec,
                      "lsucc": self.rep.lsucc, "rsucc": self.rep.rsucc},
        )


def check_o_operator(problem: OOperatorProblem, witness_cap: int = 16) -> list[Report]:
    """Both defining equations on all basis pairs of the carrier."""
    ctx = problem.context()
    return check_identities(ctx, ("O-OP-PREC", "O-OP-SUCC"), witness_cap=witness_cap)


def eval_nybe(spec: AlgebraSpec, r: Tensor2) -> Tensor3:
    """E(r) = r12>r13 + r13<r23 + r23 o r12; r solves the equation iff E(r) = 0."""
    prec, succ = spec.ops.get("prec"), spec.ops.get("succ")
    if prec is None or succ is None:
        raise SpecError("the Yang-Baxter residual needs ops 'prec' and 'succ'")
    n = spec.dim
    if r.dim != n:
        raise SpecError("tensor dimension differs from the algebra dimension")
    circ = prec.add(succ)
    out = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    items = list(r.nonzero())
    for (p, q), x in items:
        for (s, t), y in items:
            coeff = x * y
            row = succ.c[p][s]
            for a in range(n):
                if row[a] != 0:
                    out[a][q][t] += coeff * row[a]
            row = prec.c[q][t]
            for c in range(n):
                if row[c] != 0:
                    out[p][s][c] += coeff * row[c]
            row = circ.c[s][q]
            for b in range(n):
                if row[b] != 0:
                    out[p][b][t] += coeff * row[b]
    return Tensor3(out)


def nybe_report(spec: AlgebraSpec, r: Tensor2, witness_cap: int = 16) -> Report:
    """E(r) = 0 packaged as a report; witnesses are the nonzero coordinates."""
    residual = eval_nybe(spec, r)
    witnesses = []
    violations = 0
    for (i, j, k), v in residual.nonzero():
        violations += 1
        if len(witnesses) < witness_cap:
            witnesses.append(Witness((i, j, k), (v,)))
    return Report(identity="NYBE", violations=violations,
                  witnesses=tuple(witnesses), witness_cap=witness_cap)


def triangular_bialgebra(spec: AlgebraSpec, r: Tensor2, check: bool = True) -> AlgebraSpec:
    """Attach the coproducts induced by an antisymmetric solution r.

    coprec(x) = (id (x) L_circ(x) + R_succ(x) (x) id)(-r)
    cosucc(x) = (id (x) L_prec(x) + R_circ(x) (x) id)(r)
    """
    prec, succ = spec.ops["prec"], spec.ops["succ"]
    circ = prec.add(succ)
    n = spec.dim
    if check:
        if not r.is_antisymmetric():
            raise VerificationError("r is not antisymmetric")
        residual = eval_nybe(spec, r)
        if not residual.is_zero():
            err = VerificationError(
                f"r does not solve the Yang-Baxter equation (residual {residual!r})")
            err.residual = residual
            raise err
    dprec = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    dsucc = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for (a, j), v in r.nonzero():
        for k in range(n):
            rowo = circ.c[k][j]
            rowp = prec.c[k][j]
            for b in range(n):
                if rowo[b] != 0:
                    dprec[k][a][b] -= v * rowo[b]
                if rowp[b] != 0:
                    dsucc[k][a][b] += v * rowp[b]
    for (i, b), v in r.nonzero():
        for k in range(n):
            rows = succ.c[i][k]
            rowo = circ.c[i][k]
            for a in range(n):
                if rows[a] != 0:
                    dprec[k][a][b] -= v * rows[a]
                if rowo[a] != 0:
                    dsucc[k][a][b] += v * rowo[a]
    out = spec.with_members(coprods={**spec.coprods,
                                     "coprec": CoprodTable(dprec),
                                     "cosucc": CoprodTable(dsucc)})
    if check:
        reports = check_profile(out, "nn-bialgebra")
        if not all_pass(reports):
            raise VerificationError("triangular output failed the bialgebra profile", reports)
    return out


def oelda_test(spec: AlgebraSpec, r: Tensor2) -> tuple[bool, bool]:
    """(E(r) = 0, sharp(r) is an O-operator for the coadjoint representation).

    The two predicates are equivalent for antisymmetric r; disagreement would
    be an internal bug and raises.
    """
    if not r.is_antisymmetric():
        raise SpecError("r must be antisymmetric")
    solves = eval_nybe(spec, r).is_zero()
    coad = coadjoint_nn(spec, check=False)
    problem = OOperatorProblem(spec=spec, rep=coad, T=sharp(r))
    operator = all_pass(check_o_operator(problem))
    if solves != operator:
        raise VerificationError(
            f"equation predicate ({solves}) and operator predicate ({operator}) disagree")
    return solves, operator


def lift_o_operator(problem: OOperatorProblem, check: bool = True
                    ) -> tuple[AlgebraSpec, Tensor2]:
    """Embed T as an antisymmetric tensor on A + V* over the semidirect algebra
    built from the dual representation; E(r) vanishes there iff T is an
    O-operator."""
    if check:
        reports = problem.rep.check() + check_o_operator(problem)
        if not all_pass(reports):
            raise VerificationError("input is not an O-operator", reports)
    drep = dual_nn_representation(problem.rep, check=False)
    lifted = semidirect_nn(problem.spec, drep)
    n, m = problem.spec.dim, problem.rep.carrier_dim
    total = n + m
    ent = [[ZERO] * total for _ in range(total)]
    for i in range(m):
        for k in range(n):
            v = problem.T.entries[k][i]
            if v != 0:
                ent[n + i][k] += v
                ent[k][n + i] -= v
    r = Tensor2(ent)
    if check:
        residual = eval_nybe(lifted, r)
        if not residual.is_zero():
            err = VerificationError(
                f"lifted tensor does not solve the equation (residual {residual!r})")
            err.residual = residual
            raise err
    return lifted, r


def form_from_r(spec: AlgebraSpec, r: Tensor2) -> BilinearForm:
    """B(x, y) = <sharp(r)^-1 x, y>; needs r antisymmetric and nondegenerate."""
    if not r.is_antisymmetric():
        raise SpecError("r must be antisymmetric")
    try:
        inv = invert_rows(r.entries)
    except Exception as exc:
        raise VerificationError("r is degenerate") from exc
    return BilinearForm(inv)


def r_from_form(spec: AlgebraSpec, B: BilinearForm) -> Tensor2:
    """Inverse of form_from_r; needs B antisymmetric and nondegenerate."""
    if not B.is_antisymmetric():
        raise SpecError("form must be antisymmetric")
    try:
        inv = invert_rows(B.entries)
    except Exception as exc:
        raise VerificationError("form is degenerate") from exc
    return Tensor2(inv)


def search_nybe(spec: AlgebraSpec, grid, budget: int = 10 ** 6) -> list[Tensor2]:
    """All antisymmetric solutions with free entries drawn from the grid.

    Only the strictly-upper entries are free (antisymmetry is structural).
    Candidates and hence results are produced in lexicographic order of the
    free-entry tuples; refuses up front when the candidate count exceeds the
    budget.
    """
    n = spec.dim
    values = sorted({Fraction(v) if not isinstance(v, Fraction) else v for v in grid})
    if not values:
        raise SpecError("empty value grid")
    slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    candidates = len(values) ** len(slots)
    if candidates > budget:
        raise BudgetError(
            f"{candidates} candidates exceed the budget of {budget}", candidates)
    prec, succ = spec.ops.get("prec"), spec.ops.get("succ")
    if prec is None or succ is None:
        raise SpecError("search needs ops 'prec' and 'succ'")
    circ = prec.add(succ)

    def norm(v):
        return v.numerator if v.denominator == 1 else v

    def sparse_rows(table):
        return {(p, s): tuple((k, norm(v)) for k, v in enumerate(table.c[p][s]) if v != 0)
                for p in range(n) for s in range(n)
                if any(v != 0 for v in table.c[p][s])}

    succ_rows, prec_rows, circ_rows = (sparse_rows(t) for t in (succ, prec, circ))

    def solves(entries) -> bool:
        acc: dict = {}
        for (p, q), x in entries:
            for (s, t), y in entries:
                coeff = x * y
                row = succ_rows.get((p, s))
                if row:
                    for a, v in row:
                        key = (a, q, t)
                        acc[key] = acc.get(key, 0) + coeff * v
                row = prec_rows.get((q, t))
                if row:
                    for c, v in row:
                        key = (p, s, c)
                        acc[key] = acc.get(key, 0) + coeff * v
                row = circ_rows.get((s, q))
                if row:
                    for b, v in row:
                        key = (p, b, t)
                        acc[key] = acc.get(key, 0) + coeff * v
        return all(v == 0 for v in acc.values())

    norm_values = [norm(v) for v in values]
    hits: list[Tensor2] = []
    for assignment in product(norm_values, repeat=len(slots)):
        entries = []
        for (i, j), v in zip(slots, assignment):
            if v != 0:
                entries.append(((i, j), v))
                entries.append(((j, i), -v))
        if solves(entries):
            ent = [[ZERO] * n for _ in range(n)]
            for (i, j), v in zip(slots, assignment):
                ent[i][j] = Fraction(v)
                ent[j][i] = Fraction(-v)
            hits.append(Tensor2(ent))
    return hits
