"""Identity catalog and the generic basis-enumeration checker.

Every identity here is multilinear in its algebra arguments, so checking it
on all basis tuples is exhaustive; that one fact is what makes the whole
workbench sound.  Each catalog entry evaluates the defining equation of one
axiom on a basis tuple and returns the exact residual vector; an identity
holds iff every residual is zero.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Mapping, Sequence

from .linalg import (
    ZERO,
    BilinearForm,
    LinMap,
    Tensor2,
    Tensor3,
    Vec,
    basis_vec,
)
from .model import (
    ActionFamily,
    AlgebraSpec,
    CoprodTable,
    MulTable,
    Report,
    SpecError,
    Witness,
)

THREADS_ENV = "NOVALG_THREADS"

# members that can be synthesized from others when absent
_DERIVED_OPS = {
    "circ": ("prec", "succ"),
    "circA": ("precA", "succA"),
    "circB": ("precB", "succB"),
    "pnv_prec": ("lhd1", "lhd2"),
    "pnv_succ": ("rhd1", "rhd2"),
}
_DERIVED_COPRODS = {"cocirc": ("coprec", "cosucc")}
_DERIVED_FAMILIES = {
    "lcirc": ("lprec", "lsucc"),
    "rcirc": ("rprec", "rsucc"),
    "lcircA": ("lprecA", "lsuccA"),
    "rcircA": ("rprecA", "rsuccA"),
    "lcircB": ("lprecB", "lsuccB"),
    "rcircB": ("rprecB", "rsuccB"),
}

# op names that, when found in a spec file, are read as action cubes on a
# carrier of the same dimension
FAMILY_CUBE_NAMES = ("lprec", "rprec", "lsucc", "rsucc", "l", "r")


class Context:
    """Resolved members an identity is evaluated against.

    Holds one dimension per named space plus name-keyed members.  A binding
    renames required member names before lookup, e.g. {"mul": "prec"}.
    """

    def __init__(self, dims: Mapping[str, int], ops=None, coprods=None, maps=None,
                 forms=None, families=None, weight: Fraction = ZERO,
                 binding: Mapping[str, str] | None = None):
        self.dims = dict(dims)
        self.ops = dict(ops or {})
        self.coprods = dict(coprods or {})
        self.maps = dict(maps or {})
        self.forms = dict(forms or {})
        self.families = dict(families or {})
        self.weight = weight
        self.binding = dict(binding or {})
        self._memo: dict[tuple[str, str], object] = {}
        self._lmats: dict[tuple[str, int], LinMap] = {}
        self._rmats: dict[tuple[str, int], LinMap] = {}

    def rebound(self, binding: Mapping[str, str] | None) -> "Context":
        if not binding:
            return self
        ctx = Context(self.dims, self.ops, self.coprods, self.maps, self.forms,
                      self.families, self.weight, binding)
        return ctx

    def _bind(self, name: str) -> str:
        return self.binding.get(name, name)

    def op(self, name: str) -> MulTable:
        key = self._bind(name)
        if key in self.ops:
            return self.ops[key]
        if key in _DERIVED_OPS:
            memo = ("op", key)
            if memo not in self._memo:
                a, b = _DERIVED_OPS[key]
                self._memo[memo] = self.op(a).add(self.op(b))
            return self._memo[memo]
        raise SpecError(f"missing operation {key!r}")

    def coprod(self, name: str) -> CoprodTable:
        key = self._bind(name)
        if key in self.coprods:
            return self.coprods[key]
        if key in _DERIVED_COPRODS:
            memo = ("coprod", key)
            if memo not in self._memo:
                a, b = _DERIVED_COPRODS[key]
                self._memo[memo] = self.coprod(a).add(self.coprod(b))
            return self._memo[memo]
        raise SpecError(f"missing comultiplication {key!r}")

    def linmap(self, name: str) -> LinMap:
        key = self._bind(name)
        if key in self.maps:
            return self.maps[key]
        raise SpecError(f"missing linear map {key!r}")

    def form(self, name: str) -> BilinearForm:
        key = self._bind(name)
        if key in self.forms:
            return self.forms[key]
        raise SpecError(f"missing bilinear form {key!r}")

    def family(self, name: str) -> ActionFamily:
        key = self._bind(name)
        if key in self.families:
            return self.families[key]
        if key in _DERIVED_FAMILIES:
            memo = ("family", key)
            if memo not in self._memo:
                a, b = _DERIVED_FAMILIES[key]
                self._memo[memo] = self.family(a).add(self.family(b))
            return self._memo[memo]
        raise SpecError(f"missing action family {key!r}")

    def lmat(self, opname: str, i: int) -> LinMap:
        key = (self._bind(opname), i)
        if key not in self._lmats:
            self._lmats[key] = self.op(opname).left_matrix(i)
        return self._lmats[key]

    def rmat(self, opname: str, j: int) -> LinMap:
        key = (self._bind(opname), j)
        if key not in self._rmats:
            self._rmats[key] = self.op(opname).right_matrix(j)
        return self._rmats[key]


def context_for(spec: AlgebraSpec, binding: Mapping[str, str] | None = None) -> Context:
    families = {}
    for name in FAMILY_CUBE_NAMES:
        if name in spec.ops:
            families[name] = ActionFamily.from_cube(spec.ops[name])
    dims = {"A": spec.dim}
    if families:
        dims["V"] = spec.dim
    return Context(dims, spec.ops, spec.coprods, spec.maps, spec.forms,
                   families, spec.weight, binding)


# ---------------------------------------------------------------------------
# small evaluation helpers

def _col(m: LinMap, j: int) -> Vec:
    return tuple(m.entries[k][j] for k in range(m.rows))


def _vb(t: MulTable, u: Vec, j: int) -> Vec:
    """u * e_j"""
    n = t.dim
    out = [ZERO] * n
    for p, a in enumerate(u):
        if a == 0:
            continue
        row = t.c[p][j]
        for k in range(n):
            if row[k] != 0:
                out[k] += a * row[k]
    return tuple(out)


def _bv(t: MulTable, i: int, v: Vec) -> Vec:
    """e_i * v"""
    n = t.dim
    out = [ZERO] * n
    for q, b in enumerate(v):
        if b == 0:
            continue
        row = t.c[i][q]
        for k in range(n):
            if row[k] != 0:
                out[k] += b * row[k]
    return tuple(out)


def _sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def _addv(*vecs: Vec) -> Vec:
    out = list(vecs[0])
    for v in vecs[1:]:
        for i, a in enumerate(v):
            out[i] += a
    return tuple(out)


def _negv(u: Vec) -> Vec:
    return tuple(-a for a in u)


def _exp_left(cop: CoprodTable, t: Tensor2) -> Tensor3:
    """Apply the comultiplication to the first slot of a 2-tensor."""
    n = cop.dim
    out = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for c in range(n):
            v = t.entries[i][c]
            if v == 0:
                continue
            plane = cop.d[i]
            for a in range(n):
                for b in range(n):
                    if plane[a][b] != 0:
                        out[a][b][c] += v * plane[a][b]
    return Tensor3(out)


def _exp_right(cop: CoprodTable, t: Tensor2) -> Tensor3:
    """Apply the comultiplication to the second slot of a 2-tensor."""
    n = cop.dim
    out = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for j in range(n):
            v = t.entries[a][j]
            if v == 0:
                continue
            plane = cop.d[j]
            for b in range(n):
                for c in range(n):
                    if plane[b][c] != 0:
                        out[a][b][c] += v * plane[b][c]
    return Tensor3(out)


def _swap01(t: Tensor3) -> Tensor3:
    n = t.dim
    return Tensor3(tuple(tuple(tuple(t.entries[b][a][c] for c in range(n))
                               for b in range(n)) for a in range(n)))


# ---------------------------------------------------------------------------
# the catalog

@dataclass(frozen=True)
class Identity:
    ident: str
    spaces: tuple[str, ...]
    requires: tuple[str, ...]
    residual: Callable[[Context, tuple[int, ...]], tuple[Fraction, ...]]
    note: str = ""


CATALOG: dict[str, Identity] = {}
ALIASES: dict[str, str] = {
    "DER-LAMBDA": "DER",
    "CODER-LAMBDA": "CODER",
    "O-OP-1": "O-OP-PREC",
    "O-OP-2": "O-OP-SUCC",
}


def _register(ident, spaces, requires, note=""):
    def deco(fn):
        CATALOG[ident] = Identity(ident, tuple(spaces), tuple(requires), fn, note)
        return fn
    return deco


def resolve_identity(ident: str) -> Identity:
    key = ident.strip()
    key = ALIASES.get(key, key)
    if key not in CATALOG:
        raise SpecError(f"unknown identity {ident!r}; known: {', '.join(sorted(CATALOG))}")
    return CATALOG[key]


# -- associative / Novikov-type algebra axioms ------------------------------

@_register("ASSOC", ("A", "A", "A"), ("mul",))
def _assoc(ctx, idx):
    i, j, k = idx
    m = ctx.op("mul")
    return _sub(_vb(m, m.basis_product(i, j), k), _bv(m, i, m.basis_product(j, k)))


@_register("NOV-1", ("A", "A", "A"), ("mul",),
           note="left symmetry of associators")
def _nov1(ctx, idx):
    i, j, k = idx
    m = ctx.op("mul")
    t1 = _vb(m, m.basis_product(i, j), k)
    t2 = _bv(m, i, m.basis_product(j, k))
    t3 = _vb(m, m.basis_product(j, i), k)
    t4 = _bv(m, j, m.basis_product(i, k))
    return _addv(_sub(t1, t2), _negv(_sub(t3, t4)))


@_register("NOV-2", ("A", "A", "A"), ("mul",),
           note="right commutativity")
def _nov2(ctx, idx):
    i, j, k = idx
    m = ctx.op("mul")
    return _sub(_vb(m, m.basis_product(i, j), k), _vb(m, m.basis_product(i, k), j))


@_register("NN-1", ("A", "A", "A"), ("prec", "succ"))
def _nn1(ctx, idx):
    i, j, k = idx
    p, s = ctx.op("prec"), ctx.op("succ")
    return _sub(_vb(p, s.basis_product(i, j), k), _bv(s, i, p.basis_product(j, k)))


@_register("NN-2", ("A", "A", "A"), ("prec", "succ"))
def _nn2(ctx, idx):
    i, j, k = idx
    p, s, o = ctx.op("prec"), ctx.op("succ"), ctx.op("circ")
    return _sub(_vb(o, p.basis_product(i, j), k), _bv(o, i, s.basis_product(j, k)))


# -- derivations and admissibility ------------------------------------------

@_register("DER", ("A", "A"), ("mul", "partial"),
           note="weight is taken from the spec")
def _der(ctx, idx):
    i, j = idx
    m, pa, lam = ctx.op("mul"), ctx.linmap("partial"), ctx.weight
    pi, pj = _col(pa, i), _col(pa, j)
    res = pa.apply(m.basis_product(i, j))
    res = _sub(res, _vb(m, pi, j))
    res = _sub(res, _bv(m, i, pj))
    if lam != 0:
        res = _sub(res, tuple(lam * a for a in m.apply(pi, pj)))
    return res


@_register("CODER", ("A",), ("coprod", "partial_hat"))
def _coder(ctx, idx):
    (k,) = idx
    cop, ph, lam = ctx.coprod("coprod"), ctx.linmap("partial_hat"), ctx.weight
    lhs = cop.apply(_col(ph, k))
    t = cop.apply_basis(k)
    rhs = t.map_slot(ph, 0).add(t.map_slot(ph, 1))
    if lam != 0:
        rhs = rhs.add(t.map_slot(ph, 0).map_slot(ph, 1).scale(lam))
    return lhs.sub(rhs).flatten()


@_register("ADM-DA-1", ("A", "A"), ("mul", "partial", "partial_hat"))
def _admda1(ctx, idx):
    i, j = idx
    m, pa, ph, lam = ctx.op("mul"), ctx.linmap("partial"), ctx.linmap("partial_hat"), ctx.weight
    xpy = _bv(m, i, _col(pa, j))
    res = _vb(m, _col(ph, i), j)
    res = _sub(res, xpy)
    res = _sub(res, ph.apply(m.basis_product(i, j)))
    if lam != 0:
        res = _sub(res, tuple(lam * a for a in ph.apply(xpy)))
    return res


@_register("ADM-DA-2", ("A", "A"), ("mul", "partial", "partial_hat"))
def _admda2(ctx, idx):
    i, j = idx
    m, pa, ph, lam = ctx.op("mul"), ctx.linmap("partial"), ctx.linmap("partial_hat"), ctx.weight
    pxy = _vb(m, _col(pa, i), j)
    res = _bv(m, i, _col(ph, j))
    res = _sub(res, pxy)
    res = _sub(res, ph.apply(m.basis_product(i, j)))
    if lam != 0:
        res = _sub(res, tuple(lam * a for a in ph.apply(pxy)))
    return res


@_register("ADM-DCA-1", ("A",), ("coprod", "partial", "partial_hat"))
def _admdca1(ctx, idx):
    (k,) = idx
    cop, pa, ph, lam = ctx.coprod("coprod"), ctx.linmap("partial"), ctx.linmap("partial_hat"), ctx.weight
    t = cop.apply_basis(k)
    tp = cop.apply(_col(pa, k))
    res = t.map_slot(pa, 0).sub(t.map_slot(ph, 1)).sub(tp)
    if lam != 0:
        res = res.sub(tp.map_slot(ph, 1).scale(lam))
    return res.flatten()


@_register("ADM-DCA-2", ("A",), ("coprod", "partial", "partial_hat"))
def _admdca2(ctx, idx):
    (k,) = idx
    cop, pa, ph, lam = ctx.coprod("coprod"), ctx.linmap("partial"), ctx.linmap("partial_hat"), ctx.weight
    t = cop.apply_basis(k)
    tp = cop.apply(_col(pa, k))
    res = t.map_slot(pa, 1).sub(t.map_slot(ph, 0)).sub(tp)
    if lam != 0:
        res = res.sub(tp.map_slot(ph, 0).scale(lam))
    return res.flatten()


# -- coalgebra axioms --------------------------------------------------------

@_register("COASSOC", ("A",), ("coprod",))
def _coassoc(ctx, idx):
    (k,) = idx
    cop = ctx.coprod("coprod")
    t = cop.apply_basis(k)
    return _exp_left(cop, t).sub(_exp_right(cop, t)).flatten()


@_register("NOV-CO-1", ("A",), ("coprod",))
def _novco1(ctx, idx):
    (k,) = idx
    cop = ctx.coprod("coprod")
    t = cop.apply_basis(k)
    lhs = _exp_left(cop, t)
    rhs = _swap01(_exp_right(cop, t.sigma()))
    return lhs.sub(rhs).flatten()


@_register("NOV-CO-2", ("A",), ("coprod",))
def _novco2(ctx, idx):
    (k,) = idx
    cop = ctx.coprod("coprod")
    t = cop.apply_basis(k)
    right = _exp_right(cop, t)
    left = _exp_left(cop, t)
    return right.sub(_swap01(right)).sub(left).add(_swap01(left)).flatten()


@_register("NN-CO-1", ("A",), ("coprec", "cosucc"))
def _nnco1(ctx, idx):
    (k,) = idx
    cp, cs = ctx.coprod("coprec"), ctx.coprod("cosucc")
    return _exp_left(cs, cp.apply_basis(k)).sub(_exp_right(cp, cs.apply_basis(k))).flatten()


@_register("NN-CO-2", ("A",), ("coprec", "cosucc"))
def _nnco2(ctx, idx):
    (k,) = idx
    cp, cs, co = ctx.coprod("coprec"), ctx.coprod("cosucc"), ctx.coprod("cocirc")
    t = co.apply_basis(k)
    return _exp_left(cp, t).sub(_exp_right(cs, t)).flatten()


# -- bialgebra compatibilities ----------------------------------------------

@_register("NN-BI-1", ("A", "A"), ("prec", "succ", "coprec", "cosucc"))
def _nnbi1(ctx, idx):
    i, j = idx
    prec = ctx.op("prec")
    cp, co = ctx.coprod("coprec"), ctx.coprod("cocirc")
    lhs = cp.apply(prec.basis_product(i, j))
    rhs = cp.apply_basis(i).map_slot(ctx.rmat("prec", j), 0)
    rhs = rhs.add(co.apply_basis(j).map_slot(ctx.lmat("circ", i), 1))
    return lhs.sub(rhs).flatten()


@_register("NN-BI-2", ("A", "A"), ("prec", "succ", "coprec", "cosucc"))
def _nnbi2(ctx, idx):
    i, j = idx
    succ = ctx.op("succ")
    cs, co = ctx.coprod("cosucc"), ctx.coprod("cocirc")
    lhs = cs.apply(succ.basis_product(i, j))
    rhs = co.apply_basis(i).map_slot(ctx.rmat("circ", j), 0)
    rhs = rhs.add(cs.apply_basis(j).map_slot(ctx.lmat("succ", i), 1))
    return lhs.sub(rhs).flatten()


@_register("NN-BI-3", ("A", "A"), ("prec", "succ", "coprec", "cosucc"))
def _nnbi3(ctx, idx):
    i, j = idx
    co = ctx.coprod("cocirc")
    tx, ty = co.apply_basis(i), co.apply_basis(j)
    res = tx.map_slot(ctx.rmat("prec", j), 1)
    res = res.add(ty.map_slot(ctx.rmat("prec", i), 1).sigma())
    res = res.sub(tx.map_slot(ctx.lmat("succ", j), 0))
    res = res.sub(ty.map_slot(ctx.lmat("succ", i), 0).sigma())
    return res.flatten()


@_register("NN-BI-4", ("A", "A"), ("prec", "succ", "coprec", "cosucc"))
def _nnbi4(ctx, idx):
    i, j = idx
    cp, cs = ctx.coprod("coprec"), ctx.coprod("cosucc")
    res = cp.apply_basis(i).map_slot(ctx.lmat("circ", j), 0)
    res = res.add(cp.apply_basis(j).map_slot(ctx.lmat("circ", i), 0).sigma())
    res = res.sub(cs.apply_basis(i).map_slot(ctx.rmat("circ", j), 1))
    res = res.sub(cs.apply_basis(j).map_slot(ctx.rmat("circ", i), 1).sigma())
    return res.flatten()


@_register("NOV-BI-1", ("A", "A"), ("mul", "coprod"))
def _novbi1(ctx, idx):
    i, j = idx
    m, cop = ctx.op("mul"), ctx.coprod("coprod")
    ty = cop.apply_basis(j)
    lhs = cop.apply(m.basis_product(i, j))
    rhs = cop.apply_basis(i).map_slot(ctx.rmat("mul", j), 0)
    rhs = rhs.add(ty.add(ty.sigma()).map_slot(ctx.lmat("mul", i), 1))
    return lhs.sub(rhs).flatten()


def _lo(ctx, i):
    return ctx.lmat("mul", i).add(ctx.rmat("mul", i))


@_register("NOV-BI-2", ("A", "A"), ("mul", "coprod"))
def _novbi2(ctx, idx):
    i, j = idx
    cop = ctx.coprod("coprod")
    tx, ty = cop.apply_basis(i), cop.apply_basis(j)
    loi, loj = _lo(ctx, i), _lo(ctx, j)
    res = ty.map_slot(loi, 0).sub(ty.sigma().map_slot(loi, 1))
    res = res.sub(tx.map_slot(loj, 0)).add(tx.sigma().map_slot(loj, 1))
    return res.flatten()


@_register("NOV-BI-3", ("A", "A"), ("mul", "coprod"),
           note="symmetrized reading; the literal variant is NOV-BI-3-literal")
def _novbi3(ctx, idx):
    i, j = idx
    cop = ctx.coprod("coprod")
    tx, ty = cop.apply_basis(i), cop.apply_basis(j)
    sx, sy = tx.add(tx.sigma()), ty.add(ty.sigma())
    ri, rj = ctx.rmat("mul", i), ctx.rmat("mul", j)
    res = sy.map_slot(ri, 1).sub(sy.map_slot(ri, 0))
    res = res.sub(sx.map_slot(rj, 1)).add(sx.map_slot(rj, 0))
    return res.flatten()


@_register("NOV-BI-3-literal", ("A", "A"), ("mul", "coprod"),
           note="right side read as a tensor product; the sides then live in "
                "different tensor powers, so the identity holds only when both vanish")
def _novbi3_literal(ctx, idx):
    i, j = idx
    cop = ctx.coprod("coprod")
    tx, ty = cop.apply_basis(i), cop.apply_basis(j)
    sy = ty.add(ty.sigma())
    ri, rj = ctx.rmat("mul", i), ctx.rmat("mul", j)
    lhs = sy.map_slot(ri, 1).sub(sy.map_slot(ri, 0))
    q = tx.map_slot(rj, 1).sub(tx.map_slot(rj, 0))
    stx = tx.sigma()
    rhs4 = tuple(q.entries[a][b] * stx.entries[c][d]
                 for a in range(q.dim) for b in range(q.dim)
                 for c in range(q.dim) for d in range(q.dim))
    return lhs.flatten() + rhs4


@_register("ASI-1", ("A", "A"), ("mul", "coprod"))
def _asi1(ctx, idx):
    i, j = idx
    m, cop = ctx.op("mul"), ctx.coprod("coprod")
    lhs = cop.apply(m.basis_product(i, j))
    rhs = cop.apply_basis(i).map_slot(ctx.rmat("mul", j), 0)
    rhs = rhs.add(cop.apply_basis(j).map_slot(ctx.lmat("mul", i), 1))
    return lhs.sub(rhs).flatten()


@_register("ASI-2", ("A", "A"), ("mul", "coprod"))
def _asi2(ctx, idx):
    i, j = idx
    cop = ctx.coprod("coprod")
    tx, ty = cop.apply_basis(i), cop.apply_basis(j)
    lhs = ty.map_slot(ctx.lmat("mul", i), 0).sub(ty.map_slot(ctx.rmat("mul", i), 1))
    rhs = tx.map_slot(ctx.rmat("mul", j), 1).sub(tx.map_slot(ctx.lmat("mul", j), 0)).sigma()
    return lhs.sub(rhs).flatten()


# -- dendriform and pre-Novikov ---------------------------------------------

@_register("DEND-1", ("A", "A", "A"), ("prec_d", "succ_d"))
def _dend1(ctx, idx):
    i, j, k = idx
    pd, sd = ctx.op("prec_d"), ctx.op("succ_d")
    res = _vb(pd, pd.basis_product(i, j), k)
    res = _sub(res, _bv(pd, i, pd.basis_product(j, k)))
    res = _sub(res, _bv(pd, i, sd.basis_product(j, k)))
    return res


@_register("DEND-2", ("A", "A", "A"), ("prec_d", "succ_d"))
def _dend2(ctx, idx):
    i, j, k = idx
    pd, sd = ctx.op("prec_d"), ctx.op("succ_d")
    return _sub(_vb(pd, sd.basis_product(i, j), k), _bv(sd, i, pd.basis_product(j, k)))


@_register("DEND-3", ("A", "A", "A"), ("prec_d", "succ_d"))
def _dend3(ctx, idx):
    i, j, k = idx
    pd, sd = ctx.op("prec_d"), ctx.op("succ_d")
    res = _addv(_vb(sd, pd.basis_product(i, j), k), _vb(sd, sd.basis_product(i, j), k))
    return _sub(res, _bv(sd, i, sd.basis_product(j, k)))


@_register("DDEND", ("A", "A"), ("prec_d", "succ_d", "D"),
           note="weight-0 compatibility of the map D with both products")
def _ddend(ctx, idx):
    i, j = idx
    pd, sd, D = ctx.op("prec_d"), ctx.op("succ_d"), ctx.linmap("D")
    di, dj = _col(D, i), _col(D, j)
    r1 = D.apply(pd.basis_product(i, j))
    r1 = _sub(r1, _vb(pd, di, j))
    r1 = _sub(r1, _bv(pd, i, dj))
    r2 = D.apply(sd.basis_product(i, j))
    r2 = _sub(r2, _vb(sd, di, j))
    r2 = _sub(r2, _bv(sd, i, dj))
    return r1 + r2


_PNV_REQ = ("lhd1", "lhd2", "rhd1", "rhd2")


@_register("PNV-1", ("A", "A", "A"), _PNV_REQ)
def _pnv1(ctx, idx):
    i, j, k = idx
    l1, r1 = ctx.op("lhd1"), ctx.op("rhd1")
    su = ctx.op("pnv_succ")
    return _sub(_vb(l1, su.basis_product(i, j), k), _bv(r1, i, l1.basis_product(j, k)))


@_register("PNV-2", ("A", "A", "A"), _PNV_REQ)
def _pnv2(ctx, idx):
    i, j, k = idx
    l2, r1 = ctx.op("lhd2"), ctx.op("rhd1")
    return _sub(_vb(l2, r1.basis_product(i, j), k), _bv(r1, i, l2.basis_product(j, k)))


@_register("PNV-3", ("A", "A", "A"), _PNV_REQ)
def _pnv3(ctx, idx):
    i, j, k = idx
    l2, r2 = ctx.op("lhd2"), ctx.op("rhd2")
    pr = ctx.op("pnv_prec")
    return _sub(_vb(l2, r2.basis_product(i, j), k), _bv(r2, i, pr.basis_product(j, k)))


@_register("PNV-4", ("A", "A", "A"), _PNV_REQ)
def _pnv4(ctx, idx):
    i, j, k = idx
    l1, r1 = ctx.op("lhd1"), ctx.op("rhd1")
    u = ctx.op("pnv_prec").basis_product(i, j)
    w = r1.basis_product(j, k)
    res = _addv(_vb(l1, u, k), _vb(r1, u, k))
    return _sub(res, _addv(_bv(l1, i, w), _bv(r1, i, w)))


@_register("PNV-5", ("A", "A", "A"), _PNV_REQ)
def _pnv5(ctx, idx):
    i, j, k = idx
    l1, l2, r1, r2 = (ctx.op("lhd1"), ctx.op("lhd2"), ctx.op("rhd1"), ctx.op("rhd2"))
    u = l1.basis_product(i, j)
    w = r2.basis_product(j, k)
    res = _addv(_vb(l2, u, k), _vb(r2, u, k))
    return _sub(res, _addv(_bv(l1, i, w), _bv(r1, i, w)))


@_register("PNV-6", ("A", "A", "A"), _PNV_REQ)
def _pnv6(ctx, idx):
    i, j, k = idx
    l2, r2 = ctx.op("lhd2"), ctx.op("rhd2")
    u = l2.basis_product(i, j)
    w = ctx.op("pnv_succ").basis_product(j, k)
    res = _addv(_vb(l2, u, k), _vb(r2, u, k))
    return _sub(res, _addv(_bv(l2, i, w), _bv(r2, i, w)))


# -- representations ----------------------------------------------------------

_NNREP_REQ = ("prec", "succ", "lprec", "rprec", "lsucc", "rsucc")


def _bvec(ctx, space, i):
    return basis_vec(i, ctx.dims[space])


@_register("NN-REP-1", ("A", "A", "V"), _NNREP_REQ)
def _rep1(ctx, idx):
    i, j, v = idx
    lp, ls = ctx.family("lprec"), ctx.family("lsucc")
    ev = _bvec(ctx, "V", v)
    lhs = lp.act(ctx.op("succ").basis_product(i, j), ev)
    return _sub(lhs, ls.mats[i].apply(lp.mats[j].apply(ev)))


@_register("NN-REP-2", ("A", "A", "V"), _NNREP_REQ)
def _rep2(ctx, idx):
    i, j, v = idx
    rp, ls = ctx.family("rprec"), ctx.family("lsucc")
    ev = _bvec(ctx, "V", v)
    return _sub(rp.mats[i].apply(ls.mats[j].apply(ev)),
                ls.mats[j].apply(rp.mats[i].apply(ev)))


@_register("NN-REP-3", ("A", "A", "V"), _NNREP_REQ)
def _rep3(ctx, idx):
    i, j, v = idx
    rp, rs = ctx.family("rprec"), ctx.family("rsucc")
    ev = _bvec(ctx, "V", v)
    lhs = rp.mats[i].apply(rs.mats[j].apply(ev))
    return _sub(lhs, rs.act(ctx.op("prec").basis_product(j, i), ev))


@_register("NN-REP-4", ("A", "A", "V"), _NNREP_REQ)
def _rep4(ctx, idx):
    i, j, v = idx
    lo, ls = ctx.family("lcirc"), ctx.family("lsucc")
    ev = _bvec(ctx, "V", v)
    lhs = lo.act(ctx.op("prec").basis_product(i, j), ev)
    return _sub(lhs, lo.mats[i].apply(ls.mats[j].apply(ev)))


@_register("NN-REP-5", ("A", "A", "V"), _NNREP_REQ)
def _rep5(ctx, idx):
    i, j, v = idx
    ro, lp, lo, rs = (ctx.family("rcirc"), ctx.family("lprec"),
                      ctx.family("lcirc"), ctx.family("rsucc"))
    ev = _bvec(ctx, "V", v)
    return _sub(ro.mats[i].apply(lp.mats[j].apply(ev)),
                lo.mats[j].apply(rs.mats[i].apply(ev)))


@_register("NN-REP-6", ("A", "A", "V"), _NNREP_REQ)
def _rep6(ctx, idx):
    i, j, v = idx
    ro, rp = ctx.family("rcirc"), ctx.family("rprec")
    ev = _bvec(ctx, "V", v)
    lhs = ro.mats[i].apply(rp.mats[j].apply(ev))
    return _sub(lhs, ro.act(ctx.op("succ").basis_product(j, i), ev))


@_register("ASSOC-REP", ("A", "A", "V"), ("mul", "l", "r"),
           note="all three module equations stacked")
def _assocrep(ctx, idx):
    i, j, v = idx
    m = ctx.op("mul")
    l, r = ctx.family("l"), ctx.family("r")
    ev = _bvec(ctx, "V", v)
    xy = m.basis_product(i, j)
    r1 = _sub(l.act(xy, ev), l.mats[i].apply(l.mats[j].apply(ev)))
    r2 = _sub(r.act(xy, ev), r.mats[j].apply(r.mats[i].apply(ev)))
    r3 = _sub(l.mats[i].apply(r.mats[j].apply(ev)),
              r.mats[j].apply(l.mats[i].apply(ev)))
    return r1 + r2 + r3


def _da_rep(ctx, famname, i, v):
    fam = ctx.family(famname)
    theta, pa, lam = ctx.linmap("theta"), ctx.linmap("partial"), ctx.weight
    ev = _bvec(ctx, "V", v)
    px = _col(pa, i)
    res = theta.apply(fam.mats[i].apply(ev))
    res = _sub(res, fam.act(px, ev))
    res = _sub(res, fam.mats[i].apply(theta.apply(ev)))
    if lam != 0:
        res = _sub(res, tuple(lam * a for a in fam.act(px, theta.apply(ev))))
    return res


@_register("DA-REP-1", ("A", "V"), ("l", "partial", "theta"))
def _darep1(ctx, idx):
    i, v = idx
    return _da_rep(ctx, "l", i, v)


@_register("DA-REP-2", ("A", "V"), ("r", "partial", "theta"))
def _darep2(ctx, idx):
    i, v = idx
    return _da_rep(ctx, "r", i, v)


def _da_rep_dual(ctx, famname, i, v):
    fam = ctx.family(famname)
    theta, pa, lam = ctx.linmap("theta"), ctx.linmap("partial"), ctx.weight
    ev = _bvec(ctx, "V", v)
    px = _col(pa, i)
    res = fam.mats[i].apply(theta.apply(ev))
    res = _sub(res, fam.act(px, ev))
    res = _sub(res, theta.apply(fam.mats[i].apply(ev)))
    if lam != 0:
        res = _sub(res, tuple(lam * a for a in theta.apply(fam.act(px, ev))))
    return res


@_register("DA-REP-DUAL-1", ("A", "V"), ("r", "partial", "theta"))
def _darepdual1(ctx, idx):
    i, v = idx
    return _da_rep_dual(ctx, "r", i, v)


@_register("DA-REP-DUAL-2", ("A", "V"), ("l", "partial", "theta"))
def _darepdual2(ctx, idx):
    i, v = idx
    return _da_rep_dual(ctx, "l", i, v)


@_register("REP-EQUIV", ("A", "V"),
           ("l1", "r1", "theta1", "l2", "r2", "theta2", "phi"),
           note="intertwining of two differential-algebra representations")
def _repequiv(ctx, idx):
    i, v = idx
    l1, r1 = ctx.family("l1"), ctx.family("r1")
    l2, r2 = ctx.family("l2"), ctx.family("r2")
    t1, t2, phi = ctx.linmap("theta1"), ctx.linmap("theta2"), ctx.linmap("phi")
    ev = _bvec(ctx, "V", v)
    ra = _sub(phi.apply(l1.mats[i].apply(ev)), l2.mats[i].apply(phi.apply(ev)))
    rb = _sub(phi.apply(r1.mats[i].apply(ev)), r2.mats[i].apply(phi.apply(ev)))
    rc = _sub(phi.apply(t1.apply(ev)), t2.apply(phi.apply(ev)))
    return ra + rb + rc


# -- matched pairs ------------------------------------------------------------

_MPNN_REQ = ("precA", "succA", "precB", "succB",
             "lprecA", "rprecA", "lsuccA", "rsuccA",
             "lprecB", "rprecB", "lsuccB", "rsuccB")


def _mp(ctx, name):
    return ctx.family(name)


@_register("MP-NN-1", ("B", "A", "A"), _MPNN_REQ)
def _mpnn1(ctx, idx):
    a, x, y = idx
    lsB, lpB = _mp(ctx, "lsuccB"), _mp(ctx, "lprecB")
    rsA = _mp(ctx, "rsuccA")
    pA = ctx.op("precA")
    ey = _bvec(ctx, "A", y)
    lhs = lsB.act_basis(a, pA.basis_product(x, y))
    rhs = _vb(pA, _col(lsB.mats[a], x), y)
    rhs = _addv(rhs, lpB.act(_col(rsA.mats[x], a), ey))
    return _sub(lhs, rhs)


@_register("MP-NN-2", ("A", "B", "B"), _MPNN_REQ)
def _mpnn2(ctx, idx):
    x, a, b = idx
    lsA, lpA = _mp(ctx, "lsuccA"), _mp(ctx, "lprecA")
    rsB = _mp(ctx, "rsuccB")
    pB = ctx.op("precB")
    eb = _bvec(ctx, "B", b)
    lhs = lsA.act_basis(x, pB.basis_product(a, b))
    rhs = _vb(pB, _col(lsA.mats[x], a), b)
    rhs = _addv(rhs, lpA.act(_col(rsB.mats[a], x), eb))
    return _sub(lhs, rhs)


@_register("MP-NN-3", ("B", "A", "A"), _MPNN_REQ)
def _mpnn3(ctx, idx):
    a, x, y = idx
    rpB, rsB = _mp(ctx, "rprecB"), _mp(ctx, "rsuccB")
    lpA = _mp(ctx, "lprecA")
    sA = ctx.op("succA")
    ex = _bvec(ctx, "A", x)
    lhs = rpB.act_basis(a, sA.basis_product(x, y))
    rhs = _bv(sA, x, _col(rpB.mats[a], y))
    rhs = _addv(rhs, rsB.act(_col(lpA.mats[y], a), ex))
    return _sub(lhs, rhs)


@_register("MP-NN-4", ("A", "B", "B"), _MPNN_REQ)
def _mpnn4(ctx, idx):
    x, a, b = idx
    rpA, rsA = _mp(ctx, "rprecA"), _mp(ctx, "rsuccA")
    lpB = _mp(ctx, "lprecB")
    sB = ctx.op("succB")
    ea = _bvec(ctx, "B", a)
    lhs = rpA.act_basis(x, sB.basis_product(a, b))
    rhs = _bv(sB, a, _col(rpA.mats[x], b))
    rhs = _addv(rhs, rsA.act(_col(lpB.mats[b], x), ea))
    return _sub(lhs, rhs)


@_register("MP-NN-5", ("B", "A", "A"), _MPNN_REQ)
def _mpnn5(ctx, idx):
    a, x, y = idx
    rsB, lpB = _mp(ctx, "rsuccB"), _mp(ctx, "lprecB")
    lsA, rpA = _mp(ctx, "lsuccA"), _mp(ctx, "rprecA")
    pA, sA = ctx.op("precA"), ctx.op("succA")
    ex, ey = _bvec(ctx, "A", x), _bvec(ctx, "A", y)
    lhs = _vb(pA, _col(rsB.mats[a], x), y)
    lhs = _addv(lhs, lpB.act(_col(lsA.mats[x], a), ey))
    rhs = _bv(sA, x, _col(lpB.mats[a], y))
    rhs = _addv(rhs, rsB.act(_col(rpA.mats[y], a), ex))
    return _sub(lhs, rhs)


@_register("MP-NN-6", ("A", "B", "B"), _MPNN_REQ)
def _mpnn6(ctx, idx):
    x, a, b = idx
    rsA, lpA = _mp(ctx, "rsuccA"), _mp(ctx, "lprecA")
    lsB, rpB = _mp(ctx, "lsuccB"), _mp(ctx, "rprecB")
    pB, sB = ctx.op("precB"), ctx.op("succB")
    ea, eb = _bvec(ctx, "B", a), _bvec(ctx, "B", b)
    lhs = _vb(pB, _col(rsA.mats[x], a), b)
    lhs = _addv(lhs, lpA.act(_col(lsB.mats[a], x), eb))
    rhs = _bv(sB, a, _col(lpA.mats[x], b))
    rhs = _addv(rhs, rsA.act(_col(rpB.mats[b], x), ea))
    return _sub(lhs, rhs)


@_register("MP-NN-7", ("B", "A", "A"), _MPNN_REQ)
def _mpnn7(ctx, idx):
    a, x, y = idx
    loB, lpB = _mp(ctx, "lcircB"), _mp(ctx, "lprecB")
    rpA = _mp(ctx, "rprecA")
    sA, oA = ctx.op("succA"), ctx.op("circA")
    ey = _bvec(ctx, "A", y)
    lhs = loB.act_basis(a, sA.basis_product(x, y))
    rhs = _vb(oA, _col(lpB.mats[a], x), y)
    rhs = _addv(rhs, loB.act(_col(rpA.mats[x], a), ey))
    return _sub(lhs, rhs)


@_register("MP-NN-8", ("A", "B", "B"), _MPNN_REQ)
def _mpnn8(ctx, idx):
    x, a, b = idx
    loA, lpA = _mp(ctx, "lcircA"), _mp(ctx, "lprecA")
    rpB = _mp(ctx, "rprecB")
    sB, oB = ctx.op("succB"), ctx.op("circB")
    eb = _bvec(ctx, "B", b)
    lhs = loA.act_basis(x, sB.basis_product(a, b))
    rhs = _vb(oB, _col(lpA.mats[x], a), b)
    rhs = _addv(rhs, loA.act(_col(rpB.mats[a], x), eb))
    return _sub(lhs, rhs)


@_register("MP-NN-9", ("B", "A", "A"), _MPNN_REQ)
def _mpnn9(ctx, idx):
    a, x, y = idx
    roB, rsB = _mp(ctx, "rcircB"), _mp(ctx, "rsuccB")
    lsA = _mp(ctx, "lsuccA")
    pA, oA = ctx.op("precA"), ctx.op("circA")
    ex = _bvec(ctx, "A", x)
    lhs = roB.act_basis(a, pA.basis_product(x, y))
    rhs = _bv(oA, x, _col(rsB.mats[a], y))
    rhs = _addv(rhs, roB.act(_col(lsA.mats[y], a), ex))
    return _sub(lhs, rhs)


@_register("MP-NN-10", ("A", "B", "B"), _MPNN_REQ)
def _mpnn10(ctx, idx):
    x, a, b = idx
    roA, rsA = _mp(ctx, "rcircA"), _mp(ctx, "rsuccA")
    lsB = _mp(ctx, "lsuccB")
    pB, oB = ctx.op("precB"), ctx.op("circB")
    ea = _bvec(ctx, "B", a)
    lhs = roA.act_basis(x, pB.basis_product(a, b))
    rhs = _bv(oB, a, _col(rsA.mats[x], b))
    rhs = _addv(rhs, roA.act(_col(lsB.mats[b], x), ea))
    return _sub(lhs, rhs)


@_register("MP-NN-11", ("B", "A", "A"), _MPNN_REQ)
def _mpnn11(ctx, idx):
    a, x, y = idx
    rpB, loB = _mp(ctx, "rprecB"), _mp(ctx, "lcircB")
    lpA = _mp(ctx, "lprecA")
    lsB, roB = _mp(ctx, "lsuccB"), _mp(ctx, "rcircB")
    rsA = _mp(ctx, "rsuccA")
    oA = ctx.op("circA")
    ex, ey = _bvec(ctx, "A", x), _bvec(ctx, "A", y)
    lhs = _vb(oA, _col(rpB.mats[a], x), y)
    lhs = _addv(lhs, loB.act(_col(lpA.mats[x], a), ey))
    rhs = _bv(oA, x, _col(lsB.mats[a], y))
    rhs = _addv(rhs, roB.act(_col(rsA.mats[y], a), ex))
    return _sub(lhs, rhs)


@_register("MP-NN-12", ("A", "B", "B"), _MPNN_REQ)
def _mpnn12(ctx, idx):
    x, a, b = idx
    rpA, loA = _mp(ctx, "rprecA"), _mp(ctx, "lcircA")
    lpB = _mp(ctx, "lprecB")
    lsA, roA = _mp(ctx, "lsuccA"), _mp(ctx, "rcircA")
    rsB = _mp(ctx, "rsuccB")
    oB = ctx.op("circB")
    ea, eb = _bvec(ctx, "B", a), _bvec(ctx, "B", b)
    lhs = _vb(oB, _col(rpA.mats[x], a), b)
    lhs = _addv(lhs, loA.act(_col(lpB.mats[a], x), eb))
    rhs = _bv(oB, a, _col(lsA.mats[x], b))
    rhs = _addv(rhs, roA.act(_col(rsB.mats[b], x), ea))
    return _sub(lhs, rhs)


_MPA_REQ = ("mulA", "mulB", "lA", "rA", "lB", "rB")


@_register("MP-ASSOC-1", ("A", "B", "B"), _MPA_REQ)
def _mpa1(ctx, idx):
    a, b, b2 = idx
    lA, rB = ctx.family("lA"), ctx.family("rB")
    mB = ctx.op("mulB")
    eb2 = _bvec(ctx, "B", b2)
    lhs = lA.act_basis(a, mB.basis_product(b, b2))
    rhs = lA.act(_col(rB.mats[b], a), eb2)
    rhs = _addv(rhs, _vb(mB, _col(lA.mats[a], b), b2))
    return _sub(lhs, rhs)


@_register("MP-ASSOC-2", ("A", "B", "B"), _MPA_REQ)
def _mpa2(ctx, idx):
    a, b, b2 = idx
    rA, lB = ctx.family("rA"), ctx.family("lB")
    mB = ctx.op("mulB")
    eb = _bvec(ctx, "B", b)
    lhs = rA.act_basis(a, mB.basis_product(b, b2))
    rhs = rA.act(_col(lB.mats[b2], a), eb)
    rhs = _addv(rhs, _bv(mB, b, _col(rA.mats[a], b2)))
    return _sub(lhs, rhs)


@_register("MP-ASSOC-3", ("B", "A", "A"), _MPA_REQ)
def _mpa3(ctx, idx):
    b, a, a2 = idx
    lB, rA = ctx.family("lB"), ctx.family("rA")
    mA = ctx.op("mulA")
    ea2 = _bvec(ctx, "A", a2)
    lhs = lB.act_basis(b, mA.basis_product(a, a2))
    rhs = lB.act(_col(rA.mats[a], b), ea2)
    rhs = _addv(rhs, _vb(mA, _col(lB.mats[b], a), a2))
    return _sub(lhs, rhs)


@_register("MP-ASSOC-4", ("B", "A", "A"), _MPA_REQ)
def _mpa4(ctx, idx):
    b, a, a2 = idx
    rB, lA = ctx.family("rB"), ctx.family("lA")
    mA = ctx.op("mulA")
    ea = _bvec(ctx, "A", a)
    lhs = rB.act_basis(b, mA.basis_product(a, a2))
    rhs = rB.act(_col(lA.mats[a2], b), ea)
    rhs = _addv(rhs, _bv(mA, a, _col(rB.mats[b], a2)))
    return _sub(lhs, rhs)


@_register("MP-ASSOC-5", ("A", "B", "B"), _MPA_REQ)
def _mpa5(ctx, idx):
    a, b, b2 = idx
    lA, rA = ctx.family("lA"), ctx.family("rA")
    lB, rB = ctx.family("lB"), ctx.family("rB")
    mB = ctx.op("mulB")
    eb, eb2 = _bvec(ctx, "B", b), _bvec(ctx, "B", b2)
    lhs = lA.act(_col(lB.mats[b], a), eb2)
    lhs = _addv(lhs, _vb(mB, _col(rA.mats[a], b), b2))
    rhs = rA.act(_col(rB.mats[b2], a), eb)
    rhs = _addv(rhs, _bv(mB, b, _col(lA.mats[a], b2)))
    return _sub(lhs, rhs)


@_register("MP-ASSOC-6", ("B", "A", "A"), _MPA_REQ)
def _mpa6(ctx, idx):
    b, a, a2 = idx
    lA, rA = ctx.family("lA"), ctx.family("rA")
    lB, rB = ctx.family("lB"), ctx.family("rB")
    mA = ctx.op("mulA")
    ea, ea2 = _bvec(ctx, "A", a), _bvec(ctx, "A", a2)
    lhs = lB.act(_col(lA.mats[a], b), ea2)
    lhs = _addv(lhs, _vb(mA, _col(rB.mats[b], a), a2))
    rhs = rB.act(_col(rA.mats[a2], b), ea)
    rhs = _addv(rhs, _bv(mA, a, _col(lB.mats[b], a2)))
    return _sub(lhs, rhs)


# -- bilinear forms and invariance --------------------------------------------

def _form_vb(B: BilinearForm, u: Vec, k: int) -> Fraction:
    return sum((u[p] * B.entries[p][k] for p in range(B.dim)), ZERO)


def _form_bv(B: BilinearForm, i: int, v: Vec) -> Fraction:
    return sum((B.entries[i][q] * v[q] for q in range(B.dim)), ZERO)


@_register("INV-NN", ("A", "A", "A"), ("prec", "succ", "form"),
           note="both defining equalities stacked")
def _invnn(ctx, idx):
    i, j, k = idx
    B = ctx.form("form")
    prec, succ, circ = ctx.op("prec"), ctx.op("succ"), ctx.op("circ")
    head = _form_vb(B, prec.basis_product(i, j), k)
    r1 = head + _form_bv(B, j, circ.basis_product(k, i))
    r2 = head - _form_bv(B, i, succ.basis_product(j, k))
    return (r1, r2)


@_register("INV-ASSOC", ("A", "A", "A"), ("mul", "form"))
def _invassoc(ctx, idx):
    i, j, k = idx
    B = ctx.form("form")
    m = ctx.op("mul")
    return (_form_vb(B, m.basis_product(i, j), k) - _form_bv(B, i, m.basis_product(j, k)),)


@_register("QF", ("A", "A", "A"), ("prec", "succ", "form"))
def _qf(ctx, idx):
    i, j, k = idx
    B = ctx.form("form")
    prec, succ, circ = ctx.op("prec"), ctx.op("succ"), ctx.op("circ")
    val = _form_vb(B, prec.basis_product(i, j), k)
    val += _form_vb(B, succ.basis_product(j, k), i)
    val -= _form_vb(B, circ.basis_product(k, i), j)
    return (val,)


@_register("FORM-SYM", ("A", "A"), ("form",))
def _formsym(ctx, idx):
    i, j = idx
    B = ctx.form("form")
    return (B.entries[i][j] - B.entries[j][i],)


@_register("FORM-ANTISYM", ("A", "A"), ("form",))
def _formantisym(ctx, idx):
    i, j = idx
    B = ctx.form("form")
    return (B.entries[i][j] + B.entries[j][i],)


@_register("FORM-NONDEG", (), ("form",),
           note="residual is the rank defect of the form")
def _formnondeg(ctx, idx):
    B = ctx.form("form")
    return (Fraction(B.dim - B.rank()),)


# -- O-operators and the capstone conditions ----------------------------------

@_register("O-OP-PREC", ("V", "V"), ("prec", "lprec", "rprec", "T"))
def _ooprec(ctx, idx):
    u, v = idx
    prec = ctx.op("prec")
    lp, rp = ctx.family("lprec"), ctx.family("rprec")
    T = ctx.linmap("T")
    Tu, Tv = _col(T, u), _col(T, v)
    lhs = prec.apply(Tu, Tv)
    inner = _addv(lp.act(Tu, _bvec(ctx, "V", v)), rp.act(Tv, _bvec(ctx, "V", u)))
    return _sub(lhs, T.apply(inner))


@_register("O-OP-SUCC", ("V", "V"), ("succ", "lsucc", "rsucc", "T"))
def _oopsucc(ctx, idx):
    u, v = idx
    succ = ctx.op("succ")
    ls, rs = ctx.family("lsucc"), ctx.family("rsucc")
    T = ctx.linmap("T")
    Tu, Tv = _col(T, u), _col(T, v)
    lhs = succ.apply(Tu, Tv)
    inner = _addv(ls.act(Tu, _bvec(ctx, "V", v)), rs.act(Tv, _bvec(ctx, "V", u)))
    return _sub(lhs, T.apply(inner))


@_register("THM-MAIN-COND-1", ("A", "A"), ("mul", "partial", "partial_hat"))
def _tmc1(ctx, idx):
    i, j = idx
    m = ctx.op("mul")
    pa, ph = ctx.linmap("partial"), ctx.linmap("partial_hat")
    return _addv(_vb(m, _col(ph, i), j), _vb(m, _col(pa, i), j))


@_register("THM-MAIN-COND-2", ("A",), ("coprod", "partial", "partial_hat"))
def _tmc2(ctx, idx):
    (k,) = idx
    cop = ctx.coprod("coprod")
    pa, ph = ctx.linmap("partial"), ctx.linmap("partial_hat")
    t = cop.apply_basis(k)
    return t.map_slot(ph, 0).add(t.map_slot(pa, 0)).flatten()


# ---------------------------------------------------------------------------
# profiles

PROFILES: dict[str, tuple[str, ...]] = {
    "assoc": ("ASSOC",),
    "nn-algebra": ("NN-1", "NN-2"),
    "nn-coalgebra": ("NN-CO-1", "NN-CO-2"),
    "nn-bialgebra": ("NN-1", "NN-2", "NN-CO-1", "NN-CO-2",
                     "NN-BI-1", "NN-BI-2", "NN-BI-3", "NN-BI-4"),
    "novikov": ("NOV-1", "NOV-2"),
    "novikov-coalgebra": ("NOV-CO-1", "NOV-CO-2"),
    "novikov-bialgebra": ("NOV-1", "NOV-2", "NOV-CO-1", "NOV-CO-2",
                          "NOV-BI-1", "NOV-BI-2", "NOV-BI-3"),
    "differential-algebra": ("ASSOC", "DER"),
    "differential-coalgebra": ("COASSOC", "CODER"),
    "admissible-differential-algebra": ("ASSOC", "DER", "ADM-DA-1", "ADM-DA-2"),
    "admissible-differential-coalgebra": ("COASSOC", "CODER", "ADM-DCA-1", "ADM-DCA-2"),
    "asi-bialgebra": ("ASSOC", "COASSOC", "ASI-1", "ASI-2"),
    "differential-asi-bialgebra": ("ASSOC", "COASSOC", "ASI-1", "ASI-2",
                                   "DER", "CODER", "ADM-DA-1", "ADM-DA-2",
                                   "ADM-DCA-1", "ADM-DCA-2"),
    "dendriform": ("DEND-1", "DEND-2", "DEND-3"),
    "differential-dendriform": ("DEND-1", "DEND-2", "DEND-3", "DDEND"),
    "pre-novikov": ("PNV-1", "PNV-2", "PNV-3", "PNV-4", "PNV-5", "PNV-6"),
    "nn-representation": ("NN-REP-1", "NN-REP-2", "NN-REP-3",
                          "NN-REP-4", "NN-REP-5", "NN-REP-6"),
    "quadratic-nn": ("NN-1", "NN-2", "FORM-SYM", "FORM-NONDEG", "INV-NN"),
    "quasi-frobenius-nn": ("NN-1", "NN-2", "FORM-ANTISYM", "FORM-NONDEG", "QF"),
    "matched-pair-nn": tuple(f"MP-NN-{i}" for i in range(1, 13)),
    "matched-pair-assoc": tuple(f"MP-ASSOC-{i}" for i in range(1, 7)),
}


# ---------------------------------------------------------------------------
# the checker

DEFAULT_WITNESS_CAP = 16


def evaluate_identity(ctx: Context, ident: str, witness_cap: int = DEFAULT_WITNESS_CAP) -> Report:
    entry = resolve_identity(ident)
    for space in entry.spaces:
        if space not in ctx.dims:
            raise SpecError(
                f"identity {entry.ident} needs a space {space!r}; "
                "it is not available from this spec (representation or matched-pair "
                "data is required)")
    ranges = [range(ctx.dims[s]) for s in entry.spaces]
    violations = 0
    witnesses: list[Witness] = []
    for idx in product(*ranges):
        res = entry.residual(ctx, idx)
        if any(x != 0 for x in res):
            violations += 1
            if len(witnesses) < witness_cap:
                witnesses.append(Witness(tuple(idx), tuple(res)))
    return Report(identity=entry.ident, violations=violations,
                  witnesses=tuple(witnesses), witness_cap=witness_cap)


def check_identity(spec, ident: str, binding: Mapping[str, str] | None = None,
                   witness_cap: int = DEFAULT_WITNESS_CAP) -> Report:
    """Check one catalog identity against an AlgebraSpec (or a prepared Context)."""
    ctx = spec if isinstance(spec, Context) else context_for(spec)
    if binding:
        ctx = ctx.rebound(binding)
    return evaluate_identity(ctx, ident, witness_cap)


def _thread_count(threads: int | None) -> int:
    if threads is not None:
        return max(1, threads)
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise SpecError(f"{THREADS_ENV} must be an integer, got {raw!r}")


def check_profile(spec, profile: str, binding: Mapping[str, str] | None = None,
                  witness_cap: int = DEFAULT_WITNESS_CAP,
                  threads: int | None = None) -> list[Report]:
    """Run every identity of a named profile; report order follows the profile.

    Identities may be evaluated concurrently (NOVALG_THREADS or the threads
    argument); reports are assembled in profile order regardless.
    """
    if profile not in PROFILES:
        raise SpecError(f"unknown profile {profile!r}; known: {', '.join(sorted(PROFILES))}")
    idents = PROFILES[profile]
    ctx = spec if isinstance(spec, Context) else context_for(spec)
    if binding:
        ctx = ctx.rebound(binding)
    nthreads = _thread_count(threads)
    if nthreads == 1 or len(idents) <= 1:
        return [evaluate_identity(ctx, ident, witness_cap) for ident in idents]
    with ThreadPoolExecutor(max_workers=nthreads) as pool:
        futures = [pool.submit(evaluate_identity, ctx, ident, witness_cap) for ident in idents]
        return [f.result() for f in futures]


def check_identities(spec, idents: Sequence[str],
                     binding: Mapping[str, str] | None = None,
                     witness_cap: int = DEFAULT_WITNESS_CAP,
                     threads: int | None = None) -> list[Report]:
    ctx = spec if isinstance(spec, Context) else context_for(spec)
    if binding:
        ctx = ctx.rebound(binding)
    nthreads = _thread_count(threads)
    if nthreads == 1 or len(idents) <= 1:
        return [evaluate_identity(ctx, ident, witness_cap) for ident in idents]
    with ThreadPoolExecutor(max_workers=nthreads) as pool:
        futures = [pool.submit(evaluate_identity, ctx, ident, witness_cap) for ident in idents]
        return [f.result() for f in futures]
