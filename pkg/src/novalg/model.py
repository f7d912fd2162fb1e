"""Structure-constant tables, algebra bundles and check reports.

A binary operation on a based space is a cube c with e_i * e_j =
sum_k c[i][j][k] e_k; a comultiplication is a cube d with Delta(e_k) =
sum_{i,j} d[k][i][j] e_i (x) e_j.  An AlgebraSpec bundles named tables,
linear maps and bilinear forms sharing one dimension, plus a weight scalar.
Basis indices are 0-based everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Mapping, NamedTuple, Sequence

from .linalg import (
    ONE,
    ZERO,
    BilinearForm,
    LinMap,
    Tensor2,
    Vec,
    format_rational,
    rat,
    zero_vec,
)


class SpecError(ValueError):
    """Bad input: malformed file, missing member, dimension mismatch, unknown id."""


class BudgetError(RuntimeError):
    """A search was refused because the candidate count exceeds the budget."""

    def __init__(self, message: str, candidates: int):
        super().__init__(message)
        self.candidates = candidates


class VerificationError(RuntimeError):
    """A construction precondition or output contract failed; carries the reports."""

    def __init__(self, message: str, reports: Sequence["Report"] = ()):
        super().__init__(message)
        self.reports = list(reports)

    def __str__(self):
        base = super().__str__()
        failed = [r.identity for r in self.reports if not r.passed]
        if failed:
            return f"{base} [failing: {', '.join(failed)}]"
        return base


# ---------------------------------------------------------------------------
# multiplication tables

class MulTable:
    """Structure constants of a binary operation."""

    __slots__ = ("dim", "c")

    def __init__(self, entries):
        ent = tuple(tuple(tuple(rat(x) for x in row) for row in plane) for plane in entries)
        self.dim = len(ent)
        if any(len(p) != self.dim or any(len(r) != self.dim for r in p) for p in ent):
            raise SpecError("multiplication table must be a dim^3 cube")
        self.c = ent

    @classmethod
    def zero(cls, dim: int) -> "MulTable":
        plane = tuple((ZERO,) * dim for _ in range(dim))
        return cls(tuple(plane for _ in range(dim)))

    @classmethod
    def from_entries(cls, dim: int, items: Sequence[tuple[int, int, int, Fraction]]) -> "MulTable":
        cube = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for i, j, k, v in items:
            cube[i][j][k] = rat(v)
        return cls(cube)

    def basis_product(self, i: int, j: int) -> Vec:
        return self.c[i][j]

    def apply(self, u: Vec, v: Vec) -> Vec:
        n = self.dim
        out = [ZERO] * n
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                ab = a * b
                row = self.c[i][j]
                for k in range(n):
                    if row[k] != 0:
                        out[k] += ab * row[k]
        return tuple(out)

    def add(self, other: "MulTable") -> "MulTable":
        if self.dim != other.dim:
            raise SpecError("table dimension mismatch")
        return MulTable(tuple(
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(p1, p2))
            for p1, p2 in zip(self.c, other.c)))

    def neg(self) -> "MulTable":
        return MulTable(tuple(tuple(tuple(-a for a in row) for row in plane) for plane in self.c))

    def opposite(self) -> "MulTable":
        """Swap the arguments: c'[i][j][k] = c[j][i][k]."""
        n = self.dim
        return MulTable(tuple(tuple(self.c[j][i] for j in range(n)) for i in range(n)))

    def left_matrix(self, i: int) -> LinMap:
        """Matrix of left multiplication by e_i."""
        n = self.dim
        return LinMap(tuple(tuple(self.c[i][j][k] for j in range(n)) for k in range(n)))

    def right_matrix(self, j: int) -> LinMap:
        """Matrix of right multiplication by e_j."""
        n = self.dim
        return LinMap(tuple(tuple(self.c[i][j][k] for i in range(n)) for k in range(n)))

    def left_mul_map(self, x: Vec) -> LinMap:
        n = self.dim
        ent = [[ZERO] * n for _ in range(n)]
        for i, a in enumerate(x):
            if a == 0:
                continue
            for j in range(n):
                row = self.c[i][j]
                for k in range(n):
                    if row[k] != 0:
                        ent[k][j] += a * row[k]
        return LinMap(ent)

    def right_mul_map(self, y: Vec) -> LinMap:
        n = self.dim
        ent = [[ZERO] * n for _ in range(n)]
        for j, b in enumerate(y):
            if b == 0:
                continue
            for i in range(n):
                row = self.c[i][j]
                for k in range(n):
                    if row[k] != 0:
                        ent[k][i] += b * row[k]
        return LinMap(ent)

    def dualize(self) -> "CoprodTable":
        """Comultiplication on the dual space: d[k][i][j] = c[i][j][k]."""
        n = self.dim
        return CoprodTable(tuple(
            tuple(tuple(self.c[i][j][k] for j in range(n)) for i in range(n))
            for k in range(n)))

    def is_zero(self) -> bool:
        return all(a == 0 for plane in self.c for row in plane for a in row)

    def nonzero(self):
        n = self.dim
        for i, j, k in product(range(n), repeat=3):
            if self.c[i][j][k] != 0:
                yield (i, j, k), self.c[i][j][k]

    def is_commutative_pair(self, other: "MulTable") -> bool:
        """True when x *_self y = y *_other x entrywise."""
        n = self.dim
        return all(self.c[i][j][k] == other.c[j][i][k] for i, j, k in product(range(n), repeat=3))

    def __eq__(self, other) -> bool:
        return isinstance(other, MulTable) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        terms = [f"e{i}*e{j}->{format_rational(v)}e{k}" for (i, j, k), v in self.nonzero()]
        return "MulTable<" + ("; ".join(terms) if terms else "0") + ">"


class CoprodTable:
    """Structure constants of a comultiplication A -> A (x) A."""

    __slots__ = ("dim", "d")

    def __init__(self, entries):
        ent = tuple(tuple(tuple(rat(x) for x in row) for row in plane) for plane in entries)
        self.dim = len(ent)
        if any(len(p) != self.dim or any(len(r) != self.dim for r in p) for p in ent):
            raise SpecError("comultiplication table must be a dim^3 cube")
        self.d = ent

    @classmethod
    def zero(cls, dim: int) -> "CoprodTable":
        plane = tuple((ZERO,) * dim for _ in range(dim))
        return cls(tuple(plane for _ in range(dim)))

    @classmethod
    def from_entries(cls, dim: int, items: Sequence[tuple[int, int, int, Fraction]]) -> "CoprodTable":
        cube = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for k, i, j, v in items:
            cube[k][i][j] = rat(v)
        return cls(cube)

    def apply_basis(self, k: int) -> Tensor2:
        return Tensor2(self.d[k])

    def apply(self, x: Vec) -> Tensor2:
        n = self.dim
        ent = [[ZERO] * n for _ in range(n)]
        for k, a in enumerate(x):
            if a == 0:
                continue
            plane = self.d[k]
            for i in range(n):
                for j in range(n):
                    if plane[i][j] != 0:
                        ent[i][j] += a * plane[i][j]
        return Tensor2(ent)

    def add(self, other: "CoprodTable") -> "CoprodTable":
        if self.dim != other.dim:
            raise SpecError("table dimension mismatch")
        return CoprodTable(tuple(
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(p1, p2))
            for p1, p2 in zip(self.d, other.d)))

    def flip(self) -> "CoprodTable":
        """Compose with the flip of the two output slots: d'[k][i][j] = d[k][j][i]."""
        n = self.dim
        return CoprodTable(tuple(
            tuple(tuple(self.d[k][j][i] for j in range(n)) for i in range(n))
            for k in range(n)))

    def dualize(self) -> MulTable:
        """Multiplication on the dual space: c[i][j][k] = d[k][i][j]."""
        n = self.dim
        return MulTable(tuple(
            tuple(tuple(self.d[k][i][j] for k in range(n)) for j in range(n))
            for i in range(n)))

    def is_zero(self) -> bool:
        return all(a == 0 for plane in self.d for row in plane for a in row)

    def nonzero(self):
        n = self.dim
        for k, i, j in product(range(n), repeat=3):
            if self.d[k][i][j] != 0:
                yield (k, i, j), self.d[k][i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, CoprodTable) and self.d == other.d

    def __hash__(self):
        return hash(self.d)

    def __repr__(self):
        terms = [f"e{k}->{format_rational(v)}e{i}(x)e{j}" for (k, i, j), v in self.nonzero()]
        return "CoprodTable<" + ("; ".join(terms) if terms else "0") + ">"


def dualize_mul(m: MulTable) -> CoprodTable:
    return m.dualize()


def dualize_coprod(c: CoprodTable) -> MulTable:
    return c.dualize()


# ---------------------------------------------------------------------------
# action families

class ActionFamily:
    """A linear map A -> End(V), stored as one carrier matrix per basis
    vector of the acting space."""

    __slots__ = ("mats", "domain_dim", "carrier_dim")

    def __init__(self, mats: Sequence[LinMap]):
        self.mats = tuple(mats)
        if not self.mats:
            raise SpecError("action family needs at least one matrix")
        self.domain_dim = len(self.mats)
        self.carrier_dim = self.mats[0].rows
        for m in self.mats:
            if m.rows != self.carrier_dim or m.cols != self.carrier_dim:
                raise SpecError("action family matrices must be square of equal size")

    @classmethod
    def zero(cls, domain_dim: int, carrier_dim: int) -> "ActionFamily":
        return cls(tuple(LinMap.zero(carrier_dim) for _ in range(domain_dim)))

    @classmethod
    def from_left(cls, table: MulTable) -> "ActionFamily":
        return cls(tuple(table.left_matrix(i) for i in range(table.dim)))

    @classmethod
    def from_right(cls, table: MulTable) -> "ActionFamily":
        return cls(tuple(table.right_matrix(j) for j in range(table.dim)))

    @classmethod
    def from_cube(cls, table: MulTable) -> "ActionFamily":
        """Read a cube t as an action: the image of e_j under the operator of
        e_a is sum_k t[a][j][k] e_k.  Same reading as from_left."""
        return cls.from_left(table)

    def to_cube(self) -> MulTable:
        if self.domain_dim != self.carrier_dim:
            raise SpecError("only equal-dimension families can be written as a cube")
        n = self.domain_dim
        return MulTable(tuple(
            tuple(tuple(self.mats[a].entries[k][j] for k in range(n)) for j in range(n))
            for a in range(n)))

    def act_basis(self, a: int, v: Vec) -> Vec:
        return self.mats[a].apply(v)

    def act(self, x: Vec, v: Vec) -> Vec:
        out = list(zero_vec(self.carrier_dim))
        for a, coeff in enumerate(x):
            if coeff == 0:
                continue
            w = self.mats[a].apply(v)
            for k in range(self.carrier_dim):
                out[k] += coeff * w[k]
        return tuple(out)

    def add(self, other: "ActionFamily") -> "ActionFamily":
        if self.domain_dim != other.domain_dim or self.carrier_dim != other.carrier_dim:
            raise SpecError("action family dimension mismatch")
        return ActionFamily(tuple(m.add(o) for m, o in zip(self.mats, other.mats)))

    def neg(self) -> "ActionFamily":
        return ActionFamily(tuple(m.neg() for m in self.mats))

    def dual(self) -> "ActionFamily":
        """The family of dual operators on the dual carrier (slotwise transpose)."""
        return ActionFamily(tuple(m.transpose() for m in self.mats))

    def __eq__(self, other) -> bool:
        return isinstance(other, ActionFamily) and self.mats == other.mats

    def __hash__(self):
        return hash(self.mats)


# ---------------------------------------------------------------------------
# the spec bundle

@dataclass(frozen=True)
class AlgebraSpec:
    """A named bundle of structure on one based space."""

    dim: int
    ops: Mapping[str, MulTable] = field(default_factory=dict)
    coprods: Mapping[str, CoprodTable] = field(default_factory=dict)
    maps: Mapping[str, LinMap] = field(default_factory=dict)
    forms: Mapping[str, BilinearForm] = field(default_factory=dict)
    weight: Fraction = ZERO
    basis: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.dim <= 0:
            raise SpecError("dimension must be positive")
        object.__setattr__(self, "ops", dict(self.ops))
        object.__setattr__(self, "coprods", dict(self.coprods))
        object.__setattr__(self, "maps", dict(self.maps))
        object.__setattr__(self, "forms", dict(self.forms))
        object.__setattr__(self, "weight", rat(self.weight))
        for name, t in self.ops.items():
            if t.dim != self.dim:
                raise SpecError(f"op {name!r} has dim {t.dim}, spec has dim {self.dim}")
        for name, t in self.coprods.items():
            if t.dim != self.dim:
                raise SpecError(f"coprod {name!r} has dim {t.dim}, spec has dim {self.dim}")
        for name, m in self.maps.items():
            if m.rows != self.dim or m.cols != self.dim:
                raise SpecError(f"map {name!r} is {m.rows}x{m.cols}, spec has dim {self.dim}")
        for name, f in self.forms.items():
            if f.dim != self.dim:
                raise SpecError(f"form {name!r} has dim {f.dim}, spec has dim {self.dim}")
        if self.basis is not None:
            object.__setattr__(self, "basis", tuple(self.basis))
            if len(self.basis) != self.dim:
                raise SpecError("basis label count differs from dim")

    def with_members(self, **kw) -> "AlgebraSpec":
        """Copy with some member maps replaced."""
        data = dict(dim=self.dim, ops=self.ops, coprods=self.coprods,
                    maps=self.maps, forms=self.forms, weight=self.weight, basis=self.basis)
        data.update(kw)
        return AlgebraSpec(**data)

    def label(self, i: int) -> str:
        if self.basis is not None:
            return self.basis[i]
        return f"e{i + 1}"


class Witness(NamedTuple):
    indices: tuple[int, ...]
    residual: tuple[Fraction, ...]


@dataclass(frozen=True)
class Report:
    """Outcome of one identity check; exact residuals, no tolerances."""

    identity: str
    violations: int
    witnesses: tuple[Witness, ...]
    witness_cap: int = 16

    @property
    def status(self) -> str:
        return "pass" if self.violations == 0 else "fail"

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "status": self.status,
            "violations": self.violations,
            "witnesses": [
                {
                    "basis": list(w.indices),
                    "residual": [format_rational(x) for x in w.residual],
                }
                for w in self.witnesses
            ],
        }

    def summary(self) -> str:
        if self.passed:
            return f"{self.identity}: pass"
        first = self.witnesses[0] if self.witnesses else None
        where = ""
        if first is not None:
            tup = ",".join(str(i) for i in first.indices)
            res = ",".join(format_rational(x) for x in first.residual)
            where = f" first witness ({tup}) residual [{res}]"
        return f"{self.identity}: FAIL ({self.violations} violations;{where})"


def all_pass(reports: Sequence[Report]) -> bool:
    return all(r.passed for r in reports)
