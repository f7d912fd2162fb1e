"""Exact rational linear algebra: vectors, matrices, order-2/3 tensors, permutations.

Scalars are fractions.Fraction throughout (always lowest terms, positive
denominator).  Every value here is immutable after construction and every
operation is a pure function, so values can be shared freely.  There is no
floating-point mode anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import lcm
from typing import Iterable, Sequence

Scalar = Fraction
Vec = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class LinalgError(ValueError):
    pass


def rat(x) -> Fraction:
    """Promote an int, string or Fraction to an exact scalar."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise LinalgError(f"cannot promote {x!r} to an exact rational")


def parse_rational(s: str) -> Fraction:
    """Parse "p" or "p/q" exactly; anything else (floats, spaces inside) is an error."""
    text = s.strip()
    try:
        if "/" in text:
            num, den = text.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise LinalgError(f"malformed rational {s!r}") from exc


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# vectors

def zero_vec(n: int) -> Vec:
    return (ZERO,) * n


def basis_vec(i: int, n: int) -> Vec:
    return tuple(ONE if j == i else ZERO for j in range(n))


def vec_add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def vec_scale(c: Fraction, u: Vec) -> Vec:
    return tuple(c * a for a in u)


def vec_is_zero(u: Vec) -> bool:
    return all(a == 0 for a in u)


def vec_sum(vecs: Iterable[Vec], n: int) -> Vec:
    acc = list(zero_vec(n))
    for v in vecs:
        for i, a in enumerate(v):
            acc[i] += a
    return tuple(acc)


# ---------------------------------------------------------------------------
# fraction-free elimination

def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    # Row scaling by the lcm of denominators preserves rank.
    out = []
    for row in rows:
        m = lcm(*(f.denominator for f in row)) if row else 1
        out.append([int(f * m) for f in row])
    return out


def _bareiss_rank(mat: list[list[int]]) -> int:
    if not mat or not mat[0]:
        return 0
    nrows, ncols = len(mat), len(mat[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        for r in range(rank + 1, nrows):
            for c in range(col + 1, ncols):
                mat[r][c] = (mat[r][c] * mat[rank][col] - mat[r][col] * mat[rank][c]) // prev
            mat[r][col] = 0
        prev = mat[rank][col]
        rank += 1
    return rank


def exact_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank over the rationals via Bareiss fraction-free elimination."""
    return _bareiss_rank(_integer_rows(rows))


def invert_rows(rows: Sequence[Sequence[Fraction]]) -> tuple[Vec, ...]:
    """Exact inverse of a square matrix given as rows; LinalgError if singular."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise LinalgError("matrix is not square")
    aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise LinalgError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [a / p for a in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


# ---------------------------------------------------------------------------
# linear maps

class LinMap:
    """Matrix of a linear map; entries[i][j] = coefficient of output basis
    vector i in the image of input basis vector j."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[Fraction]], rows: int | None = None,
                 cols: int | None = None):
        ent = tuple(tuple(rat(x) for x in row) for row in entries)
        self.rows = len(ent) if rows is None else rows
        self.cols = (len(ent[0]) if ent else 0) if cols is None else cols
        if len(ent) != self.rows or any(len(r) != self.cols for r in ent):
            raise LinalgError("ragged matrix")
        self.entries = ent

    @classmethod
    def zero(cls, rows: int, cols: int | None = None) -> "LinMap":
        cols = rows if cols is None else cols
        return cls(tuple((ZERO,) * cols for _ in range(rows)), rows, cols)

    @classmethod
    def identity(cls, n: int) -> "LinMap":
        return cls(tuple(basis_vec(i, n) for i in range(n)))

    @classmethod
    def scalar(cls, c: Fraction, n: int) -> "LinMap":
        c = rat(c)
        return cls(tuple(tuple(c if i == j else ZERO for j in range(n)) for i in range(n)))

    def apply(self, v: Vec) -> Vec:
        if len(v) != self.cols:
            raise LinalgError(f"applying {self.rows}x{self.cols} map to length-{len(v)} vector")
        return tuple(sum((row[j] * v[j] for j in range(self.cols)), ZERO) for row in self.entries)

    def compose(self, other: "LinMap") -> "LinMap":
        """self after other."""
        if self.cols != other.rows:
            raise LinalgError("composition dimension mismatch")
        ent = tuple(
            tuple(sum((self.entries[i][k] * other.entries[k][j] for k in range(self.cols)), ZERO)
                  for j in range(other.cols))
            for i in range(self.rows))
        return LinMap(ent, self.rows, other.cols)

    def transpose(self) -> "LinMap":
        ent = tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols))
        return LinMap(ent, self.cols, self.rows)

    def add(self, other: "LinMap") -> "LinMap":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise LinalgError("sum dimension mismatch")
        return LinMap(tuple(tuple(a + b for a, b in zip(r1, r2))
                            for r1, r2 in zip(self.entries, other.entries)))

    def sub(self, other: "LinMap") -> "LinMap":
        return self.add(other.neg())

    def neg(self) -> "LinMap":
        return LinMap(tuple(tuple(-a for a in row) for row in self.entries))

    def scale(self, c: Fraction) -> "LinMap":
        c = rat(c)
        return LinMap(tuple(tuple(c * a for a in row) for row in self.entries))

    def rank(self) -> int:
        return exact_rank(self.entries)

    def inverse(self) -> "LinMap":
        return LinMap(invert_rows(self.entries))

    def is_zero(self) -> bool:
        return all(a == 0 for row in self.entries for a in row)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinMap) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(" ".join(format_rational(a) for a in row) for row in self.entries)
        return f"LinMap[{body}]"


def dual_map(psi: LinMap) -> LinMap:
    """Matrix of the dual map on dual bases (the transpose)."""
    return psi.transpose()


# ---------------------------------------------------------------------------
# tensors

class Tensor2:
    """Element of A (x) A: entries[i][j] is the coefficient of e_i (x) e_j."""

    __slots__ = ("dim", "entries")

    def __init__(self, entries: Sequence[Sequence[Fraction]]):
        ent = tuple(tuple(rat(x) for x in row) for row in entries)
        self.dim = len(ent)
        if any(len(r) != self.dim for r in ent):
            raise LinalgError("order-2 tensor must be square")
        self.entries = ent

    @classmethod
    def zero(cls, dim: int) -> "Tensor2":
        return cls(tuple((ZERO,) * dim for _ in range(dim)))

    def sigma(self) -> "Tensor2":
        """Flip the two tensor slots."""
        return Tensor2(tuple(tuple(self.entries[j][i] for j in range(self.dim))
                             for i in range(self.dim)))

    def add(self, other: "Tensor2") -> "Tensor2":
        self._samedim(other)
        return Tensor2(tuple(tuple(a + b for a, b in zip(r1, r2))
                             for r1, r2 in zip(self.entries, other.entries)))

    def sub(self, other: "Tensor2") -> "Tensor2":
        return self.add(other.neg())

    def neg(self) -> "Tensor2":
        return Tensor2(tuple(tuple(-a for a in row) for row in self.entries))

    def scale(self, c: Fraction) -> "Tensor2":
        c = rat(c)
        return Tensor2(tuple(tuple(c * a for a in row) for row in self.entries))

    def is_zero(self) -> bool:
        return all(a == 0 for row in self.entries for a in row)

    def is_antisymmetric(self) -> bool:
        return all(self.entries[i][j] == -self.entries[j][i]
                   for i in range(self.dim) for j in range(i + 1))

    def map_slot(self, m: LinMap, slot: int) -> "Tensor2":
        """Apply a linear map to one tensor slot (0 or 1)."""
        n = self.dim
        if slot == 0:
            ent = tuple(tuple(sum((m.entries[a][i] * self.entries[i][b] for i in range(n)), ZERO)
                              for b in range(n)) for a in range(n))
        elif slot == 1:
            ent = tuple(tuple(sum((m.entries[b][j] * self.entries[a][j] for j in range(n)), ZERO)
                              for b in range(n)) for a in range(n))
        else:
            raise LinalgError("slot must be 0 or 1")
        return Tensor2(ent)

    def nonzero(self):
        for i in range(self.dim):
            for j in range(self.dim):
                if self.entries[i][j] != 0:
                    yield (i, j), self.entries[i][j]

    def flatten(self) -> Vec:
        return tuple(a for row in self.entries for a in row)

    def _samedim(self, other: "Tensor2"):
        if self.dim != other.dim:
            raise LinalgError("tensor dimension mismatch")

    def __eq__(self, other) -> bool:
        return isinstance(other, Tensor2) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        terms = [f"{format_rational(c)}*e{i}(x)e{j}" for (i, j), c in self.nonzero()]
        return "Tensor2<" + (" + ".join(terms) if terms else "0") + ">"


class Tensor3:
    """Element of A (x) A (x) A; entries[i][j][k] is the coefficient of e_i (x) e_j (x) e_k."""

    __slots__ = ("dim", "entries")

    def __init__(self, entries):
        ent = tuple(tuple(tuple(rat(x) for x in row) for row in plane) for plane in entries)
        self.dim = len(ent)
        if any(len(p) != self.dim or any(len(r) != self.dim for r in p) for p in ent):
            raise LinalgError("order-3 tensor must be cubical")
        self.entries = ent

    @classmethod
    def zero(cls, dim: int) -> "Tensor3":
        plane = tuple((ZERO,) * dim for _ in range(dim))
        return cls(tuple(plane for _ in range(dim)))

    def add(self, other: "Tensor3") -> "Tensor3":
        if self.dim != other.dim:
            raise LinalgError("tensor dimension mismatch")
        return Tensor3(tuple(
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(p1, p2))
            for p1, p2 in zip(self.entries, other.entries)))

    def sub(self, other: "Tensor3") -> "Tensor3":
        return self.add(other.neg())

    def neg(self) -> "Tensor3":
        return Tensor3(tuple(tuple(tuple(-a for a in row) for row in plane)
                             for plane in self.entries))

    def is_zero(self) -> bool:
        return all(a == 0 for plane in self.entries for row in plane for a in row)

    def nonzero(self):
        n = self.dim
        for i, j, k in product(range(n), repeat=3):
            if self.entries[i][j][k] != 0:
                yield (i, j, k), self.entries[i][j][k]

    def flatten(self) -> Vec:
        return tuple(a for plane in self.entries for row in plane for a in row)

    def __eq__(self, other) -> bool:
        return isinstance(other, Tensor3) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        terms = [f"{format_rational(c)}*e{i}(x)e{j}(x)e{k}" for (i, j, k), c in self.nonzero()]
        return "Tensor3<" + (" + ".join(terms) if terms else "0") + ">"


# ---------------------------------------------------------------------------
# permutations on three tensor slots

_S3_ONE_LINE = {(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)}


def perm_from_cycles(text: str, n: int = 3) -> tuple[int, ...]:
    """Parse cycle notation like "(123)" or "(12)" into 1-line form (0-based).

    "e", "id" and "()" all denote the identity.  Points are written 1-based
    in cycles, matching the usual convention.
    """
    s = text.strip().replace(" ", "")
    perm = list(range(n))
    if s in ("e", "id", "()", ""):
        return tuple(perm)
    if not (s.startswith("(") and s.endswith(")")):
        raise LinalgError(f"bad cycle notation {text!r}")
    for cyc in s[1:-1].split(")("):
        pts = [int(ch) - 1 for ch in cyc]
        if any(p < 0 or p >= n for p in pts) or len(set(pts)) != len(pts):
            raise LinalgError(f"bad cycle notation {text!r}")
        for a, b in zip(pts, pts[1:] + pts[:1]):
            perm[a] = b
    return tuple(perm)


def as_perm3(omega) -> tuple[int, ...]:
    """Accept a permutation of three slots in 1-line form or cycle notation."""
    if isinstance(omega, str):
        omega = perm_from_cycles(omega, 3)
    omega = tuple(omega)
    if omega not in _S3_ONE_LINE:
        raise LinalgError(f"{omega!r} is not a permutation of three slots")
    return omega


def perm_compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """(p . q)(i) = p(q(i))."""
    return tuple(p[q[i]] for i in range(len(p)))


def permute_tensor3(t: Tensor3, omega) -> Tensor3:
    """Push e_{a1}(x)e_{a2}(x)e_{a3} to e_{a_{w^-1(1)}}(x)e_{a_{w^-1(2)}}(x)e_{a_{w^-1(3)}}."""
    w = as_perm3(omega)
    n = t.dim

    def entry(i, j, k):
        idx = (i, j, k)
        return t.entries[idx[w[0]]][idx[w[1]]][idx[w[2]]]

    return Tensor3(tuple(tuple(tuple(entry(i, j, k) for k in range(n))
                               for j in range(n)) for i in range(n)))


# ---------------------------------------------------------------------------
# bilinear forms

class BilinearForm:
    """entries[i][j] = B(e_i, e_j)."""

    __slots__ = ("dim", "entries")

    def __init__(self, entries: Sequence[Sequence[Fraction]]):
        ent = tuple(tuple(rat(x) for x in row) for row in entries)
        self.dim = len(ent)
        if any(len(r) != self.dim for r in ent):
            raise LinalgError("bilinear form must be square")
        self.entries = ent

    @classmethod
    def zero(cls, dim: int) -> "BilinearForm":
        return cls(tuple((ZERO,) * dim for _ in range(dim)))

    def value(self, u: Vec, v: Vec) -> Fraction:
        return sum((u[i] * self.entries[i][j] * v[j]
                    for i in range(self.dim) for j in range(self.dim)), ZERO)

    def is_symmetric(self) -> bool:
        return all(self.entries[i][j] == self.entries[j][i]
                   for i in range(self.dim) for j in range(i))

    def is_antisymmetric(self) -> bool:
        return all(self.entries[i][j] == -self.entries[j][i]
                   for i in range(self.dim) for j in range(i + 1))

    def rank(self) -> int:
        return exact_rank(self.entries)

    def is_nondegenerate(self) -> bool:
        return self.rank() == self.dim

    def inverse_entries(self) -> tuple[Vec, ...]:
        return invert_rows(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, BilinearForm) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(" ".join(format_rational(a) for a in row) for row in self.entries)
        return f"BilinearForm[{body}]"


def rank(m) -> int:
    """Exact rank of a LinMap or BilinearForm."""
    return exact_rank(m.entries)


def sharp(r: Tensor2) -> LinMap:
    """View r in A(x)A as the map A* -> A sending the i-th dual basis vector
    to sum_j r[i][j] e_j."""
    n = r.dim
    return LinMap(tuple(tuple(r.entries[i][q] for i in range(n)) for q in range(n)))
