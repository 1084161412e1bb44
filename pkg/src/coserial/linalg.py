"""Exact linear algebra over the rationals and small prime fields.

Everything here is dense and row-oriented. Matrices carry their shape
explicitly so that empty blocks (a vertex with dimension zero) compose
without special cases.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Iterator, Sequence


class Field:
    name = "field"
    characteristic = 0

    zero: object
    one: object

    def coerce(self, x):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def neg(self, a):
        return self.sub(self.zero, a)

    def is_zero(self, a) -> bool:
        return a == self.zero

    def format(self, a) -> str:
        return str(a)

    def parse(self, text: str):
        return self.coerce(Fraction(text))

    def __repr__(self):
        return self.name


class RationalField(Field):
    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        return x if isinstance(x, Fraction) else Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def neg(self, a):
        return -a

    def format(self, a):
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"
        self.zero = 0
        self.one = 1

    def coerce(self, x):
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ValueError(f"{x} has no image in {self.name}")
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def neg(self, a):
        return (-a) % self.p

    def elements(self):
        return range(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()
GF2 = PrimeField(2)


def _rref_rows(F: Field, rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    """Reduced row echelon form in place; returns the nonzero rows and pivot columns."""
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if not F.is_zero(rows[i][c]):
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not F.is_zero(rows[i][c]):
                f = rows[i][c]
                ri, rr = rows[i], rows[r]
                rows[i] = [F.sub(ri[j], F.mul(f, rr[j])) for j in range(ncols)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


class Matrix:
    """Immutable dense matrix over a Field."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, nrows: int, ncols: int, rows: Iterable[Iterable] = ()):
        rows = tuple(tuple(field.coerce(x) for x in r) for r in rows)
        if not rows and nrows:
            rows = tuple((field.zero,) * ncols for _ in range(nrows))
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise ValueError(f"matrix data does not match shape {nrows}x{ncols}")
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], ncols: int | None = None) -> "Matrix":
        rows = list(rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for an empty row list")
            ncols = len(rows[0])
        return cls(field, len(rows), ncols, rows)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(field, nrows, ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, n, n, [[field.one if i == j else field.zero for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, field: Field, nrows: int, cols: Sequence[Sequence]) -> "Matrix":
        return cls(field, nrows, len(cols), [[c[i] for c in cols] for i in range(nrows)])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format(x) for x in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols} [{body}])"

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, self.ncols, self.nrows, [self.column(j) for j in range(self.ncols)])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        F = self.field
        cols = other.columns()
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = F.zero
                for a, b in zip(r, c):
                    if not F.is_zero(a) and not F.is_zero(b):
                        acc = F.add(acc, F.mul(a, b))
                row.append(acc)
            out.append(row)
        return Matrix(F, self.nrows, other.ncols, out)

    def apply(self, vec: Sequence) -> tuple:
        F = self.field
        out = []
        for r in self.rows:
            acc = F.zero
            for a, b in zip(r, vec):
                acc = F.add(acc, F.mul(a, b))
            out.append(acc)
        return tuple(out)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        F = self.field
        return Matrix(F, self.nrows, self.ncols,
                      [[F.add(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        F = self.field
        return Matrix(F, self.nrows, self.ncols, [[F.neg(a) for a in r] for r in self.rows])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        F = self.field
        c = F.coerce(c)
        return Matrix(F, self.nrows, self.ncols, [[F.mul(c, a) for a in r] for r in self.rows])

    def is_zero(self) -> bool:
        F = self.field
        return all(F.is_zero(a) for r in self.rows for a in r)

    def rank(self) -> int:
        return len(_rref_rows(self.field, list(self.rows), self.ncols)[1])

    def rref(self) -> tuple["Matrix", list[int]]:
        rows, piv = _rref_rows(self.field, list(self.rows), self.ncols)
        return Matrix(self.field, len(rows), self.ncols, rows), piv

    def nullspace(self) -> list[tuple]:
        """Basis of {x : self x = 0}."""
        F = self.field
        rows, piv = _rref_rows(F, list(self.rows), self.ncols)
        free = [c for c in range(self.ncols) if c not in piv]
        basis = []
        for f in free:
            v = [F.zero] * self.ncols
            v[f] = F.one
            for r, pc in zip(rows, piv):
                v[pc] = F.neg(r[f])
            basis.append(tuple(v))
        return basis

    def solve(self, b: Sequence):
        """One solution of self x = b, or None."""
        F = self.field
        aug = [list(r) + [F.coerce(bi)] for r, bi in zip(self.rows, b)]
        rows, piv = _rref_rows(F, aug, self.ncols + 1)
        if self.ncols in piv:
            return None
        x = [F.zero] * self.ncols
        for r, pc in zip(rows, piv):
            x[pc] = r[self.ncols]
        return tuple(x)

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("not square")
        n = self.nrows
        F = self.field
        aug = [list(r) + [F.one if i == j else F.zero for j in range(n)] for i, r in enumerate(self.rows)]
        rows, piv = _rref_rows(F, aug, 2 * n)
        if piv[:n] != list(range(n)) or len(rows) < n:
            raise ZeroDivisionError("singular matrix")
        return Matrix(F, n, n, [r[n:] for r in rows])

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def trace(self):
        F = self.field
        acc = F.zero
        for i in range(min(self.nrows, self.ncols)):
            acc = F.add(acc, self.rows[i][i])
        return acc

    def convert(self, field: Field) -> "Matrix":
        return Matrix(field, self.nrows, self.ncols, self.rows)


def hstack(field: Field, nrows: int, blocks: Sequence[Matrix]) -> Matrix:
    ncols = sum(b.ncols for b in blocks)
    rows = [[x for b in blocks for x in b.rows[i]] for i in range(nrows)]
    return Matrix(field, nrows, ncols, rows)


def vstack(field: Field, ncols: int, blocks: Sequence[Matrix]) -> Matrix:
    rows = [r for b in blocks for r in b.rows]
    return Matrix(field, len(rows), ncols, rows)


def block_diag(field: Field, blocks: Sequence[Matrix]) -> Matrix:
    nrows = sum(b.nrows for b in blocks)
    ncols = sum(b.ncols for b in blocks)
    rows = []
    off = 0
    for b in blocks:
        for r in b.rows:
            rows.append([field.zero] * off + list(r) + [field.zero] * (ncols - off - b.ncols))
        off += b.ncols
    return Matrix(field, nrows, ncols, rows)


class Subspace:
    """A subspace of field^n stored by its canonical RREF basis."""

    __slots__ = ("field", "n", "basis")

    def __init__(self, field: Field, n: int, vectors: Iterable[Sequence] = ()):
        vecs = [[field.coerce(x) for x in v] for v in vectors]
        rows, _ = _rref_rows(field, vecs, n) if vecs else ([], [])
        self.field = field
        self.n = n
        self.basis = tuple(tuple(r) for r in rows)

    @classmethod
    def full(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, Matrix.identity(field, n).rows)

    @classmethod
    def zero(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.n == other.n and self.basis == other.basis

    def __hash__(self):
        return hash((self.n, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim} in {self.n})"

    def contains(self, v: Sequence) -> bool:
        if self.dim == self.n:
            return True
        return Subspace(self.field, self.n, list(self.basis) + [v]).dim == self.dim

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def __lt__(self, other: "Subspace") -> bool:
        return self.dim < other.dim and self <= other

    def join(self, other: "Subspace") -> "Subspace":
        return Subspace(self.field, self.n, list(self.basis) + list(other.basis))

    def annihilator(self) -> list[tuple]:
        """Row vectors w with w . u = 0 for all u in the subspace."""
        if not self.basis:
            return list(Matrix.identity(self.field, self.n).rows)
        return Matrix(self.field, self.dim, self.n, self.basis).nullspace()

    def intersect(self, other: "Subspace") -> "Subspace":
        ann = self.annihilator() + other.annihilator()
        if not ann:
            return Subspace.full(self.field, self.n)
        return Subspace(self.field, self.n, Matrix(self.field, len(ann), self.n, ann).nullspace())

    def image(self, A: Matrix) -> "Subspace":
        return Subspace(self.field, A.nrows, [A.apply(b) for b in self.basis])

    def preimage(self, A: Matrix) -> "Subspace":
        """{v : A v in self}, a subspace of field^(A.ncols)."""
        ann = self.annihilator()
        if not ann:
            return Subspace.full(self.field, A.ncols)
        W = Matrix(self.field, len(ann), self.n, ann) @ A
        return Subspace(self.field, A.ncols, W.nullspace())

    def complement_basis(self) -> list[tuple]:
        """Standard basis vectors completing self to the whole space (greedy, deterministic)."""
        F = self.field
        current = list(self.basis)
        out = []
        dim = self.dim
        for i in range(self.n):
            e = tuple(F.one if j == i else F.zero for j in range(self.n))
            trial = Subspace(F, self.n, current + [e])
            if trial.dim > dim:
                current.append(e)
                out.append(e)
                dim += 1
            if dim == self.n:
                break
        return out

    def coordinates(self, v: Sequence) -> tuple:
        """Coordinates of v in the stored basis; v must lie in the subspace."""
        A = Matrix.from_columns(self.field, self.n, self.basis) if self.basis else Matrix(self.field, self.n, 0)
        x = A.solve(v)
        if x is None:
            raise ValueError("vector not in subspace")
        return x

    def elements(self) -> Iterator[tuple]:
        """All vectors of the subspace; finite fields only."""
        F = self.field
        if not isinstance(F, PrimeField):
            raise TypeError("element enumeration needs a finite field")
        for coeffs in itertools.product(F.elements(), repeat=self.dim):
            v = [F.zero] * self.n
            for c, b in zip(coeffs, self.basis):
                if c:
                    v = [F.add(x, F.mul(c, y)) for x, y in zip(v, b)]
            yield tuple(v)


def all_subspaces(field: PrimeField, n: int) -> list[Subspace]:
    """Every subspace of GF(p)^n, enumerated through RREF pivot patterns."""
    out = []
    p = field.p
    for k in range(n + 1):
        for pivots in itertools.combinations(range(n), k):
            free_slots = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pivots]
            for values in itertools.product(range(p), repeat=len(free_slots)):
                rows = [[0] * n for _ in range(k)]
                for r, pc in enumerate(pivots):
                    rows[r][pc] = 1
                for (r, c), v in zip(free_slots, values):
                    rows[r][c] = v
                out.append(Subspace(field, n, rows))
    return out
