"""Exact dense linear algebra over the rationals or a prime field.

Everything downstream (hom spaces, kernels, the verification oracle) reduces to
row reduction of small dense matrices, so this module is deliberately plain:
immutable matrices with exact entries, reduced row echelon form with
deterministic tie-breaking (leftmost pivot, first nonzero row, free variables
zeroed), and subspaces stored in canonical RREF form so that equal subspaces
compare equal structurally.

Matrices act on the left of column vectors.  Zero-dimensional shapes
(0 x n, n x 0, 0 x 0) are legal everywhere: kernels and cokernels vanish
constantly in this domain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class FieldMismatchError(TypeError):
    """Raised when values from two different ground fields are mixed."""


class AmbientMismatchError(ValueError):
    """Raised when subspaces of different ambient dimension are combined."""


class FpElement:
    """Element of the prime field F_p.

    Supports the same operator set Fraction does, so matrix code is
    field-agnostic.  Mixing moduli raises FieldMismatchError.
    """

    __slots__ = ("val", "p")

    def __init__(self, val: int, p: int):
        self.val = val % p
        self.p = p

    def _coerce(self, other) -> "FpElement":
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise FieldMismatchError(f"mixing F_{self.p} with F_{other.p}")
            return other
        if isinstance(other, int):
            return FpElement(other, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.val + other.val, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.val - other.val, self.p)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(other.val - self.val, self.p)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.val * other.val, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.val == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return FpElement(self.val * pow(other.val, -1, self.p), self.p)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return FpElement(-self.val, self.p)

    def __pow__(self, n: int):
        return FpElement(pow(self.val, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.val, self.p))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return f"{self.val}"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class RationalField:
    """Arbitrary-precision rationals; the default ground field."""

    name: str = "rat"
    characteristic: int = 0

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def of(self, x) -> Fraction:
        if isinstance(x, FpElement):
            raise FieldMismatchError("cannot coerce an F_p value into the rationals")
        return Fraction(x)

    def parse(self, token: str) -> Fraction:
        return Fraction(token)


@dataclass(frozen=True)
class PrimeField:
    """The prime field F_p; p must be prime."""

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def name(self) -> str:
        return f"fp:{self.p}"

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self) -> FpElement:
        return FpElement(0, self.p)

    @property
    def one(self) -> FpElement:
        return FpElement(1, self.p)

    def of(self, x) -> FpElement:
        if isinstance(x, FpElement):
            if x.p != self.p:
                raise FieldMismatchError(f"mixing F_{self.p} with F_{x.p}")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return FpElement(x.numerator * pow(x.denominator, -1, self.p), self.p)
        return FpElement(int(x), self.p)

    def parse(self, token: str) -> FpElement:
        return self.of(Fraction(token))


RATIONALS = RationalField()

Field = RationalField | PrimeField


def field_from_name(name: str) -> Field:
    """Parse a field spec: "rat" or "fp:<p>"."""
    if name == "rat":
        return RATIONALS
    if name.startswith("fp:"):
        return PrimeField(int(name[3:]))
    raise ValueError(f"unknown field {name!r} (expected 'rat' or 'fp:<p>')")


@dataclass(frozen=True)
class Mat:
    """Immutable dense matrix; entries is a row-major tuple of row tuples."""

    field: Field
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix shape")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry grid does not match shape")

    @classmethod
    def from_rows(cls, field: Field, rows, ncols: int | None = None) -> "Mat":
        rows = [tuple(field.of(v) for v in row) for row in rows]
        if ncols is None:
            if not rows:
                raise ValueError("cannot infer column count of an empty matrix")
            ncols = len(rows[0])
        return cls(field, len(rows), ncols, tuple(rows))

    @classmethod
    def zero(cls, field: Field, rows: int, cols: int) -> "Mat":
        z = field.zero
        return cls(field, rows, cols, tuple(tuple(z for _ in range(cols)) for _ in range(rows)))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Mat":
        z, o = field.zero, field.one
        return cls(field, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ot = other.transpose().entries
        return Mat(
            self.field,
            self.rows,
            other.cols,
            tuple(
                tuple(sum((a * b for a, b in zip(row, col) if a and b), self.field.zero) for col in ot)
                for row in self.entries
            ),
        )

    def __add__(self, other: "Mat") -> "Mat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix sum")
        return Mat(
            self.field,
            self.rows,
            self.cols,
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: "Mat") -> "Mat":
        return self + other.scale(-self.field.one)

    def scale(self, c) -> "Mat":
        return Mat(self.field, self.rows, self.cols, tuple(tuple(c * v for v in r) for r in self.entries))

    def transpose(self) -> "Mat":
        return Mat(self.field, self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else tuple(() for _ in range(self.cols)))

    def apply(self, vec: tuple) -> tuple:
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum((a * b for a, b in zip(row, vec) if a and b), self.field.zero) for row in self.entries)

    def col(self, j: int) -> tuple:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list:
        return [self.col(j) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return not any(any(v for v in row) for row in self.entries)

    def trace(self):
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), self.field.zero)

    def rank(self) -> int:
        return rref(self)[2]

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def inverse(self) -> "Mat":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        sol = solve_matrix(self, Mat.identity(self.field, self.rows))
        if sol is None or (self @ sol != Mat.identity(self.field, self.rows)):
            raise ValueError("matrix is not invertible")
        return sol

    def hstack(self, other: "Mat") -> "Mat":
        if self.rows != other.rows:
            raise ValueError("row count mismatch in hstack")
        return Mat(self.field, self.rows, self.cols + other.cols,
                   tuple(r1 + r2 for r1, r2 in zip(self.entries, other.entries)))

    def vstack(self, other: "Mat") -> "Mat":
        if self.cols != other.cols:
            raise ValueError("column count mismatch in vstack")
        return Mat(self.field, self.rows + other.rows, self.cols, self.entries + other.entries)

    def __repr__(self):
        if self.rows == 0 or self.cols == 0:
            return f"Mat({self.rows}x{self.cols})"
        body = "; ".join(" ".join(str(v) for v in row) for row in self.entries)
        return f"Mat[{body}]"


def from_columns(field: Field, cols, nrows: int) -> Mat:
    """Build a matrix whose columns are the given vectors."""
    cols = list(cols)
    return Mat(field, nrows, len(cols),
               tuple(tuple(field.of(c[i]) for c in cols) for i in range(nrows)))


def block_diag(field: Field, blocks) -> Mat:
    blocks = list(blocks)
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = [[field.zero] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i, row in enumerate(b.entries):
            out[r0 + i][c0:c0 + b.cols] = row
        r0 += b.rows
        c0 += b.cols
    return Mat(field, rows, cols, tuple(tuple(r) for r in out))


def rref(m: Mat) -> tuple[Mat, tuple[int, ...], int]:
    """Reduced row echelon form, pivot column indices, and rank.

    Deterministic: leftmost pivot column, first nonzero row from the top,
    pivots normalized to 1, elimination above and below.
    """
    rows = [list(r) for r in m.entries]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        pr = next((i for i in range(r, m.rows) if rows[i][c]), None)
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        inv = m.field.one / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(m.rows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    out = Mat(m.field, m.rows, m.cols, tuple(tuple(row) for row in rows))
    return out, tuple(pivots), len(pivots)


@dataclass(frozen=True)
class Subspace:
    """Subspace of field^ambient_dim, basis stored as RREF rows (no zero rows).

    The canonical storage makes equality of subspaces plain structural
    equality: two bases spanning the same space produce identical values.
    """

    field: Field
    ambient_dim: int
    basis: tuple
    pivots: tuple[int, ...]

    @classmethod
    def from_vectors(cls, field: Field, ambient_dim: int, vectors) -> "Subspace":
        vectors = [tuple(field.of(v) for v in vec) for vec in vectors]
        for vec in vectors:
            if len(vec) != ambient_dim:
                raise AmbientMismatchError("vector length differs from ambient dimension")
        if not vectors:
            return cls(field, ambient_dim, (), ())
        m = Mat(field, len(vectors), ambient_dim, tuple(vectors))
        red, pivots, rank = rref(m)
        return cls(field, ambient_dim, red.entries[:rank], pivots)

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, (), ())

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> "Subspace":
        eye = Mat.identity(field, ambient_dim)
        return cls(field, ambient_dim, eye.entries, tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def reduce(self, vec: tuple) -> tuple:
        """Residual of vec modulo the subspace (zero iff vec lies in it)."""
        if len(vec) != self.ambient_dim:
            raise AmbientMismatchError("vector length differs from ambient dimension")
        v = list(vec)
        for row, p in zip(self.basis, self.pivots):
            if v[p]:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return tuple(v)

    def contains_vector(self, vec) -> bool:
        return not any(self.reduce(tuple(vec)))

    def contains(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise AmbientMismatchError("ambient dimensions differ")
        return all(self.contains_vector(v) for v in other.basis)

    def coordinates(self, vec) -> tuple:
        """Coefficients of vec in the RREF basis; raises if vec is outside."""
        vec = tuple(self.field.of(v) for v in vec)
        if not self.contains_vector(vec):
            raise ValueError("vector not in subspace")
        return tuple(vec[p] for p in self.pivots)

    def sum(self, other: "Subspace") -> "Subspace":
        if other.ambient_dim != self.ambient_dim:
            raise AmbientMismatchError("ambient dimensions differ")
        return Subspace.from_vectors(self.field, self.ambient_dim, list(self.basis) + list(other.basis))

    def intersect(self, other: "Subspace") -> "Subspace":
        if other.ambient_dim != self.ambient_dim:
            raise AmbientMismatchError("ambient dimensions differ")
        if self.is_full():
            return other
        if other.is_full():
            return self
        # v = x . basis_a = y . basis_b  <=>  (x, -y) in the left kernel of the
        # stacked basis matrix; project kernel elements back through basis_a.
        ra, rb = self.dim, other.dim
        if ra == 0 or rb == 0:
            return Subspace.zero(self.field, self.ambient_dim)
        stacked = Mat(self.field, ra + rb, self.ambient_dim, self.basis + other.basis)
        ker = kernel_basis(stacked.transpose())
        vecs = []
        for z in ker.basis:
            vecs.append(tuple(
                sum((z[i] * self.basis[i][j] for i in range(ra) if z[i]), self.field.zero)
                for j in range(self.ambient_dim)
            ))
        return Subspace.from_vectors(self.field, self.ambient_dim, vecs)

    def complement_projection(self) -> Mat:
        """Projection onto canonical complement coordinates (non-pivot slots).

        Rows are indexed by non-pivot coordinates j; applied to v it returns
        the non-pivot coordinates of v reduced modulo the subspace.  Its
        kernel is exactly this subspace.
        """
        z, o = self.field.zero, self.field.one
        nonpivots = [j for j in range(self.ambient_dim) if j not in set(self.pivots)]
        rows = []
        for j in nonpivots:
            row = [z] * self.ambient_dim
            row[j] = o
            for i, p in enumerate(self.pivots):
                row[p] = row[p] - self.basis[i][j]
            rows.append(tuple(row))
        return Mat(self.field, len(nonpivots), self.ambient_dim, tuple(rows))

    def complement_section(self) -> Mat:
        """Section of complement_projection: standard vectors at non-pivot slots."""
        z, o = self.field.zero, self.field.one
        nonpivots = [j for j in range(self.ambient_dim) if j not in set(self.pivots)]
        return Mat(self.field, self.ambient_dim, len(nonpivots),
                   tuple(tuple(o if i == j else z for j in nonpivots) for i in range(self.ambient_dim)))

    def basis_matrix_columns(self) -> Mat:
        """Basis vectors as the columns of a matrix (ambient_dim x dim)."""
        return from_columns(self.field, self.basis, self.ambient_dim)


def kernel_basis(m: Mat) -> Subspace:
    """Canonical basis of the null space {x : m x = 0}."""
    red, pivots, rank = rref(m)
    pivset = set(pivots)
    free = [j for j in range(m.cols) if j not in pivset]
    z, o = m.field.zero, m.field.one
    vecs = []
    for j in free:
        v = [z] * m.cols
        v[j] = o
        for i, p in enumerate(pivots):
            v[p] = -red.entries[i][j]
        vecs.append(tuple(v))
    return Subspace.from_vectors(m.field, m.cols, vecs)


def column_space(m: Mat) -> Subspace:
    return Subspace.from_vectors(m.field, m.rows, m.columns())


def solve(m: Mat, b) -> tuple | None:
    """A particular solution of m x = b, or None; free variables are zeroed."""
    b = tuple(m.field.of(v) for v in b)
    if len(b) != m.rows:
        raise ValueError("right-hand side length mismatch")
    aug = m.hstack(Mat(m.field, m.rows, 1, tuple((v,) for v in b)))
    red, pivots, rank = rref(aug)
    if m.cols in pivots:
        return None
    z = m.field.zero
    x = [z] * m.cols
    for i, p in enumerate(pivots):
        x[p] = red.entries[i][m.cols]
    return tuple(x)


def solve_matrix(a: Mat, b: Mat) -> Mat | None:
    """X with a @ X = b, or None if some column is unsolvable."""
    if a.rows != b.rows:
        raise ValueError("row count mismatch")
    aug = a.hstack(b)
    red, pivots, rank = rref(aug)
    if any(p >= a.cols for p in pivots):
        return None
    z = a.field.zero
    cols = []
    for j in range(b.cols):
        x = [z] * a.cols
        for i, p in enumerate(pivots):
            x[p] = red.entries[i][a.cols + j]
        cols.append(tuple(x))
    return from_columns(a.field, cols, a.cols)


def preimage(a: Mat, s: Subspace) -> Subspace:
    """{x : a x in s}, as a subspace of the domain of a."""
    if s.ambient_dim != a.rows:
        raise AmbientMismatchError("subspace ambient differs from codomain of map")
    proj = s.complement_projection()
    return kernel_basis(proj @ a)
