"""Linear algebra over finite fields: matrices, canonical subspaces, pairings.

Subspaces are canonical reduced-row-echelon bases, generated directly per
pivot-column pattern so enumeration never needs deduplication.  Three pairing
families are provided: alternating (symplectic), hermitian for a quadratic
extension, and the twisted pairing (a, b) -> sum a_i b_i^p which is linear in
the first slot and p-semilinear in the second.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .errors import BadParameter, DimensionMismatch, FieldTooLarge, MixedFields
from .ffield import FieldElement, FieldSpec, conj

Vector = tuple[FieldElement, ...]


def _coerce_row(field: FieldSpec, row: Iterable) -> Vector:
    return tuple(field.element(x) for x in row)


class Matrix:
    """Immutable row-major matrix with entries in one field."""

    __slots__ = ("field", "nrows", "ncols", "rows", "_hash")

    def __init__(self, field: FieldSpec, rows: Sequence[Sequence[FieldElement]]):
        self.field = field
        self.rows: tuple[Vector, ...] = tuple(tuple(r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != self.ncols:
                raise DimensionMismatch("ragged rows")
            for x in r:
                if x.field is not field and x.field != field:
                    raise MixedFields(f"{x.field} vs {field}")
        self._hash = hash((field, self.rows))

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Iterable[Iterable]) -> "Matrix":
        return cls(field, [_coerce_row(field, r) for r in rows])

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: FieldSpec, m: int, n: int) -> "Matrix":
        zero = field.zero
        return cls(field, [[zero] * n for _ in range(m)])

    def entry(self, i: int, j: int) -> FieldElement:
        return self.rows[i][j]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self.rows)) if self.rows else [])

    def conj(self) -> "Matrix":
        return Matrix(self.field, [[conj(x) for x in r] for r in self.rows])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.ncols} cols vs {other.nrows} rows")
        cols = other.transpose().rows
        out = []
        for r in self.rows:
            out.append(
                [_dot(r, c) for c in cols]
            )
        return Matrix(self.field, out)

    def is_invertible(self) -> bool:
        if self.nrows != self.ncols:
            return False
        return rref(self)[1] == self.nrows

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(x.serialize() for x in r) for r in self.rows)
        return f"Matrix({self.field!r}, [{body}])"


def _dot(x: Sequence[FieldElement], y: Sequence[FieldElement]) -> FieldElement:
    field = x[0].field
    add, mul = field.add_table, field.mul_table
    acc = 0
    for a, b in zip(x, y):
        acc = add[acc][mul[a.idx][b.idx]]
    return field.elements[acc]


def _rref_rows(field: FieldSpec, rows: list[list[FieldElement]]) -> tuple[list[list[FieldElement]], list[int]]:
    """In-place Gauss-Jordan; returns (rows, pivot columns)."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = None
        for k in range(r, nrows):
            if rows[k][c]:
                pivot = k
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][c].inv()
        rows[r] = [lead * x for x in rows[r]]
        for k in range(nrows):
            if k != r and rows[k][c]:
                f = rows[k][c]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rref(mat: Matrix) -> tuple[Matrix, int]:
    """The unique reduced row-echelon form of mat, with its rank."""
    rows = [list(r) for r in mat.rows]
    rows, pivots = _rref_rows(mat.field, rows)
    return Matrix(mat.field, rows), len(pivots)


class Subspace:
    """A subspace of F_q^n, stored as its canonical RREF basis.

    Two Subspace values are equal exactly when they are the same subspace,
    because the RREF basis with recorded pivot columns is a complete
    invariant.
    """

    __slots__ = ("field", "ambient", "dim", "rows", "pivots", "_hash")

    def __init__(self, field: FieldSpec, ambient: int, rows: tuple[Vector, ...], pivots: tuple[int, ...]):
        self.field = field
        self.ambient = ambient
        self.rows = rows
        self.dim = len(rows)
        self.pivots = pivots
        self._hash = hash((field, ambient, rows))

    @classmethod
    def spanned_by(cls, field: FieldSpec, vectors: Iterable[Iterable], ambient: int | None = None) -> "Subspace":
        rows = [list(_coerce_row(field, v)) for v in vectors]
        if ambient is None:
            if not rows:
                raise BadParameter("ambient dimension required for empty span")
            ambient = len(rows[0])
        for r in rows:
            if len(r) != ambient:
                raise DimensionMismatch("vector length differs from ambient dimension")
        rows, pivots = _rref_rows(field, rows)
        basis = tuple(tuple(r) for r in rows[: len(pivots)])
        return cls(field, ambient, basis, tuple(pivots))

    def vectors(self) -> Iterator[Vector]:
        """All q^dim vectors of the span, zero included, deterministic order."""
        field = self.field
        add, mul = field.add_table, field.mul_table
        elems = field.elements
        for coeffs in product(range(field.order), repeat=self.dim):
            acc = [0] * self.ambient
            for c, row in zip(coeffs, self.rows):
                if c:
                    for j, x in enumerate(row):
                        acc[j] = add[acc[j]][mul[c][x.idx]]
            yield tuple(elems[i] for i in acc)

    def basis_matrix(self) -> Matrix:
        return Matrix(self.field, self.rows)

    def serialize(self) -> list[str]:
        return [",".join(str(c) for x in row for c in x.coeffs) if False else row_str for row_str in (";".join(x.serialize() for x in row) for row in self.rows)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient == other.ambient
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, rows={self.rows!r})"


def subspace_census(q: int, n: int, r: int) -> int:
    """Number of r-dim subspaces of F_q^n, by summing pivot-pattern cell sizes.

    Independent of any closed-form count: each RREF pivot pattern contributes
    q^(number of free entries).
    """
    if not 0 <= r <= n:
        raise BadParameter(f"need 0 <= r <= n, got r={r}, n={n}")
    total = 0
    for pattern in combinations(range(n), r):
        pivset = set(pattern)
        free = 0
        for i, piv in enumerate(pattern):
            free += sum(1 for c in range(piv + 1, n) if c not in pivset)
        total += q**free
    return total


def enumerate_subspaces(
    field: FieldSpec, n: int, r: int, max_search: int | None = None
) -> Iterator[Subspace]:
    """Yield every r-dimensional subspace of F_q^n exactly once.

    Generation is by pivot-column pattern (patterns in lexicographic order),
    with free entries filled in field enumeration order, so output order is
    deterministic and every basis is already canonical RREF.
    """
    if not 0 <= r <= n:
        raise BadParameter(f"need 0 <= r <= n, got r={r}, n={n}")
    if max_search is not None:
        census = subspace_census(field.order, n, r)
        if census > max_search:
            raise FieldTooLarge(
                f"{census} subspaces exceeds search limit {max_search}"
            )
    elems = field.elements
    zero, one = field.zero, field.one
    for pattern in combinations(range(n), r):
        pivset = set(pattern)
        free_positions = [
            (i, c)
            for i, piv in enumerate(pattern)
            for c in range(piv + 1, n)
            if c not in pivset
        ]
        base = [[zero] * n for _ in range(r)]
        for i, piv in enumerate(pattern):
            base[i][piv] = one
        for fill in product(range(field.order), repeat=len(free_positions)):
            rows = [row[:] for row in base]
            for (i, c), v in zip(free_positions, fill):
                rows[i][c] = elems[v]
            yield Subspace(field, n, tuple(tuple(row) for row in rows), pattern)


class Pairing:
    """Base for bi-additive forms on F^(2n) with an isotropy test.

    Isotropy of a subspace is decided on ordered basis pairs; that reduction
    is valid for all three families here because each is additive in both
    slots and scales by lambda in the first slot and by either lambda,
    conj(lambda) or lambda^p in the second.
    """

    kind: str = "abstract"

    def __init__(self, field: FieldSpec, n: int):
        if n < 1:
            raise BadParameter(f"need n >= 1, got {n}")
        self.field = field
        self.n = n
        self.dim = 2 * n

    def eval(self, x: Sequence[FieldElement], y: Sequence[FieldElement]) -> FieldElement:
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch(
                f"vectors must have length {self.dim}, got {len(x)} and {len(y)}"
            )
        return self._eval(x, y)

    def _eval(self, x, y):  # pragma: no cover - overridden
        raise NotImplementedError

    def vanishes_on(self, vectors: Sequence[Sequence[FieldElement]]) -> bool:
        """True when every ordered pair of the given vectors pairs to zero."""
        zero = self.field.zero
        for v in vectors:
            for w in vectors:
                if self.eval(v, w) != zero:
                    return False
        return True

    def is_isotropic(self, s: Subspace) -> bool:
        if s.ambient != self.dim:
            raise DimensionMismatch(
                f"subspace ambient {s.ambient} does not match pairing dimension {self.dim}"
            )
        return self.vanishes_on(s.rows)


def _check_gram(field: FieldSpec, n: int, gram: Matrix) -> None:
    if gram.field != field or gram.nrows != 2 * n or gram.ncols != 2 * n:
        raise BadParameter("Gram matrix must be 2n x 2n over the pairing field")
    if not gram.is_invertible():
        raise BadParameter("Gram matrix must be invertible")


class SymplecticPairing(Pairing):
    """Alternating form; standard Gram is [[0, I], [-I, 0]]."""

    def __init__(self, field: FieldSpec, n: int, gram: Matrix | None = None):
        super().__init__(field, n)
        self.gram = gram
        self.kind = "symplectic-standard" if gram is None else "symplectic-gram"
        if gram is not None:
            _check_gram(field, n, gram)
            zero = field.zero
            for i in range(2 * n):
                if gram.entry(i, i) != zero:
                    raise BadParameter("alternating Gram matrix needs zero diagonal")
                for j in range(2 * n):
                    if gram.entry(i, j) != -gram.entry(j, i):
                        raise BadParameter("Gram matrix is not alternating")

    def _eval(self, x, y):
        if self.gram is None:
            field = self.field
            add, mul, neg = field.add_table, field.mul_table, field.neg_table
            n = self.n
            acc = 0
            for i in range(n):
                acc = add[acc][mul[x[i].idx][y[n + i].idx]]
                acc = add[acc][neg[mul[x[n + i].idx][y[i].idx]]]
            return field.elements[acc]
        return _gram_eval(self.gram, x, y, None)


class HermitianPairing(Pairing):
    """Hermitian form over F_{q^2}: (x, y) -> sum_i x_i * y_i^q.

    The optional Gram variant evaluates x G conj(y)^t; the antidiagonal G
    with identity blocks is the basis used to write the isotropic-subspace
    stabilizer as block upper-triangular matrices.
    """

    def __init__(self, field: FieldSpec, n: int, gram: Matrix | None = None):
        super().__init__(field, n)
        if field.conj_table is None:
            raise BadParameter("hermitian pairing needs a quadratic extension field")
        self.base_q = field.p ** (field.e // 2)
        self.gram = gram
        self.kind = "hermitian-standard" if gram is None else "hermitian-gram"
        if gram is not None:
            _check_gram(field, n, gram)
            if gram.conj().transpose() != gram:
                raise BadParameter("Gram matrix is not hermitian")

    def _eval(self, x, y):
        field = self.field
        cj = field.conj_table
        if self.gram is None:
            add, mul = field.add_table, field.mul_table
            acc = 0
            for a, b in zip(x, y):
                acc = add[acc][mul[a.idx][cj[b.idx]]]
            return field.elements[acc]
        return _gram_eval(self.gram, x, y, cj)


class TwistedSemilinearPairing(Pairing):
    """The pairing (a, b) -> sum_i a_i * b_i^p on F_{p^2}^(2n).

    Additive in both slots, F_{p^2}-linear in the first, p-semilinear in the
    second; the diagonal value on (a, b) in dimension 2 is a^(p+1) + b^(p+1).
    """

    def __init__(self, field: FieldSpec, n: int):
        super().__init__(field, n)
        if field.e != 2:
            raise BadParameter("twisted pairing is defined over F_{p^2}")
        self.kind = "twisted-semilinear"

    def _eval(self, x, y):
        field = self.field
        add, mul, frob = field.add_table, field.mul_table, field.frob_table
        acc = 0
        for a, b in zip(x, y):
            acc = add[acc][mul[a.idx][frob[b.idx]]]
        return field.elements[acc]


def _gram_eval(gram: Matrix, x, y, conj_table) -> FieldElement:
    field = gram.field
    add, mul = field.add_table, field.mul_table
    acc = 0
    for i, a in enumerate(x):
        if not a:
            continue
        row = gram.rows[i]
        inner = 0
        for j, b in enumerate(y):
            bj = b.idx if conj_table is None else conj_table[b.idx]
            if bj:
                inner = add[inner][mul[row[j].idx][bj]]
        acc = add[acc][mul[a.idx][inner]]
    return field.elements[acc]


def standard_symplectic_gram(field: FieldSpec, n: int) -> Matrix:
    """[[0, I_n], [-I_n, 0]]."""
    zero, one = field.zero, field.one
    rows = []
    for i in range(n):
        r = [zero] * (2 * n)
        r[n + i] = one
        rows.append(r)
    for i in range(n):
        r = [zero] * (2 * n)
        r[i] = -one
        rows.append(r)
    return Matrix(field, rows)


def antidiagonal_gram(field: FieldSpec, n: int) -> Matrix:
    """[[0, I_n], [I_n, 0]]; hermitian for any quadratic extension."""
    zero, one = field.zero, field.one
    rows = []
    for i in range(n):
        r = [zero] * (2 * n)
        r[n + i] = one
        rows.append(r)
    for i in range(n):
        r = [zero] * (2 * n)
        r[i] = one
        rows.append(r)
    return Matrix(field, rows)


def unit_vector(field: FieldSpec, n: int, i: int) -> Vector:
    v = [field.zero] * n
    v[i] = field.one
    return tuple(v)
