"""
Exact Linear Algebra
Rank, Hermite and Smith normal forms and lattice membership over Z, Q and F_p
"""

from fractions import Fraction
from typing import Any, Hashable, Iterable, Optional, Sequence

from sympy import Matrix
from sympy.polys.domains import ZZ, QQ, GF
from sympy.polys.matrices import DomainMatrix
from sympy.matrices.normalforms import smith_normal_decomp

from runtime.errors import RingMismatchError, InputError


Scalar = int | Fraction


class DenseMatrix:
    """
    Row-major exact matrix whose entries share one ring

    ring is "Z", "Q" or "Fp:<p>"; entries are ints (Z, F_p residues in [0, p))
    or Fractions in lowest terms (Q).
    """

    __slots__ = ('ring', 'rows', 'ncols')

    def __init__(self, rows: Sequence[Sequence[Scalar]], ring: str = "Z", ncols: Optional[int] = None):
        self.ring = ring
        self.ncols = len(rows[0]) if rows else (ncols or 0)
        if any(len(r) != self.ncols for r in rows):
            raise InputError("matrix rows must have equal length")
        self.rows = [[_normalize(v, ring) for v in r] for r in rows]

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @classmethod
    def identity(cls, n: int, ring: str = "Z") -> "DenseMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], ring, ncols=n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, ring: str = "Z") -> "DenseMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ring, ncols=ncols)

    def __matmul__(self, other: "DenseMatrix") -> "DenseMatrix":
        if self.ncols != other.nrows:
            raise InputError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
        out = [[sum((a * b for a, b in zip(row, col)), 0) for col in cols] for row in self.rows]
        return DenseMatrix(out, self.ring, ncols=other.ncols)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DenseMatrix) and self.shape == other.shape and self.rows == other.rows

    def __repr__(self) -> str:
        return f"DenseMatrix({self.rows!r}, ring={self.ring!r})"

    def to_json(self) -> dict[str, Any]:
        return {'ring': self.ring, 'rows': [[str(v) for v in r] for r in self.rows]}


def _normalize(value: Scalar, ring: str) -> Scalar:
    if ring == "Z":
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise RingMismatchError(f"non-integer entry {value} in an integer matrix")
            return value.numerator
        return int(value)
    if ring == "Q":
        return Fraction(value)
    p = int(ring[3:])
    if isinstance(value, Fraction):
        return value.numerator * pow(value.denominator, -1, p) % p
    return int(value) % p


def _domain(ring: str):
    if ring == "Z":
        return ZZ
    if ring == "Q":
        return QQ
    return GF(int(ring[3:]), symmetric=False)


def to_domain_matrix(m: DenseMatrix, ring: Optional[str] = None) -> DomainMatrix:
    """Sparse sympy DomainMatrix holding the same entries"""
    ring = ring or m.ring
    K = _domain(ring)
    data: dict[int, dict[int, Any]] = {}
    for i, row in enumerate(m.rows):
        entries = {}
        for j, v in enumerate(row):
            if not v:
                continue
            if ring == "Q":
                f = Fraction(v)
                entries[j] = QQ(f.numerator, f.denominator)
            else:
                entries[j] = K(_normalize(v, ring))
        if entries:
            data[i] = entries
    return DomainMatrix(data, m.shape, K)


def rank(m: DenseMatrix) -> int:
    """
    Rank over a field

    Args:
        m: matrix over Q or F_p

    Returns:
        The rank, computed by sparse row reduction
    """
    if m.ring == "Z":
        raise RingMismatchError("rank over Z is not defined here; embed in Q or use the HNF")
    if m.nrows == 0 or m.ncols == 0:
        return 0
    return to_domain_matrix(m).rank()


def rank_over(m: DenseMatrix, ring: str) -> int:
    """Rank of an integer or rational matrix after mapping into Q or F_p"""
    if m.nrows == 0 or m.ncols == 0:
        return 0
    if ring == "Z":
        raise RingMismatchError("rank needs a field")
    return to_domain_matrix(m, ring).rank()


def hermite_normal_form(m: DenseMatrix) -> tuple[DenseMatrix, DenseMatrix]:
    """
    Row-style Hermite normal form with its transform

    Pivots are positive, entries above a pivot lie in [0, pivot), zero rows sit at the
    bottom. Works on [m | I] with extended-gcd row operations.

    Args:
        m: integer matrix

    Returns:
        (H, U) with U unimodular and H = U @ m
    """
    if m.ring != "Z":
        raise RingMismatchError("HNF needs an integer matrix")
    r, c = m.shape
    a = [list(row) for row in m.rows]
    u = [[1 if i == j else 0 for j in range(r)] for i in range(r)]

    def combine(i: int, k: int, p: int, q: int, s: int, t: int) -> None:
        # rows (i, k) <- (p*row_i + q*row_k, s*row_i + t*row_k)
        for mat in (a, u):
            ri, rk = mat[i], mat[k]
            mat[i] = [p * x + q * y for x, y in zip(ri, rk)]
            mat[k] = [s * x + t * y for x, y in zip(ri, rk)]

    pivot_row = 0
    for col in range(c):
        if pivot_row >= r:
            break
        for k in range(pivot_row + 1, r):
            if a[k][col] == 0:
                continue
            x, y = a[pivot_row][col], a[k][col]
            g, p, q = _xgcd(x, y)
            combine(pivot_row, k, p, q, -y // g, x // g)
        if a[pivot_row][col] == 0:
            continue
        if a[pivot_row][col] < 0:
            a[pivot_row] = [-v for v in a[pivot_row]]
            u[pivot_row] = [-v for v in u[pivot_row]]
        piv = a[pivot_row][col]
        for k in range(pivot_row):
            f = a[k][col] // piv
            if f:
                a[k] = [x - f * y for x, y in zip(a[k], a[pivot_row])]
                u[k] = [x - f * y for x, y in zip(u[k], u[pivot_row])]
        pivot_row += 1

    return DenseMatrix(a, "Z", ncols=c), DenseMatrix(u, "Z", ncols=r)


def _xgcd(x: int, y: int) -> tuple[int, int, int]:
    """g = gcd(x, y) > 0 and p*x + q*y = g"""
    old_r, r = x, y
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hnf_rows(m: DenseMatrix) -> list[list[int]]:
    """Nonzero rows of the HNF: a canonical basis of the row lattice"""
    h, _ = hermite_normal_form(m)
    return [row for row in h.rows if any(row)]


def smith_normal_form(m: DenseMatrix) -> tuple[DenseMatrix, DenseMatrix, DenseMatrix]:
    """
    Smith normal form with transforms

    Args:
        m: integer matrix

    Returns:
        (D, U, V) with D = U @ m @ V diagonal, d_i | d_(i+1) and d_i >= 0
    """
    if m.ring != "Z":
        raise RingMismatchError("SNF needs an integer matrix")
    r, c = m.shape
    if r == 0 or c == 0:
        return DenseMatrix.zeros(r, c), DenseMatrix.identity(r), DenseMatrix.identity(c)
    d, s, t = smith_normal_decomp(Matrix(m.rows), domain=ZZ)
    dd = [[int(v) for v in row] for row in d.tolist()]
    ss = [[int(v) for v in row] for row in s.tolist()]
    tt = [[int(v) for v in row] for row in t.tolist()]
    for i in range(min(r, c)):
        if dd[i][i] < 0:
            dd[i] = [-v for v in dd[i]]
            ss[i] = [-v for v in ss[i]]
    return DenseMatrix(dd, "Z", ncols=c), DenseMatrix(ss, "Z", ncols=r), DenseMatrix(tt, "Z", ncols=c)


def elementary_divisors(m: DenseMatrix) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form"""
    d, _, _ = smith_normal_form(m)
    return [d.rows[i][i] for i in range(min(d.shape)) if d.rows[i][i]]


def lattice_membership(basis: DenseMatrix, target: Sequence[int]) -> Optional[list[int]]:
    """
    Integer coefficients expressing target in the row lattice of basis

    Args:
        basis: integer matrix whose rows generate the lattice
        target: integer vector of the same length

    Returns:
        Coefficients c with sum c_j * basis_j == target, or None
    """
    if len(target) != basis.ncols:
        raise InputError(f"target length {len(target)} does not match {basis.ncols} columns")
    h, u = hermite_normal_form(basis)
    rest = [int(v) for v in target]
    quotients: list[int] = []
    for row in h.rows:
        piv = next((j for j, v in enumerate(row) if v), None)
        if piv is None:
            quotients.append(0)
            continue
        if any(rest[j] for j in range(piv)):
            return None
        q, rem = divmod(rest[piv], row[piv])
        if rem:
            return None
        quotients.append(q)
        if q:
            rest = [x - q * y for x, y in zip(rest, row)]
    if any(rest):
        return None
    return [sum(q * u.rows[k][j] for k, q in enumerate(quotients)) for j in range(basis.nrows)]


def left_kernel(m: DenseMatrix) -> list[list[int]]:
    """Z-basis of {v : v @ m = 0}, read from the HNF transform"""
    h, u = hermite_normal_form(m)
    return [u.rows[i] for i, row in enumerate(h.rows) if not any(row)]


def matrix_from_sparse_rows(
    rows: Iterable[dict[Hashable, Scalar]],
    ring: str = "Z",
    keys: Optional[list[Hashable]] = None,
) -> tuple[DenseMatrix, list[Hashable]]:
    """
    Assemble sparse rows into a matrix over a shared sorted key set

    Args:
        rows: coordinate dictionaries
        ring: ring of the result
        keys: explicit column order; defaults to the sorted union of keys

    Returns:
        (matrix, column keys)
    """
    rows = list(rows)
    if keys is None:
        keys = sorted({k for row in rows for k in row}, key=_sort_key)
    position = {k: i for i, k in enumerate(keys)}
    dense = []
    for row in rows:
        line: list[Scalar] = [0] * len(keys)
        for k, v in row.items():
            if v:
                line[position[k]] = v
        dense.append(line)
    return DenseMatrix(dense, ring, ncols=len(keys)), keys


def _sort_key(key: Hashable) -> Any:
    if isinstance(key, tuple):
        return (2, tuple(_sort_key(k) for k in key))
    if isinstance(key, int):
        return (0, key)
    return (1, str(key))


def sparse_rank(rows: Iterable[dict[Hashable, Scalar]], ring: str) -> int:
    """
    Rank over Q or F_p of coordinate dictionaries, without densifying

    Args:
        rows: one dictionary per vector
        ring: "Q" or "Fp:<p>"
    """
    if ring == "Z":
        raise RingMismatchError("rank needs a field")
    K = _domain(ring)
    columns: dict[Hashable, int] = {}
    data: dict[int, dict[int, Any]] = {}
    count = 0
    for row in rows:
        entries = {}
        for key, v in row.items():
            value = _normalize(v, ring)
            if not value:
                continue
            col = columns.setdefault(key, len(columns))
            if ring == "Q":
                entries[col] = QQ(value.numerator, value.denominator)
            else:
                entries[col] = K(value)
        if entries:
            data[count] = entries
        count += 1
    if not data:
        return 0
    return DomainMatrix(data, (count, len(columns)), K).rank()


def hnf_coordinates(hnf: Sequence[Sequence[int]], target: Sequence[int]) -> Optional[list[int]]:
    """
    Coefficients of target in the basis given by nonzero HNF rows

    Back-substitution against the echelon pivots; None when target is outside the lattice.
    """
    rest = [int(v) for v in target]
    coords: list[int] = []
    for row in hnf:
        piv = next(j for j, v in enumerate(row) if v)
        if any(rest[j] for j in range(piv)):
            return None
        q, rem = divmod(rest[piv], row[piv])
        if rem:
            return None
        coords.append(q)
        if q:
            rest = [x - q * y for x, y in zip(rest, row)]
    return None if any(rest) else coords
