"""Exact integer and rational linear algebra.

Everything here works over Python ints and fractions.Fraction; there is no
floating point anywhere in this package.  Matrices are immutable tuples of
tuples of ints (rows), vectors are tuples of ints.  Intermediate entries of
the normal-form algorithms can exceed machine words, which is why arbitrary
precision is non-negotiable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


class SingularMatrixError(ValueError):
    """Square system has no unique solution."""


class NonIntegralSolutionError(ValueError):
    """A rational solution exists but is not integral where one was required."""


def as_matrix(rows) -> Matrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if m and any(len(row) != len(m[0]) for row in m):
        raise ValueError("matrix rows have unequal lengths")
    return m


def dims(m: Matrix) -> tuple[int, int]:
    return len(m), len(m[0]) if m else 0


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(r: int, c: int) -> Matrix:
    return tuple((0,) * c for _ in range(r))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(m: Matrix, v: Vector) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def vec_mat(v: Vector, m: Matrix) -> Vector:
    return tuple(sum(v[i] * m[i][j] for i in range(len(v))) for j in range(len(m[0])))


def det(m: Matrix) -> int:
    """Determinant of a square integer matrix, exact."""
    n, c = dims(m)
    if n != c:
        raise ValueError("determinant requires a square matrix")
    rows = [[Fraction(x) for x in row] for row in m]
    sign = 1
    for col in range(n):
        pivot = next((i for i in range(col, n) if rows[i][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            sign = -sign
        for i in range(col + 1, n):
            if rows[i][col]:
                f = rows[i][col] / rows[col][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[col])]
    value = Fraction(sign)
    for i in range(n):
        value *= rows[i][i]
    assert value.denominator == 1
    return int(value)


# ---------------------------------------------------------------------------
# Hermite and Smith normal forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SmithDecomposition:
    """U @ M @ V == D with U, V unimodular and D diagonal, d1 | d2 | ... >= 0."""

    U: Matrix
    D: Matrix
    V: Matrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        r, c = dims(self.D)
        return tuple(self.D[i][i] for i in range(min(r, c)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def _pivot_position(m, start_r, start_c):
    # Smallest nonzero absolute value, ties broken by lowest (row, col) index.
    best = None
    for i in range(start_r, len(m)):
        for j in range(start_c, len(m[0])):
            if m[i][j] and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                best = (i, j)
    return best


def smith_normal_form(m_in: Matrix) -> SmithDecomposition:
    """Smith normal form with full unimodular transforms.

    Deterministic: the pivot is always the entry of smallest nonzero absolute
    value (ties by lowest index), so the transforms are reproducible.
    """
    m_in = as_matrix(m_in)
    r, c = dims(m_in)
    m = [list(row) for row in m_in]
    u = [list(row) for row in identity(r)]
    v = [list(row) for row in identity(c)]

    def row_sub(i, j, q):  # row i -= q * row j
        m[i] = [a - q * b for a, b in zip(m[i], m[j])]
        u[i] = [a - q * b for a, b in zip(u[i], u[j])]

    def col_sub(i, j, q):  # col i -= q * col j
        for row in m:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(r, c):
        pos = _pivot_position(m, t, t)
        if pos is None:
            break
        swap_rows(t, pos[0])
        swap_cols(t, pos[1])
        while True:
            # Euclidean elimination of row t and column t around the pivot.
            for i in range(t + 1, r):
                if m[i][t]:
                    row_sub(i, t, m[i][t] // m[t][t])
            for j in range(t + 1, c):
                if m[t][j]:
                    col_sub(j, t, m[t][j] // m[t][t])
            residues = [i for i in range(t + 1, r) if m[i][t]]
            if residues:
                swap_rows(t, min(residues, key=lambda i: (abs(m[i][t]), i)))
                continue
            residues = [j for j in range(t + 1, c) if m[t][j]]
            if residues:
                swap_cols(t, min(residues, key=lambda j: (abs(m[t][j]), j)))
                continue
            # Pivot must divide the rest of the block for the chain to hold.
            bad = next(
                (
                    i
                    for i in range(t + 1, r)
                    if any(m[i][j] % m[t][t] for j in range(t + 1, c))
                ),
                None,
            )
            if bad is None:
                break
            row_sub(t, bad, -1)
        t += 1

    for i in range(min(r, c)):
        if m[i][i] < 0:
            m[i] = [-x for x in m[i]]
            u[i] = [-x for x in u[i]]

    return SmithDecomposition(U=as_matrix(u), D=as_matrix(m), V=as_matrix(v))


def hermite_normal_form(m_in: Matrix) -> tuple[Matrix, Matrix]:
    """Row-style Hermite normal form: returns (H, U) with U @ M == H.

    Pivots are positive; entries above a pivot are reduced into [0, pivot).
    """
    m_in = as_matrix(m_in)
    r, c = dims(m_in)
    m = [list(row) for row in m_in]
    u = [list(row) for row in identity(r)]

    def row_sub(i, j, q):
        m[i] = [a - q * b for a, b in zip(m[i], m[j])]
        u[i] = [a - q * b for a, b in zip(u[i], u[j])]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    row = 0
    for col in range(c):
        candidates = [i for i in range(row, r) if m[i][col]]
        if not candidates:
            continue
        swap_rows(row, min(candidates, key=lambda i: (abs(m[i][col]), i)))
        while True:
            for i in range(row + 1, r):
                if m[i][col]:
                    row_sub(i, row, m[i][col] // m[row][col])
            residues = [i for i in range(row + 1, r) if m[i][col]]
            if not residues:
                break
            swap_rows(row, min(residues, key=lambda i: (abs(m[i][col]), i)))
        if m[row][col] < 0:
            m[row] = [-x for x in m[row]]
            u[row] = [-x for x in u[row]]
        for i in range(row):
            if m[i][col]:
                row_sub(i, row, m[i][col] // m[row][col])
        row += 1
        if row == r:
            break

    return as_matrix(m), as_matrix(u)


def is_unimodular(m: Matrix) -> bool:
    r, c = dims(m)
    return r == c and abs(det(m)) == 1


# ---------------------------------------------------------------------------
# Rational solving
# ---------------------------------------------------------------------------

def solve_rational(m: Matrix, b: Matrix) -> tuple[tuple[Fraction, ...], ...]:
    """Solve M @ X = B exactly for square invertible M.

    Raises SingularMatrixError when M is singular; integrality of the result
    is the caller's concern (see solve_integral).
    """
    n, c = dims(m)
    if n != c:
        raise ValueError("solve_rational requires a square matrix")
    if len(b) != n:
        raise ValueError("right-hand side has wrong number of rows")
    width = len(b[0]) if b else 0
    aug = [
        [Fraction(x) for x in m[i]] + [Fraction(x) for x in b[i]] for i in range(n)
    ]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col]), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b_ for a, b_ in zip(aug[i], aug[col])]
    return tuple(tuple(aug[i][n : n + width]) for i in range(n))


def solve_integral(m: Matrix, b: Matrix) -> Matrix:
    """Like solve_rational but requires (and returns) an integer solution."""
    x = solve_rational(m, b)
    if any(entry.denominator != 1 for row in x for entry in row):
        raise NonIntegralSolutionError("rational solution is not integral")
    return tuple(tuple(int(entry) for entry in row) for row in x)


def invert_unimodular(m: Matrix) -> Matrix:
    return solve_integral(m, identity(len(m)))


# ---------------------------------------------------------------------------
# Mod-p linear algebra
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ModPSubspace:
    """A subspace of (Z_p)^n given by a reduced-echelon basis."""

    p: int
    ambient_dim: int
    basis: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vec: Vector) -> bool:
        if len(vec) != self.ambient_dim:
            raise ValueError("vector has wrong dimension")
        v = [x % self.p for x in vec]
        for row in self.basis:
            piv = next(j for j, x in enumerate(row) if x)
            if v[piv]:
                f = v[piv]
                v = [(a - f * b) % self.p for a, b in zip(v, row)]
        return not any(v)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")


def _rref_mod_p(rows, p):
    """Reduced row echelon form mod p; returns (nonzero rows, pivot columns)."""
    m = [[x % p for x in row] for row in rows]
    n_cols = len(m[0]) if m else 0
    pivots = []
    rank = 0
    for col in range(n_cols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], p - 2, p) if p > 2 else m[rank][col]
        m[rank] = [(x * inv) % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[rank])]
        pivots.append(col)
        rank += 1
    return [tuple(row) for row in m[:rank]], pivots


def modp_rank(m: Matrix, p: int) -> int:
    _require_prime(p)
    if not m:
        return 0
    rows, _ = _rref_mod_p(list(m), p)
    return len(rows)


def modp_row_space(m: Matrix, p: int) -> ModPSubspace:
    _require_prime(p)
    rows, _ = _rref_mod_p(list(m), p)
    return ModPSubspace(p=p, ambient_dim=len(m[0]) if m else 0, basis=tuple(rows))


def modp_kernel(m: Matrix, p: int) -> ModPSubspace:
    """Null space of M mod p (column-vector convention: M v = 0)."""
    _require_prime(p)
    r, c = dims(m)
    rows, pivots = _rref_mod_p(list(m), p)
    free = [j for j in range(c) if j not in pivots]
    basis = []
    for f in free:
        v = [0] * c
        v[f] = 1
        for i, piv in enumerate(pivots):
            v[piv] = (-rows[i][f]) % p
        basis.append(v)
    reduced, _ = _rref_mod_p(basis, p) if basis else ([], [])
    return ModPSubspace(p=p, ambient_dim=c, basis=tuple(reduced))


def modp_cokernel(m: Matrix, p: int) -> ModPSubspace:
    """(Z_p)^rows modulo the column space of M, via canonical representatives.

    The representatives are the standard basis vectors at the non-pivot
    coordinates of the column space's reduced echelon form.
    """
    _require_prime(p)
    r, c = dims(m)
    _, pivots = _rref_mod_p([list(col) for col in transpose(m)] or [[0] * r], p)
    reps = []
    for j in range(r):
        if j not in pivots:
            v = [0] * r
            v[j] = 1
            reps.append(tuple(v))
    return ModPSubspace(p=p, ambient_dim=r, basis=tuple(reps))
