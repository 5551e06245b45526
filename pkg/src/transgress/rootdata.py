"""Root systems for the simple Lie types, in fundamental-weight coordinates.

Conventions.  Roots live in the Cartan subalgebra L(T) itself, so they are
the coroots of the usual dual-space presentation; concretely the Cartan
matrix stored here is the transpose of the familiar reference matrix
(Bourbaki node numbering).  For simply-laced types the two agree.  Every
vector is a tuple of integers giving its coordinates in the fundamental
weight basis, in which simple root i is row i of the Cartan matrix and the
weight lattice is all of Z^n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactlin import Matrix, Vector, as_matrix, solve_rational, transpose

FAMILIES = "ABCDEFG"

_RANK_CONSTRAINTS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

# Number of roots |Phi| by type, from dim G = |Phi| + rank.
_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}


@dataclass(frozen=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_CONSTRAINTS:
            raise ValueError(f"unknown family {self.family!r}; expected one of A-G")
        lo, hi = _RANK_CONSTRAINTS[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            bound = f">= {lo}" if hi is None else f"in [{lo}, {hi}]"
            raise ValueError(
                f"family {self.family} requires rank {bound}, got {self.rank}"
            )

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def root_count(self) -> int:
        return _ROOT_COUNTS[self.family](self.rank)

    @property
    def dim_group(self) -> int:
        return self.root_count + self.rank


def standard_cartan(t: LieType) -> Matrix:
    """The reference Cartan matrix (Bourbaki/Humphreys numbering), 0-indexed.

    E6/E7/E8: node 2 is the branch node attached to node 4; the long chain
    is 1-3-4-5-6(-7)(-8).
    """
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, down=-1, up=-1):  # 1-indexed; a[i][j] = down, a[j][i] = up
        a[i - 1][j - 1] = down
        a[j - 1][i - 1] = up

    if t.family == "A":
        for i in range(1, n):
            bond(i, i + 1)
    elif t.family == "B":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 1, n, down=-2, up=-1)
    elif t.family == "C":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 1, n, down=-1, up=-2)
    elif t.family == "D":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 2, n)
    elif t.family == "E":
        for i, j in [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]:
            bond(i, j)
        if n >= 7:
            bond(6, 7)
        if n == 8:
            bond(7, 8)
    elif t.family == "F":
        bond(1, 2)
        bond(2, 3, down=-2, up=-1)
        bond(3, 4)
    elif t.family == "G":
        bond(1, 2, down=-1, up=-3)
    return as_matrix(a)


def _half_lengths(cartan: Matrix) -> tuple[Fraction, ...]:
    """d_i = (alpha_i, alpha_i) / 2, normalized so long roots have d = 1.

    Determined by the symmetry constraint cartan[i][j] * d_j ==
    cartan[j][i] * d_i, propagated along the Dynkin graph.
    """
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i != j and cartan[i][j] and d[j] is None:
                    d[j] = d[i] * cartan[j][i] / cartan[i][j]
                    stack.append(j)
    top = max(d)
    return tuple(x / top for x in d)


@dataclass(frozen=True)
class RootSystem:
    lie_type: LieType
    cartan: Matrix
    simple_roots: tuple[Vector, ...]
    gram: tuple[tuple[Fraction, ...], ...]
    all_roots: frozenset[Vector]

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    def inner(self, u: Vector, v: Vector) -> Fraction:
        return sum(
            Fraction(u[i]) * self.gram[i][j] * v[j]
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def coroot_pairing(self, v: Vector, beta: Vector) -> Fraction:
        """2(v, beta) / (beta, beta)."""
        return 2 * self.inner(v, beta) / self.inner(beta, beta)

    def reflect(self, v: Vector, i: int) -> Vector:
        """Simple reflection s_i (1-based index) on weight coordinates."""
        if not 1 <= i <= self.rank:
            raise IndexError(f"simple-root index {i} out of range 1..{self.rank}")
        alpha = self.simple_roots[i - 1]
        coeff = v[i - 1]
        return tuple(x - coeff * a for x, a in zip(v, alpha))

    def is_positive_root(self, v: Vector) -> bool:
        coords = root_coordinates(self, v)
        return all(x >= 0 for x in coords) and any(coords)


def root_coordinates(rs: RootSystem, v: Vector) -> tuple[Fraction, ...]:
    """Coordinates of v in the simple-root basis."""
    col = solve_rational(transpose(rs.cartan), tuple((x,) for x in v))
    return tuple(row[0] for row in col)


def reflect(rs: RootSystem, v: Vector, i: int) -> Vector:
    return rs.reflect(v, i)


def generate_all_roots(
    cartan: Matrix, simple_roots: tuple[Vector, ...]
) -> frozenset[Vector]:
    """Closure of the simple roots under all simple reflections (BFS)."""
    n = len(cartan)

    def refl(v, i):
        return tuple(x - v[i] * a for x, a in zip(v, simple_roots[i]))

    roots = set(simple_roots)
    frontier = sorted(roots)
    while frontier:
        new = []
        for v in frontier:
            for i in range(n):
                w = refl(v, i)
                if w not in roots:
                    roots.add(w)
                    new.append(w)
        frontier = sorted(new)
    return frozenset(roots)


def build_root_system(t: LieType) -> RootSystem:
    cartan = transpose(standard_cartan(t))
    simple_roots = tuple(cartan)
    d = _half_lengths(cartan)
    # Gram matrix of the fundamental weights: (phi_i, alpha_j) = delta_ij d_j,
    # i.e. gram @ cartan^T = diag(d).
    n = t.rank
    diag = tuple(tuple(d[i] if i == j else Fraction(0) for j in range(n)) for i in range(n))
    inv_ct = solve_rational(transpose(cartan), as_matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)]))
    gram = tuple(
        tuple(sum(diag[i][k] * inv_ct[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )
    roots = generate_all_roots(cartan, simple_roots)
    if len(roots) != t.root_count:
        raise AssertionError(
            f"{t}: generated {len(roots)} roots, expected {t.root_count}"
        )
    return RootSystem(
        lie_type=t,
        cartan=cartan,
        simple_roots=simple_roots,
        gram=gram,
        all_roots=roots,
    )


def positive_roots(rs: RootSystem) -> tuple[Vector, ...]:
    """The positive half of the root system, sorted for determinism."""
    pos = [v for v in rs.all_roots if rs.is_positive_root(v)]
    return tuple(sorted(pos, key=lambda v: (sum(root_coordinates(rs, v)), v)))
