"""E2 page of the fibration G -> G/T and its d2 homology.

The base cohomology H*(G/T) is carried by Schubert classes indexed by Weyl
group elements (degree twice the length); the fiber cohomology H*(T) is the
exterior algebra on t_1..t_n.  d2 sends sigma_w (x) t_i to
(omega-expansion of tau(t_i) multiplied into sigma_w) (x) 1, multiplication
by a degree-2 class being the Chevalley rule; the extension to higher
exterior degrees uses the Koszul sign (-1)^(j-1) on the j-th factor.

Coefficients are a field: None means the rationals, an int means Z_p.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from . import exactlin, transgression
from .exactlin import Matrix, Vector
from .lattices import GroupSpec
from .rootdata import LieType, RootSystem, positive_roots

DEFAULT_WEYL_CAP = 2000

Coefficients = int | None  # None = rationals, int p = prime field


class WeylCapExceededError(RuntimeError):
    def __init__(self, lie_type: LieType, order: int, cap: int):
        self.order = order
        super().__init__(
            f"Weyl group of {lie_type} has {order} elements, above the cap {cap}"
        )


def weyl_order(t: LieType) -> int:
    n = t.rank
    if t.family == "A":
        return factorial(n + 1)
    if t.family in "BC":
        return 2**n * factorial(n)
    if t.family == "D":
        return 2 ** (n - 1) * factorial(n)
    if t.family == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[n]
    if t.family == "F":
        return 1152
    return 12  # G2


@dataclass(frozen=True)
class WeylElement:
    word: tuple[int, ...]  # lexicographically least reduced word, 1-based
    action: Matrix  # row k = image of the k-th fundamental weight

    @property
    def length(self) -> int:
        return len(self.word)

    def apply(self, v: Vector) -> Vector:
        return exactlin.vec_mat(v, self.action)


def _reflection_matrix(rs: RootSystem, beta: Vector) -> Matrix:
    """Action matrix of the reflection in the root beta."""
    n = rs.rank
    rows = []
    for k in range(n):
        e_k = tuple(1 if j == k else 0 for j in range(n))
        c = rs.coroot_pairing(e_k, beta)
        assert c.denominator == 1, "coroot pairing must be integral"
        rows.append(tuple(e_k[j] - int(c) * beta[j] for j in range(n)))
    return tuple(rows)


class WeylGroup:
    """Full enumeration with canonical (lex-least) reduced words."""

    def __init__(self, rs: RootSystem, size_cap: int = DEFAULT_WEYL_CAP):
        order = weyl_order(rs.lie_type)
        if order > size_cap:
            raise WeylCapExceededError(rs.lie_type, order, size_cap)
        self.root_system = rs
        n = rs.rank
        self.simple_actions = tuple(
            _reflection_matrix(rs, rs.simple_roots[i]) for i in range(n)
        )
        ident = exactlin.identity(n)
        elements = [WeylElement(word=(), action=ident)]
        seen = {ident}
        level = [elements[0]]
        while level:
            candidates: dict[Matrix, tuple[int, ...]] = {}
            for w in sorted(level, key=lambda e: e.word):
                for i in range(1, n + 1):
                    # w' = w * s_i acts by v -> w(s_i(v)).
                    action = exactlin.mat_mul(self.simple_actions[i - 1], w.action)
                    if action in seen:
                        continue
                    word = w.word + (i,)
                    if action not in candidates or word < candidates[action]:
                        candidates[action] = word
            level = [
                WeylElement(word=word, action=action)
                for action, word in candidates.items()
            ]
            level.sort(key=lambda e: e.word)
            seen.update(c.action for c in level)
            elements.extend(level)
        assert len(elements) == order
        elements.sort(key=lambda e: (e.length, e.word))
        self.elements = tuple(elements)
        self.index = {e.action: i for i, e in enumerate(self.elements)}
        self.by_length: dict[int, tuple[int, ...]] = {}
        for i, e in enumerate(self.elements):
            self.by_length.setdefault(e.length, [])
            self.by_length[e.length].append(i)
        self.by_length = {l: tuple(v) for l, v in self.by_length.items()}

    def __len__(self):
        return len(self.elements)

    @property
    def top_length(self) -> int:
        return max(self.by_length)

    def length_counts(self) -> tuple[int, ...]:
        """Coefficients of the length generating function sum q^l(w)."""
        return tuple(
            len(self.by_length.get(l, ())) for l in range(self.top_length + 1)
        )


def weyl_group(rs: RootSystem, size_cap: int = DEFAULT_WEYL_CAP) -> WeylGroup:
    return WeylGroup(rs, size_cap)


def _divide_poly(num: list[int], den: list[int]) -> list[int] | None:
    """Exact division of integer polynomials; None if not divisible."""
    if len(num) < len(den):
        return None
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        q, r = divmod(num[k + len(den) - 1], den[-1])
        if r:
            return None
        out[k] = q
        for j, d in enumerate(den):
            num[k + j] -= q * d
    return out if not any(num[: len(den) - 1]) else None


def weyl_degrees(group: WeylGroup) -> tuple[int, ...]:
    """Invariant degrees d_1..d_n from factoring the length generating function
    as a product of q-integers 1 + q + ... + q^(d-1)."""
    poly = list(group.length_counts())
    n = group.root_system.rank
    degrees = []
    for _ in range(n):
        d = len(poly)  # largest q-integer dividing the remainder divides first
        while d >= 2:
            quotient = _divide_poly(poly, [1] * d)
            if quotient is not None:
                degrees.append(d)
                poly = quotient
                break
            d -= 1
        else:
            raise AssertionError("length generating function failed to factor")
    if poly != [1]:
        raise AssertionError("length generating function failed to factor")
    return tuple(sorted(degrees))


def chevalley_multiply(
    group: WeylGroup, i: int, w: WeylElement
) -> list[tuple[int, WeylElement]]:
    """Product of the i-th degree-2 Schubert class with sigma_w.

    Sum over positive roots beta with l(w s_beta) = l(w) + 1 of the pairing
    of the i-th fundamental weight with the coroot of beta, times the class
    of w s_beta.  Coefficients are nonnegative integers.
    """
    rs = group.root_system
    n = rs.rank
    if not 1 <= i <= n:
        raise IndexError(f"degree-2 index {i} out of range 1..{n}")
    phi_i = tuple(1 if j == i - 1 else 0 for j in range(n))
    out = []
    for beta in positive_roots(rs):
        action = exactlin.mat_mul(_reflection_matrix(rs, beta), w.action)
        target = group.elements[group.index[action]]
        if target.length != w.length + 1:
            continue
        coeff = rs.coroot_pairing(phi_i, beta)
        assert coeff.denominator == 1 and coeff >= 0
        if coeff:
            out.append((int(coeff), target))
    out.sort(key=lambda t: t[1].word)
    return out


@dataclass(frozen=True)
class E2Page:
    group: GroupSpec
    coefficients: Coefficients
    max_total_degree: int
    weyl: WeylGroup = field(repr=False)
    # cell basis: tuples (weyl element index, exterior index tuple)
    cells: dict[tuple[int, int], tuple[tuple[int, tuple[int, ...]], ...]] = field(
        repr=False
    )
    # d2[(s, t)]: rows = basis of (s, t), cols = basis of (s + 2, t - 1)
    d2: dict[tuple[int, int], Matrix] = field(repr=False)

    def cell_dim(self, s: int, t: int) -> int:
        return len(self.cells.get((s, t), ()))


def _rank(m: Matrix, coefficients: Coefficients) -> int:
    if not m or not m[0]:
        return 0
    if coefficients is None:
        rows = [[Fraction(x) for x in row] for row in m]
        rank = 0
        for col in range(len(rows[0])):
            pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
            if pivot is None:
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            for i in range(rank + 1, len(rows)):
                if rows[i][col]:
                    f = rows[i][col] / rows[rank][col]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
            rank += 1
        return rank
    return exactlin.modp_rank(m, coefficients)


def build_e2(
    g: GroupSpec,
    coefficients: Coefficients = None,
    max_total_degree: int | None = None,
    size_cap: int = DEFAULT_WEYL_CAP,
    jobs: int = 1,
) -> E2Page:
    rs = g.root_system
    n = rs.rank
    dim_g = rs.lie_type.dim_group
    if max_total_degree is None:
        max_total_degree = dim_g
    if max_total_degree > dim_g:
        raise ValueError(
            f"max total degree {max_total_degree} exceeds dim G = {dim_g}"
        )
    if coefficients is not None and not exactlin.is_prime(coefficients):
        raise ValueError(f"coefficient modulus {coefficients} is not prime")
    tau = transgression.transgression_matrix(g).matrix
    weyl = weyl_group(rs, size_cap)

    # Cells one degree past the cutoff so every outgoing d2 has its target.
    cells: dict[tuple[int, int], tuple] = {}
    for length in range(weyl.top_length + 1):
        s = 2 * length
        for t in range(n + 1):
            if s + t > max_total_degree + 1:
                continue
            basis = tuple(
                (w_idx, mono)
                for w_idx in weyl.by_length[length]
                for mono in itertools.combinations(range(1, n + 1), t)
            )
            cells[(s, t)] = basis

    products: dict[tuple[int, int], list[tuple[int, int]]] = {}

    def product(l: int, w_idx: int):  # omega_l * sigma_w as index pairs
        key = (l, w_idx)
        if key not in products:
            terms = chevalley_multiply(weyl, l, weyl.elements[w_idx])
            products[key] = [(c, weyl.index[e.action]) for c, e in terms]
        return products[key]

    def d2_matrix(s: int, t: int) -> Matrix:
        source = cells[(s, t)]
        target = cells.get((s + 2, t - 1), ())
        pos = {b: k for k, b in enumerate(target)}
        rows = []
        for w_idx, mono in source:
            row = [0] * len(target)
            for j, gen in enumerate(mono):
                rest = mono[:j] + mono[j + 1 :]
                sign = -1 if j % 2 else 1
                for l in range(1, n + 1):
                    coeff = tau[gen - 1][l - 1]
                    if not coeff:
                        continue
                    for c, tgt_idx in product(l, w_idx):
                        key = (tgt_idx, rest)
                        if key in pos:
                            row[pos[key]] += sign * coeff * c
            rows.append(tuple(row))
        return tuple(rows)

    d2_keys = sorted(
        (s, t) for (s, t) in cells if t >= 1 and s + t <= max_total_degree
    )
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            matrices = list(pool.map(lambda k: d2_matrix(*k), d2_keys))
    else:
        matrices = [d2_matrix(*k) for k in d2_keys]
    d2 = dict(zip(d2_keys, matrices))

    return E2Page(
        group=g,
        coefficients=coefficients,
        max_total_degree=max_total_degree,
        weyl=weyl,
        cells=cells,
        d2=d2,
    )


@dataclass(frozen=True)
class GradedRanks:
    ranks: dict[int, int]
    bidegree_ranks: dict[tuple[int, int], int]

    def as_tuple(self, up_to: int) -> tuple[int, ...]:
        return tuple(self.ranks.get(d, 0) for d in range(up_to + 1))

    @property
    def max_degree(self) -> int:
        return max(self.ranks)


def e3_ranks(page: E2Page) -> GradedRanks:
    """Graded ranks of the homology of (E2, d2), summed along total degree."""
    ranks: dict[int, int] = {
        d: 0 for d in range(page.max_total_degree + 1)
    }
    bidegrees: dict[tuple[int, int], int] = {}
    for (s, t), basis in sorted(page.cells.items()):
        if s + t > page.max_total_degree:
            continue
        rank_out = _rank(page.d2.get((s, t), ()), page.coefficients)
        rank_in = _rank(page.d2.get((s - 2, t + 1), ()), page.coefficients)
        e3 = len(basis) - rank_out - rank_in
        assert e3 >= 0
        if e3:
            bidegrees[(s, t)] = e3
            ranks[s + t] += e3
    return GradedRanks(ranks=ranks, bidegree_ranks=bidegrees)
