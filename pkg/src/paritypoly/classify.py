"""Full-dimensional 0/1 polytopes whose vertices form an XOR group.

The family for dimension ``n`` is grown from ``n - 1`` by two moves: the
prism over a member, and the lift that keeps an index-2 subgroup at height 0
and puts its coset at height 1.  Coordinate kernels are excluded from the
lift because they would not raise the dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterable, Sequence

from .linalg import rank
from .geometry import VertexSet01, affine_dim, contains_point, hulls_intersect
from .gf2 import (
    group_basis,
    index2_kernels,
    is_subgroup,
    iter_rref_bases,
    popcount,
    rank_gf2,
    span_ints,
)

DEFAULT_MAX_ENUM = 7


class DegenerateLiftError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class GroupPolytope:
    n: int
    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(set(self.vertices))))

    @property
    def k(self) -> int:
        """log2 of the vertex count."""
        return len(self.vertices).bit_length() - 1

    def vertex_set(self) -> VertexSet01:
        return VertexSet01(self.n, self.vertices)

    def check(self) -> None:
        """Raise unless the vertices form a group with full-dimensional hull."""
        if not is_subgroup(self.vertices):
            raise ValueError("vertices are not closed under XOR")
        if affine_dim(self.vertex_set()) != self.n:
            raise ValueError("hull is not full-dimensional")

    def coordinate_kernel(self, i: int) -> tuple[int, ...]:
        return tuple(v for v in self.vertices if not v >> i & 1)

    def index2_subgroups(self) -> list[tuple[int, ...]]:
        return [tuple(ker) for _, ker in index2_kernels(self.vertices, self.n)]

    def strings(self) -> list[str]:
        return ["".join(str(v >> i & 1) for i in range(self.n)) for v in self.vertices]


def unit_interval() -> GroupPolytope:
    return GroupPolytope(1, (0, 1))


def cube(n: int) -> GroupPolytope:
    return GroupPolytope(n, tuple(range(1 << n)))


def prism(p: GroupPolytope) -> GroupPolytope:
    top = 1 << p.n
    return GroupPolytope(p.n + 1, p.vertices + tuple(v | top for v in p.vertices))


def _lift_vertices(p: GroupPolytope, u: Iterable[int]) -> GroupPolytope:
    u = set(u)
    top = 1 << p.n
    return GroupPolytope(p.n + 1, tuple(v if v in u else v | top for v in p.vertices))


def lift(p: GroupPolytope, u: Sequence[int]) -> GroupPolytope:
    """Subgroup ``u`` at height 0, its coset at height 1."""
    uset = set(u)
    if not uset <= set(p.vertices) or 2 * len(uset) != len(p.vertices) or not is_subgroup(uset):
        raise ValueError("u is not an index-2 subgroup of the vertex group")
    for i in range(p.n):
        if all(not x >> i & 1 for x in uset):
            raise DegenerateLiftError(
                f"degenerate lift: u is the kernel of coordinate {i + 1}, "
                "so the lifted hull would not gain a dimension"
            )
    return _lift_vertices(p, uset)


def is_full_dim_fast(vertices: Sequence[int], n: int) -> bool:
    """Full-dimensionality of a subgroup via its coordinate functionals.

    The hull spans R^n exactly when the n coordinate functionals, restricted to
    the group, are pairwise distinct and nonzero.
    """
    basis, _ = group_basis(vertices, n)
    funcs = set()
    for i in range(n):
        f = sum(((b >> i) & 1) << j for j, b in enumerate(basis))
        if f == 0 or f in funcs:
            return False
        funcs.add(f)
    return True


@dataclass(frozen=True)
class Prop4Result:
    lift_full_dim: bool
    not_in_coordinate_hyperplane: bool
    center_in_both_hulls: bool
    hulls_meet: bool

    def all_equal(self) -> bool:
        return len({self.lift_full_dim, self.not_in_coordinate_hyperplane,
                    self.center_in_both_hulls, self.hulls_meet}) == 1

    def as_tuple(self) -> tuple[bool, bool, bool, bool]:
        return (self.lift_full_dim, self.not_in_coordinate_hyperplane,
                self.center_in_both_hulls, self.hulls_meet)


def prop4_checks(p: GroupPolytope, u: Sequence[int]) -> Prop4Result:
    """The four equivalent lift conditions, each by its own mechanism.

    1. rank of the lifted vertex set;
    2. scan for a coordinate vanishing on ``u``;
    3. two LPs placing the cube center in conv(u) and conv(coset);
    4. one LP for a common point of the two hulls.
    """
    uset = set(u)
    if not uset <= set(p.vertices) or 2 * len(uset) != len(p.vertices) or not is_subgroup(uset):
        raise ValueError("u is not an index-2 subgroup of the vertex group")
    coset = [v for v in p.vertices if v not in uset]
    q = _lift_vertices(p, uset)
    i_ok = affine_dim(q.vertex_set()) == p.n + 1
    ii_ok = not any(all(not x >> i & 1 for x in uset) for i in range(p.n))
    z = [Fraction(1, 2)] * p.n
    uvs = VertexSet01(p.n, tuple(sorted(uset)))
    cvs = VertexSet01(p.n, tuple(coset))
    iii_ok = contains_point(uvs, z) and contains_point(cvs, z)
    iv_ok = hulls_intersect(uvs, cvs)
    return Prop4Result(i_ok, ii_ok, iii_ok, iv_ok)


def step(family: Iterable[GroupPolytope], *, check_duplicates: bool = False) -> list[GroupPolytope]:
    """All polytopes one dimension up, sorted canonically."""
    out: set[GroupPolytope] = set()
    produced = 0
    for p in family:
        children = [prism(p)]
        coord = {p.coordinate_kernel(i) for i in range(p.n)}
        for _, ker in index2_kernels(p.vertices, p.n):
            if tuple(ker) not in coord:
                children.append(_lift_vertices(p, ker))
        produced += len(children)
        out.update(children)
    if check_duplicates and produced != len(out):
        raise AssertionError(f"generation produced {produced - len(out)} duplicate polytopes")
    return sorted(out, key=lambda q: (q.k, q.vertices))


def enumerate_Pn(n: int, *, force: bool = False, check_duplicates: bool = False) -> list[GroupPolytope]:
    """Every full-dimensional group polytope in R^n, canonically sorted."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > DEFAULT_MAX_ENUM and not force:
        raise ValueError(f"enumeration beyond n={DEFAULT_MAX_ENUM} needs force=True")
    family = [unit_interval()]
    for _ in range(n - 1):
        family = step(family, check_duplicates=check_duplicates)
    return family


def counts_by_k(family: Iterable[GroupPolytope], n: int) -> list[int]:
    """Entry ``k - 1`` counts members with ``2**k`` vertices."""
    counts = [0] * n
    for p in family:
        counts[p.k - 1] += 1
    return counts


def count_cnk(n_max: int) -> list[list[int]]:
    """Rows ``c_n(1..n)`` for ``n = 1..n_max`` from the counting recursion."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    rows = [[1]]
    for n in range(1, n_max):
        prev = rows[-1]
        row = []
        for k in range(1, n + 2):
            if (1 << k) <= n + 1:
                row.append(0)
            elif k == n + 1:
                row.append(1)
            else:
                below = prev[k - 2] if k >= 2 else 0
                row.append(below + prev[k - 1] * ((1 << k) - n - 1))
        rows.append(row)
    return rows


def count_cn(n_max: int) -> list[int]:
    return [sum(r) for r in count_cnk(n_max)]


def gl2_order(k: int) -> int:
    out = 1
    for i in range(k):
        out *= (1 << k) - (1 << i)
    return out


def count_cnk_oracle(n: int, k: int) -> int:
    """Independent count: group polytopes correspond to n distinct nonzero
    coordinate functionals spanning the dual of F_2^k, up to change of basis.

    Spanning n-subsets are enumerated directly; orderings contribute ``n!``.
    """
    if k > 4 or n > 10:
        raise ValueError("oracle limited to k <= 4, n <= 10")
    if k < 1 or n < 1:
        raise ValueError("need n, k >= 1")
    nonzero = range(1, 1 << k)
    spanning = sum(1 for sub in combinations(nonzero, n) if rank_gf2(sub) == k)
    total = spanning * factorial(n)
    q, r = divmod(total, gl2_order(k))
    assert r == 0
    return q


def dnk_bruteforce(n: int, k: int) -> int:
    """Number of 2**k-subsets of the n-cube whose hull is n-dimensional."""
    if n > 4:
        raise ValueError("brute force limited to n <= 4")
    size = 1 << k
    points = [tuple(x >> i & 1 for i in range(n)) for x in range(1 << n)]
    count = 0
    for sub in combinations(points, size):
        p0 = sub[0]
        diffs = [[a - b for a, b in zip(p, p0)] for p in sub[1:]]
        if rank(diffs) == n:
            count += 1
    return count


def all_full_dim_subgroups(n: int) -> list[GroupPolytope]:
    """Reference set: every subspace of F_2^n whose hull has dimension n."""
    out = []
    for m in range(1, n + 1):
        for basis in iter_rref_bases(n, m):
            p = GroupPolytope(n, tuple(span_ints(basis)))
            if affine_dim(p.vertex_set()) == n:
                out.append(p)
    return sorted(out, key=lambda q: (q.k, q.vertices))


def is_regular_simplex_group(vertices: Sequence[int], n: int) -> bool:
    """Equal pairwise Hamming distances, n+1 points, hull of dimension n."""
    if len(vertices) != n + 1:
        return False
    dists = {popcount(a ^ b) for a, b in combinations(vertices, 2)}
    if len(dists) != 1:
        return False
    return affine_dim(VertexSet01(n, tuple(vertices))) == n


def regular_simplex_subgroup(n: int) -> tuple[int, ...] | None:
    """First subgroup of W_n (in echelon enumeration order) spanning a regular n-simplex."""
    if n > 7:
        raise ValueError("search limited to n <= 7")
    size = n + 1
    if size & (size - 1):
        return None
    m = size.bit_length() - 1
    for basis in iter_rref_bases(n, m):
        elems = span_ints(basis)
        # nonzero elements of a regular simplex group share one weight
        if len({popcount(x) for x in elems if x}) != 1:
            continue
        if is_regular_simplex_group(elems, n):
            return tuple(elems)
    return None


def dnk_lower_bounds(n: int, k: int) -> tuple[int, int]:
    """Lower bounds on d_n(k): ``2^k (2^n - 2^k) c_n(k)`` and ``n 2^(n-1) c_n(k)``."""
    c = count_cnk(n)[n - 1][k - 1]
    return (1 << k) * ((1 << n) - (1 << k)) * c, n * (1 << (n - 1)) * c

