"""Exact polytope computations on 0/1 vertex sets.

Points are packed ints (coordinate ``i`` in bit ``i``); faces are bitmasks
over point *indices*.  Nothing here touches floating point: dimensions come
from exact integer elimination and every face decision from the rational
simplex in :mod:`paritypoly.lp`.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from . import linalg
from .bases import configurations, parity_rows
from .gf2 import parity, popcount, to_str, to_tuple
from .hypergraph import Graph, PreHypergraph
from .lp import find_feasible

DEFAULT_MAX_DIM = 15
DEFAULT_MAX_POINTS = 16


class SizeGuardError(ValueError):
    pass


@dataclass(frozen=True)
class VertexSet01:
    dim: int
    points: tuple[int, ...]

    def __post_init__(self):
        pts = tuple(self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise ValueError("vertex set is empty")
        if len(set(pts)) != len(pts):
            raise ValueError("points are not distinct")
        if self.dim < 0 or any(p < 0 or p >> self.dim for p in pts):
            raise ValueError(f"point outside {{0,1}}^{self.dim}")

    @classmethod
    def from_vectors(cls, vectors: Sequence[Sequence[int]]) -> VertexSet01:
        dims = {len(v) for v in vectors}
        if len(dims) != 1:
            raise ValueError("vectors have different lengths")
        pts = []
        for v in vectors:
            if any(x not in (0, 1) for x in v):
                raise ValueError(f"{list(v)} is not a 0/1 vector")
            pts.append(sum(1 << i for i, x in enumerate(v) if x))
        return cls(dims.pop(), tuple(pts))

    def __len__(self) -> int:
        return len(self.points)

    def vectors(self) -> list[tuple[int, ...]]:
        return [to_tuple(p, self.dim) for p in self.points]

    def index_mask(self, subset: Iterable[int]) -> int:
        """Bitmask over point indices for a collection of points."""
        pos = {p: i for i, p in enumerate(self.points)}
        mask = 0
        for p in subset:
            if p not in pos:
                raise ValueError(f"{to_str(p, self.dim)} is not one of the points")
            mask |= 1 << pos[p]
        return mask

    def subset(self, mask: int) -> list[int]:
        return [p for i, p in enumerate(self.points) if mask >> i & 1]


def parity_polytope(a: PreHypergraph) -> VertexSet01:
    """Vertices of the parity polytope of ``a`` in configuration order."""
    return VertexSet01(len(a), tuple(parity_rows(a)))


def affine_dim(v: VertexSet01) -> int:
    return linalg.affine_rank(v.vectors())


def _affine_dim_of(vectors: Sequence[Sequence[int]]) -> int:
    return linalg.affine_rank(vectors) if vectors else -1


def contains_point(v: VertexSet01, p: Sequence[Fraction | int]) -> bool:
    """Whether ``p`` is a convex combination of the points."""
    if len(p) != v.dim:
        raise ValueError(f"point has length {len(p)}, expected {v.dim}")
    vecs = v.vectors()
    A = [[vec[i] for vec in vecs] for i in range(v.dim)] + [[1] * len(vecs)]
    b = list(p) + [1]
    return find_feasible(A, b) is not None


def hulls_intersect(u: VertexSet01, w: VertexSet01) -> bool:
    """Whether conv(u) and conv(w) share a point: one joint exact LP."""
    if u.dim != w.dim:
        raise ValueError("dimension mismatch")
    uv, wv = u.vectors(), w.vectors()
    nu, nw = len(uv), len(wv)
    A = [[vec[i] for vec in uv] + [-vec[i] for vec in wv] for i in range(u.dim)]
    A.append([1] * nu + [0] * nw)
    A.append([0] * nu + [1] * nw)
    b = [0] * u.dim + [1, 1]
    return find_feasible(A, b) is not None


def _is_face_mask(v: VertexSet01, mask: int, margin: int = 1) -> bool:
    # variables: c_1..c_d, beta, all free
    d = v.dim
    vecs = v.vectors()
    A_eq, A_ub = [], []
    for i, vec in enumerate(vecs):
        row = list(vec) + [-1]
        (A_eq if mask >> i & 1 else A_ub).append(row)
    b_eq = [0] * len(A_eq)
    b_ub = [-margin] * len(A_ub)
    sol = find_feasible(A_eq, b_eq, A_ub, b_ub, n_vars=d + 1, free=range(d + 1))
    return sol is not None


def is_face(v: VertexSet01, subset: Iterable[int], margin: int = 1) -> bool:
    """Whether ``subset`` (a collection of points) is the vertex set of a face.

    Decided by an exact LP for a hyperplane ``c.x = b`` through the subset
    with every other point at ``c.x <= b - margin``.
    """
    if margin <= 0:
        raise ValueError("margin must be positive")
    return _is_face_mask(v, v.index_mask(subset), margin)


def _guard(v: VertexSet01, max_dim: int | None, max_points: int | None) -> None:
    if max_dim is None:
        max_dim = int(os.environ.get("PP_MAX_DIM", DEFAULT_MAX_DIM))
    if max_points is None:
        max_points = DEFAULT_MAX_POINTS if "PP_MAX_DIM" not in os.environ else 1 << 20
    if v.dim > max_dim or len(v) > max_points:
        raise SizeGuardError(
            f"polytope with {len(v)} points in dimension {v.dim} exceeds the guard "
            f"(dim <= {max_dim}, points <= {max_points}); set PP_MAX_DIM or pass force"
        )


def facet_masks(v: VertexSet01) -> list[int]:
    """Vertex-incidence masks of all facets, ascending.

    Every facet of a full-dimensional polytope holds ``d`` affinely independent
    vertices, so scanning ``d``-subsets of the points finds them all.  Subsets
    already inside a known facet are skipped since they span its hyperplane.
    """
    d = v.dim
    vecs = v.vectors()
    m = len(vecs)
    if affine_dim(v) != d:
        raise ValueError("facets need a full-dimensional vertex set")
    if d == 0:
        return []
    found: list[int] = []
    for combo in combinations(range(m), d):
        cmask = 0
        for i in combo:
            cmask |= 1 << i
        if any(cmask & f == cmask for f in found):
            continue
        normal = linalg.kernel_vector([list(vecs[i]) + [-1] for i in combo])
        if normal is None:
            continue
        a, beta = normal[:-1], normal[-1]
        pos = neg = False
        inc = 0
        for i, vec in enumerate(vecs):
            s = sum(x for x, bit in zip(a, vec) if bit) - beta
            if s > 0:
                pos = True
            elif s < 0:
                neg = True
            else:
                inc |= 1 << i
            if pos and neg:
                break
        if not (pos and neg):
            found.append(inc)
    return sorted(found)


def _indices(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def facets(v: VertexSet01) -> list[tuple[int, ...]]:
    """Facets as sorted tuples of 0-based point indices."""
    return [_indices(f) for f in facet_masks(v)]


@dataclass(frozen=True)
class FaceLattice:
    """Nonempty faces grouped by dimension; ``faces[d]`` is the polytope itself."""

    dim: int
    n_vertices: int
    faces: tuple[tuple[int, ...], ...]  # per dimension, ascending index masks

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.faces)

    @property
    def total(self) -> int:
        return sum(self.f_vector)

    def faces_as_indices(self) -> list[list[tuple[int, ...]]]:
        return [[_indices(f) for f in level] for level in self.faces]

    def all_masks(self) -> set[int]:
        return {f for level in self.faces for f in level}

    def to_json(self) -> str:
        return json.dumps(
            {
                "dim": self.dim,
                "n_vertices": self.n_vertices,
                "f_vector": list(self.f_vector),
                "faces": [[list(f) for f in level] for level in self.faces_as_indices()],
            }
        )


def lattice_from_facets(dim: int, n_vertices: int, facet_list: Sequence[int]) -> FaceLattice:
    """Build all nonempty faces top-down from facet incidences.

    The facets of a face F are the inclusion-maximal nonempty sets among
    ``F & G`` over facets G not containing F, so walking down one level at a
    time assigns every face its dimension without any rank computation.
    """
    full = (1 << n_vertices) - 1
    levels: list[list[int]] = [[full]]
    current = [full]
    for _ in range(dim):
        nxt: set[int] = set()
        for face in current:
            cands = {face & g for g in facet_list}
            cands.discard(face)
            cands.discard(0)
            maxes: list[int] = []
            for c in sorted(cands, key=popcount, reverse=True):
                if not any(c & mm == c for mm in maxes):
                    maxes.append(c)
            nxt.update(maxes)
        current = sorted(nxt)
        levels.append(current)
    levels.reverse()
    return FaceLattice(dim, n_vertices, tuple(tuple(level) for level in levels))


def face_lattice(
    v: VertexSet01,
    *,
    max_dim: int | None = None,
    max_points: int | None = None,
    force: bool = False,
) -> FaceLattice:
    if not force:
        _guard(v, max_dim, max_points)
    return lattice_from_facets(v.dim, len(v), facet_masks(v))


def face_lattice_by_lp(v: VertexSet01) -> FaceLattice:
    """Reference lattice: one face LP per nonempty subset of the points.

    Exponential in the number of points; meant for cross-checking at small size.
    """
    if len(v) > 12:
        raise SizeGuardError("subset enumeration is limited to 12 points")
    vecs = v.vectors()
    d = affine_dim(v)
    levels: list[list[int]] = [[] for _ in range(d + 1)]
    for mask in range(1, 1 << len(v)):
        if _is_face_mask(v, mask):
            sub = [vecs[i] for i in range(len(v)) if mask >> i & 1]
            levels[_affine_dim_of(sub)].append(mask)
    return FaceLattice(d, len(v), tuple(tuple(sorted(level)) for level in levels))


def is_simple(lattice: FaceLattice) -> bool:
    """Every vertex lies on exactly ``dim`` edges."""
    if lattice.dim < 1:
        return True
    degree = [0] * lattice.n_vertices
    for e in lattice.faces[1]:
        for i in _indices(e):
            degree[i] += 1
    return all(deg == lattice.dim for deg in degree)


def odd_configurations(n: int) -> set[int]:
    return {x for x in configurations(n) if parity(x)}


def simplex_face_criterion(n: int, subset: Iterable[int]) -> bool:
    """Face test for the order-(N-1) parity polytope by parity classes.

    ``subset`` holds configurations (packed ints).  A proper subset is a face
    iff it contains neither parity class entirely; the whole configuration
    space is the polytope itself and counts as a face.
    """
    sub = set(subset)
    xs = set(configurations(n))
    if not sub <= xs:
        raise ValueError("subset contains points outside {0,1}^n")
    if sub == xs:
        return True
    odd = odd_configurations(n)
    return not (odd <= sub or (xs - odd) <= sub)


def cut_polytope_vertices(g: Graph) -> VertexSet01:
    """Cut vectors of ``g`` over its edges in sorted order, deduplicated."""
    if g.n > 6:
        raise SizeGuardError("cut enumeration limited to 6 vertices")
    edges = g.sorted_edges()
    cuts = set()
    for s in range(1 << g.n):
        vec = 0
        for t, (i, j) in enumerate(edges):
            if (s >> i & 1) != (s >> j & 1):
                vec |= 1 << t
        cuts.add(vec)
    return VertexSet01(len(edges), tuple(sorted(cuts)))


def to_vrep(v: VertexSet01) -> str:
    lines = ["V-representation", "begin", f"{len(v)} {v.dim + 1} rational"]
    for vec in v.vectors():
        lines.append(" ".join(["1"] + [str(x) for x in vec]))
    lines.append("end")
    return "\n".join(lines) + "\n"


def from_vrep(text: str) -> VertexSet01:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("*")]
    try:
        start = lines.index("begin")
        end = lines.index("end")
    except ValueError:
        raise ValueError("V-representation needs 'begin' and 'end' lines") from None
    if "V-representation" not in lines[:start]:
        raise ValueError("missing 'V-representation' header")
    header = lines[start + 1].split()
    count, cols = int(header[0]), int(header[1])
    rows = [ln.split() for ln in lines[start + 2 : end]]
    if len(rows) != count:
        raise ValueError(f"header announces {count} rows, found {len(rows)}")
    vectors = []
    for r in rows:
        if len(r) != cols:
            raise ValueError(f"row {' '.join(r)} has {len(r)} entries, expected {cols}")
        if Fraction(r[0]) != 1:
            raise ValueError("only vertices (leading 1) are supported, not rays")
        vec = [Fraction(x) for x in r[1:]]
        if any(x not in (0, 1) for x in vec):
            raise ValueError("only 0/1 vertices are supported")
        vectors.append([int(x) for x in vec])
    return VertexSet01.from_vectors(vectors)


def vertex_set_to_json(v: VertexSet01) -> str:
    return json.dumps({"dim": v.dim, "points": [list(vec) for vec in v.vectors()]})


def vertex_set_from_json(text: str) -> VertexSet01:
    obj = json.loads(text)
    if not isinstance(obj, dict) or "points" not in obj:
        raise ValueError('expected an object with a "points" list')
    v = VertexSet01.from_vectors(obj["points"])
    if "dim" in obj and obj["dim"] != v.dim:
        raise ValueError(f'"dim" is {obj["dim"]} but points have length {v.dim}')
    return v
