"""Linear codes from parity maps and pre-hypergraphs from generator matrices."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .bases import configurations, parity_vector
from .gf2 import GF2Matrix, popcount, rank_gf2, span_ints
from .hypergraph import PreHypergraph

MAX_CODE_DIM = 20


class NotStandardFormError(ValueError):
    pass


@dataclass(frozen=True)
class LinearCode:
    generator: GF2Matrix
    _words: list[int] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if rank_gf2(self.generator) != self.generator.n_rows:
            raise ValueError("generator rows are linearly dependent")

    @property
    def length(self) -> int:
        return self.generator.cols

    @property
    def dim(self) -> int:
        return self.generator.n_rows


def code_from_hypergraph(a: PreHypergraph) -> LinearCode:
    """The ``[|A|, N]`` code whose generator rows are the images of the unit vectors."""
    rows = tuple(parity_vector(a, 1 << i) for i in range(a.n))
    return LinearCode(GF2Matrix(rows, len(a)))


def _check_dim(c: LinearCode) -> None:
    if c.dim > MAX_CODE_DIM:
        raise ValueError(f"code dimension {c.dim} exceeds the enumeration limit {MAX_CODE_DIM}")


def codewords(c: LinearCode) -> list[int]:
    _check_dim(c)
    if c._words is None:
        object.__setattr__(c, "_words", span_ints(c.generator.rows))
    return c._words


def min_distance(c: LinearCode) -> int:
    _check_dim(c)
    return min(popcount(w) for w in codewords(c) if w)


def distance_formula(k: int, n: int) -> int:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    return sum(comb(n - 1, l) for l in range(k))


@dataclass(frozen=True)
class DuplicateReport:
    """Columns of ``H`` (0-based, counted after the identity block) that were dropped."""

    atom_copies: tuple[int, ...] = ()
    repeated: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return bool(self.atom_copies or self.repeated)


def hypergraph_from_generator(g: GF2Matrix) -> tuple[PreHypergraph, DuplicateReport]:
    """Read a pre-hypergraph off a standard-form generator ``(E_N | H)``.

    Column ``j`` of ``H`` becomes the set of rows holding a one.  Columns that
    repeat an earlier column, or equal a unit vector, collapse and are reported.
    """
    n = g.n_rows
    if n == 0 or g.cols < n:
        raise NotStandardFormError("matrix must have at least as many columns as rows")
    if any(g.column(j) != 1 << j for j in range(n)):
        raise NotStandardFormError(
            "generator is not in standard form (E_N | H); run standard_form first"
        )
    sets = [1 << i for i in range(n)]
    seen = set(sets)
    atom_copies, repeated = [], []
    for j in range(g.cols - n):
        col = g.column(n + j)
        if col == 0:
            raise NotStandardFormError(f"column {n + j + 1} of the generator is zero")
        if popcount(col) == 1:
            atom_copies.append(j)
        elif col in seen:
            repeated.append(j)
        else:
            seen.add(col)
            sets.append(col)
    return PreHypergraph(n, tuple(sets)), DuplicateReport(tuple(atom_copies), tuple(repeated))


def verify_homomorphism(a: PreHypergraph) -> bool:
    """Exhaustively check additivity and injectivity of the parity map."""
    if a.n > 8:
        raise ValueError("exhaustive check limited to N <= 8")
    xs = configurations(a.n)
    img = {x: parity_vector(a, x) for x in xs}
    if len(set(img.values())) != len(xs):
        return False
    return all(img[x ^ y] == img[x] ^ img[y] for x in xs for y in xs)
