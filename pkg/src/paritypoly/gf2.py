"""Bit-packed linear algebra over the two-element field.

Vectors are Python ints: coordinate ``i`` lives in bit ``i``.  The
:class:`BitWord` and :class:`GF2Matrix` wrappers carry a width for the public
API; the hot loops elsewhere in the package work on bare ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

MAX_WIDTH = 64


def popcount(x: int) -> int:
    return bin(x).count("1")


def parity(x: int) -> int:
    return popcount(x) & 1


def to_str(x: int, width: int) -> str:
    """Render ``x`` as a 0/1 string, coordinate 0 first."""
    return "".join("1" if (x >> i) & 1 else "0" for i in range(width))


def from_str(s: str) -> int:
    s = s.strip()
    if not s or any(ch not in "01" for ch in s):
        raise ValueError(f"not a 0/1 string: {s!r}")
    return sum(1 << i for i, ch in enumerate(s) if ch == "1")


def to_tuple(x: int, width: int) -> tuple[int, ...]:
    return tuple((x >> i) & 1 for i in range(width))


def from_tuple(bits: Iterable[int]) -> int:
    out = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"entry {b!r} is not 0/1")
        if b:
            out |= 1 << i
    return out


@dataclass(frozen=True, order=True)
class BitWord:
    """A vector in F_2^width."""

    width: int
    bits: int = 0

    def __post_init__(self):
        if not 1 <= self.width <= MAX_WIDTH:
            raise ValueError(f"width must be in 1..{MAX_WIDTH}, got {self.width}")
        if self.bits < 0 or self.bits >> self.width:
            raise ValueError("bits set above width")

    @classmethod
    def from_str(cls, s: str) -> BitWord:
        return cls(len(s.strip()), from_str(s))

    def __xor__(self, other: BitWord) -> BitWord:
        return xor_add(self, other)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.width:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __str__(self) -> str:
        return to_str(self.bits, self.width)

    @property
    def weight(self) -> int:
        return popcount(self.bits)


def xor_add(a: BitWord, b: BitWord) -> BitWord:
    if a.width != b.width:
        raise ValueError(f"width mismatch: {a.width} != {b.width}")
    return BitWord(a.width, a.bits ^ b.bits)


@dataclass(frozen=True)
class GF2Matrix:
    """Row-major matrix over F_2; each row is an int of width ``cols``."""

    rows: tuple[int, ...]
    cols: int

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if not 1 <= self.cols <= MAX_WIDTH:
            raise ValueError(f"cols must be in 1..{MAX_WIDTH}, got {self.cols}")
        for r in self.rows:
            if r < 0 or r >> self.cols:
                raise ValueError("row has bits set above column count")

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> GF2Matrix:
        lines = [ln.strip() for ln in lines if ln.strip()]
        if not lines:
            raise ValueError("empty matrix")
        widths = {len(ln) for ln in lines}
        if len(widths) != 1:
            raise ValueError("rows have different lengths")
        return cls(tuple(from_str(ln) for ln in lines), widths.pop())

    @classmethod
    def from_words(cls, words: Sequence[BitWord]) -> GF2Matrix:
        widths = {w.width for w in words}
        if len(widths) != 1:
            raise ValueError("rows have different widths")
        return cls(tuple(w.bits for w in words), widths.pop())

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def words(self) -> list[BitWord]:
        return [BitWord(self.cols, r) for r in self.rows]

    def column(self, j: int) -> int:
        """Column ``j`` packed as an int over the row index."""
        return sum(((r >> j) & 1) << i for i, r in enumerate(self.rows))

    def permute_columns(self, perm: Sequence[int]) -> GF2Matrix:
        """New matrix whose column ``j`` is column ``perm[j]`` of this one."""
        return GF2Matrix(
            tuple(sum(((r >> p) & 1) << j for j, p in enumerate(perm)) for r in self.rows),
            self.cols,
        )

    def to_strings(self) -> list[str]:
        return [to_str(r, self.cols) for r in self.rows]


def rref(rows: Sequence[int], width: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form of packed rows.

    Returns ``(basis, pivots)``: the nonzero reduced rows and, for each, the
    column of its leading one.  Pivots are scanned from column 0 upward.
    """
    rows = list(rows)
    basis: list[int] = []
    pivots: list[int] = []
    for col in range(width):
        bit = 1 << col
        idx = next((i for i, r in enumerate(rows) if r & bit), None)
        if idx is None:
            continue
        piv = rows.pop(idx)
        rows = [r ^ piv if r & bit else r for r in rows]
        basis = [b ^ piv if b & bit else b for b in basis]
        basis.append(piv)
        pivots.append(col)
    return basis, pivots


def rank_gf2(m: GF2Matrix | Sequence[int]) -> int:
    rows = m.rows if isinstance(m, GF2Matrix) else m
    return len(_xor_basis(rows))


def standard_form(g: GF2Matrix) -> tuple[GF2Matrix, list[int]]:
    """Bring a full-row-rank generator matrix to ``(E_k | H)``.

    Row reduction followed by moving the pivot columns to the front, the other
    columns keeping their relative order.  Returns the new matrix and ``perm``
    with ``new[:, j] == reduced[:, perm[j]]``.
    """
    basis, pivots = rref(g.rows, g.cols)
    if len(basis) != g.n_rows:
        raise ValueError("not a generator matrix: rows are linearly dependent")
    order = sorted(range(len(basis)), key=lambda i: pivots[i])
    reduced = GF2Matrix(tuple(basis[i] for i in order), g.cols)
    piv_sorted = sorted(pivots)
    rest = [c for c in range(g.cols) if c not in set(piv_sorted)]
    perm = piv_sorted + rest
    return reduced.permute_columns(perm), perm


def span_ints(basis: Sequence[int]) -> list[int]:
    if len(basis) > 30:
        raise ValueError("span of more than 30 vectors is too large to enumerate")
    out = {0}
    for b in basis:
        out |= {x ^ b for x in out}
    return sorted(out)


def span_enumerate(basis: Sequence[BitWord], width: int | None = None) -> list[BitWord]:
    """All elements of the span, ascending as integers.

    ``width`` is only needed for an empty basis, whose span is ``{0}``.
    """
    widths = {b.width for b in basis}
    if width is not None:
        widths.add(width)
    if len(widths) != 1:
        raise ValueError("basis vectors must share one known width")
    w = widths.pop()
    return [BitWord(w, x) for x in span_ints([b.bits for b in basis])]


def is_subgroup(elements: Iterable[int]) -> bool:
    elems = set(elements)
    if 0 not in elems:
        return False
    r = rank_gf2(list(elems))
    return len(elems) == 1 << r and set(span_ints(_xor_basis(elems))) == elems


def _xor_basis(elems: Iterable[int]) -> list[int]:
    lead: dict[int, int] = {}
    for x in elems:
        r = x
        while r:
            top = r.bit_length() - 1
            if top not in lead:
                lead[top] = r
                break
            r ^= lead[top]
    return list(lead.values())


def group_basis(group: Sequence[int], width: int) -> tuple[list[int], list[int]]:
    """Echelon basis of an XOR-closed set, with pivots ascending."""
    basis, pivots = rref(group, width)
    order = sorted(range(len(basis)), key=lambda i: pivots[i])
    return [basis[i] for i in order], [pivots[i] for i in order]


def coordinates(x: int, pivots: Sequence[int]) -> int:
    """Coefficients of ``x`` in a reduced echelon basis with these pivots.

    In reduced form the coefficient of basis row ``j`` is just the bit of
    ``x`` at pivot ``j``.  Only valid for ``x`` inside the span.
    """
    return sum(((x >> p) & 1) << j for j, p in enumerate(pivots))


def index2_kernels(group: Sequence[int], width: int) -> list[tuple[int, list[int]]]:
    """All index-2 subgroups of an XOR group, as ``(functional, kernel)``.

    The functional is a nonzero mask over the echelon basis of ``group``;
    ``v`` lies in the kernel iff ``parity(coords(v) & functional) == 0``.
    Functionals are listed in ascending order.
    """
    elems = sorted(set(group))
    if len(elems) < 2 or not is_subgroup(elems):
        raise ValueError("input is not a nontrivial subgroup")
    basis, pivots = group_basis(elems, width)
    k = len(basis)
    coords = [(v, coordinates(v, pivots)) for v in elems]
    out = []
    for phi in range(1, 1 << k):
        kernel = [v for v, c in coords if not parity(c & phi)]
        out.append((phi, kernel))
    return out


def index2_subgroups(group: Sequence[BitWord]) -> list[tuple[BitWord, list[BitWord]]]:
    if not group:
        raise ValueError("empty group")
    width = group[0].width
    if any(g.width != width for g in group):
        raise ValueError("elements have different widths")
    k = rank_gf2([g.bits for g in group])
    return [
        (BitWord(max(k, 1), phi), [BitWord(width, v) for v in kernel])
        for phi, kernel in index2_kernels([g.bits for g in group], width)
    ]


def iter_rref_bases(n: int, m: int) -> Iterator[list[int]]:
    """Every m-dimensional subspace of F_2^n, once, as its reduced echelon basis."""
    for pivots in combinations(range(n), m):
        pivset = set(pivots)
        # free slots: for row j, columns after its pivot that are not pivots
        slots = [(j, c) for j, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivset]
        for fill in product((0, 1), repeat=len(slots)):
            rows = [1 << p for p in pivots]
            for (j, c), b in zip(slots, fill):
                if b:
                    rows[j] |= 1 << c
            yield rows


def gaussian_binomial2(n: int, m: int) -> int:
    """Number of m-dimensional subspaces of F_2^n."""
    if not 0 <= m <= n:
        return 0
    num = den = 1
    for i in range(m):
        num *= (1 << (n - i)) - 1
        den *= (1 << (i + 1)) - 1
    return num // den
