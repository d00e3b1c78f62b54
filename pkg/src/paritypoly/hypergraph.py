"""Pre-hypergraphs, hypergraphs and the graphs that generate them.

Sets are bitmasks over the ground set, member ``i`` (0-based) in bit ``i``.
I/O is 1-based.  A :class:`PreHypergraph` is always kept in canonical order:
sets sorted by cardinality, then lexicographically by their sorted members,
which puts the atoms first as ``{1}, ..., {N}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .gf2 import popcount


class HypergraphError(ValueError):
    pass


def members(mask: int) -> tuple[int, ...]:
    """0-based members of a bitmask set, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        m |= 1 << i
    return m


def canonical_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return popcount(mask), members(mask)


@dataclass(frozen=True)
class PreHypergraph:
    """A family of nonempty subsets of ``[n]`` containing every atom."""

    n: int
    sets: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise HypergraphError("ground set must be nonempty")
        sets = tuple(self.sets)
        if len(set(sets)) != len(sets):
            raise HypergraphError("duplicate sets")
        for s in sets:
            if s == 0:
                raise HypergraphError("empty set is not allowed")
            if s < 0 or s >> self.n:
                raise HypergraphError(f"set {sorted(i + 1 for i in members(s))} is not inside [{self.n}]")
        missing = [i + 1 for i in range(self.n) if (1 << i) not in sets]
        if missing:
            raise HypergraphError(f"missing atoms {missing}")
        object.__setattr__(self, "sets", tuple(sorted(sets, key=canonical_key)))

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]], one_based: bool = True) -> PreHypergraph:
        off = 1 if one_based else 0
        masks = []
        for s in sets:
            s = list(s)
            if any(not (off <= i < n + off) for i in s):
                raise HypergraphError(f"set {s} has members outside the ground set")
            if len(set(s)) != len(s):
                raise HypergraphError(f"set {s} repeats a member")
            masks.append(mask_of(i - off for i in s))
        return cls(n, tuple(masks))

    def __len__(self) -> int:
        return len(self.sets)

    def __contains__(self, mask: int) -> bool:
        return mask in self.sets

    def as_lists(self) -> list[list[int]]:
        """Sets as sorted 1-based member lists, canonical order."""
        return [[i + 1 for i in members(s)] for s in self.sets]

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "sets": self.as_lists()})

    @classmethod
    def from_json(cls, text: str) -> PreHypergraph:
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise HypergraphError(f"malformed JSON: {exc}") from None
        if not isinstance(obj, dict) or "n" not in obj or "sets" not in obj:
            raise HypergraphError('expected an object with keys "n" and "sets"')
        n, sets = obj["n"], obj["sets"]
        if not isinstance(n, int) or not isinstance(sets, list):
            raise HypergraphError('"n" must be an integer and "sets" a list')
        if not all(isinstance(s, list) and all(isinstance(i, int) for i in s) for s in sets):
            raise HypergraphError('"sets" must be a list of integer lists')
        if any(not s for s in sets):
            raise HypergraphError("empty set is not allowed")
        return cls.from_sets(n, sets)

    def label(self, mask: int) -> str:
        return "{" + ",".join(str(i + 1) for i in members(mask)) + "}"


def is_hypergraph(a: PreHypergraph) -> bool:
    present = set(a.sets)
    for s in a.sets:
        # immediate subsets suffice: closure then follows by induction
        for i in members(s):
            sub = s & ~(1 << i)
            if sub and sub not in present:
                return False
    return True


def uniform(k: int, n: int) -> PreHypergraph:
    """All nonempty subsets of ``[n]`` with at most ``k`` elements."""
    if not 1 <= k <= n:
        raise HypergraphError(f"need 1 <= k <= n, got k={k}, n={n}")
    sets = [mask_of(c) for j in range(1, k + 1) for c in combinations(range(n), j)]
    return PreHypergraph(n, tuple(sets))


def uniform_size(k: int, n: int) -> int:
    return sum(comb(n, j) for j in range(1, k + 1))


def maximal_elements(a: PreHypergraph) -> list[int]:
    return [s for s in a.sets if not any(t != s and t & s == s for t in a.sets)]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``; edges stored as ``(i, j)``, ``i < j``."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        clean = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"edge {e} leaves the vertex set")
            clean.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        edges = [tuple(e) for e in edges]
        normalized = [(min(e), max(e)) for e in edges]
        if len(set(normalized)) != len(normalized):
            raise ValueError("duplicate edge")
        return cls(n, frozenset(normalized))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def clique_hypergraph(g: Graph) -> PreHypergraph:
    if g.n < 1:
        raise HypergraphError("graph has no vertices")
    cliques = [1 << i for i in range(g.n)]
    frontier = list(cliques)
    while frontier:
        grown = set()
        for c in frontier:
            top = members(c)[-1]
            for v in range(top + 1, g.n):
                if all(g.adjacent(u, v) for u in members(c)):
                    grown.add(c | (1 << v))
        cliques.extend(grown)
        frontier = list(grown)
    return PreHypergraph(g.n, tuple(cliques))


def coned_graph(g: Graph) -> Graph:
    """Add an apex vertex (index ``g.n``) adjacent to every original vertex."""
    return Graph(g.n + 1, frozenset(g.edges | {(i, g.n) for i in range(g.n)}))


def edge_hypergraph(g: Graph) -> PreHypergraph:
    sets = [1 << i for i in range(g.n)] + [(1 << i) | (1 << j) for i, j in g.edges]
    return PreHypergraph(g.n, tuple(sets))


def parse_inline(spec: str) -> PreHypergraph:
    """Parse ``uniform:k,n``."""
    kind, _, args = spec.partition(":")
    if kind != "uniform":
        raise HypergraphError(f"unknown inline hypergraph {spec!r}; expected uniform:k,n")
    try:
        k, n = (int(x) for x in args.split(","))
    except ValueError:
        raise HypergraphError(f"cannot parse {spec!r}; expected uniform:k,n") from None
    return uniform(k, n)
