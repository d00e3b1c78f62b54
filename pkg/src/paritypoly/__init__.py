"""Parity polytopes of binary hierarchical models, their linear codes, and
the classification of full-dimensional 0/1 polytopes whose vertices form a
group under XOR."""

from .bases import StatisticTransformer, parity_matrix, statistic_matrix
from .classify import GroupPolytope, count_cnk, enumerate_Pn
from .codes import LinearCode, code_from_hypergraph, min_distance
from .geometry import VertexSet01, face_lattice, facets, is_simple, parity_polytope
from .gf2 import BitWord, GF2Matrix
from .hypergraph import Graph, PreHypergraph, uniform

__version__ = "0.1.0"

__all__ = [
    "BitWord",
    "GF2Matrix",
    "Graph",
    "GroupPolytope",
    "LinearCode",
    "PreHypergraph",
    "StatisticTransformer",
    "VertexSet01",
    "code_from_hypergraph",
    "count_cnk",
    "enumerate_Pn",
    "face_lattice",
    "facets",
    "is_simple",
    "min_distance",
    "parity_matrix",
    "parity_polytope",
    "statistic_matrix",
    "uniform",
]
