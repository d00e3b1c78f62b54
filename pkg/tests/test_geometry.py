import random
from fractions import Fraction
from itertools import combinations
from math import comb

import pytest

from paritypoly.bases import configurations, parity_rows
from paritypoly.geometry import (
    SizeGuardError,
    VertexSet01,
    affine_dim,
    contains_point,
    cut_polytope_vertices,
    face_lattice,
    face_lattice_by_lp,
    facet_masks,
    facets,
    from_vrep,
    hulls_intersect,
    is_face,
    is_simple,
    odd_configurations,
    parity_polytope,
    simplex_face_criterion,
    to_vrep,
    vertex_set_from_json,
    vertex_set_to_json,
)
from paritypoly.hypergraph import Graph, complete_graph, coned_graph, path_graph, uniform

from oracles import renamed_parity_rows

HALF = Fraction(1, 2)


def V(*rows):
    return VertexSet01.from_vectors([[int(c) for c in r] for r in rows])


def test_affine_dim_examples():
    assert affine_dim(V("000", "110", "101", "011")) == 3
    assert affine_dim(V("000", "100", "011", "111")) == 2
    assert affine_dim(V("01")) == 0


def test_contains_point():
    even = V("000", "110", "101", "011")
    odd = V("100", "010", "001", "111")
    assert contains_point(even, [HALF] * 3)
    assert contains_point(odd, [HALF] * 3)
    assert not contains_point(even, [1, 1, 1])
    assert contains_point(even, [1, HALF, HALF])
    with pytest.raises(ValueError):
        contains_point(even, [0, 0])


def test_hulls_intersect():
    assert hulls_intersect(V("000", "110", "101", "011"), V("100", "010", "001", "111"))
    assert not hulls_intersect(V("00", "10"), V("01", "11"))
    assert hulls_intersect(V("00", "11"), V("10", "01"))


def test_is_face_examples():
    f23 = parity_polytope(uniform(2, 3))
    rows = parity_rows(uniform(2, 3))
    even = [rows[x] for x in configurations(3) if not bin(x).count("1") % 2]
    assert not is_face(f23, even)
    assert is_face(f23, rows[:3])
    assert is_face(f23, rows)
    sq = V("00", "10", "01", "11")
    assert is_face(sq, [0b00, 0b01])
    assert not is_face(sq, [0b00, 0b11])
    with pytest.raises(ValueError):
        is_face(sq, [0b00], margin=0)


@pytest.mark.parametrize("k, n, expected", [(2, 3, 16), (3, 4, 64)])
def test_facet_count_of_order_n_minus_one(k, n, expected):
    assert len(facets(parity_polytope(uniform(k, n)))) == expected == 4 ** (n - 1)


def test_facets_of_cube_and_simplex():
    assert len(facets(parity_polytope(uniform(1, 3)))) == 6
    assert len(facets(V("000", "100", "010", "001"))) == 4
    assert facets(V("00", "10", "01", "11")) == [(0, 1), (0, 2), (1, 3), (2, 3)]


def test_facets_need_full_dimension():
    with pytest.raises(ValueError):
        facet_masks(V("000", "110"))


@pytest.mark.parametrize(
    "k, f_vector, simple",
    [
        (1, (8, 12, 6, 1), True),
        (2, (8, 28, 56, 68, 48, 16, 1), False),
        (3, (8, 28, 56, 70, 56, 28, 8, 1), True),
    ],
)
def test_f_vectors_n3(k, f_vector, simple):
    lat = face_lattice(parity_polytope(uniform(k, 3)))
    assert lat.f_vector == f_vector
    assert is_simple(lat) is simple


@pytest.mark.parametrize("k", [1, 2, 3])
def test_lattice_matches_lp_oracle_n3(k):
    v = parity_polytope(uniform(k, 3))
    fast, slow = face_lattice(v), face_lattice_by_lp(v)
    assert fast == slow


def test_lattice_matches_lp_oracle_small_shapes():
    for v in (V("00", "10", "01", "11"), V("000", "100", "010", "001", "111"), V("000", "110", "101", "011")):
        if affine_dim(v) == v.dim:
            assert face_lattice(v) == face_lattice_by_lp(v)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_lattice_extremes_and_closure(n):
    for k in range(1, n + 1):
        v = parity_polytope(uniform(k, n))
        lat = face_lattice(v)
        f = lat.f_vector
        assert f[0] == len(v) and f[-1] == 1
        assert lat.faces[0] == tuple(1 << i for i in range(len(v)))
        fac = facet_masks(v)
        full = (1 << len(v)) - 1
        for face in lat.all_masks():
            closure = full
            for g in fac:
                if face & g == face:
                    closure &= g
            assert closure == face


@pytest.mark.parametrize("n", range(1, 5))
def test_vertex_count_and_dimension(n):
    for k in range(1, n + 1):
        v = parity_polytope(uniform(k, n))
        assert len(v) == 1 << n
        assert affine_dim(v) == sum(comb(n, j) for j in range(1, k + 1)) == v.dim


@pytest.mark.parametrize("n", range(1, 6))
def test_atom_projection_is_the_cube(n):
    for k in range(1, n + 1):
        pts = {p & ((1 << n) - 1) for p in parity_polytope(uniform(k, n)).points}
        assert pts == set(range(1 << n))


@pytest.mark.parametrize("n", range(1, 5))
def test_projection_of_full_model(n):
    full = uniform(n, n)
    for k in range(1, n + 1):
        keep = [j for j, s in enumerate(full.sets) if bin(s).count("1") <= k]
        assert [full.sets[j] for j in keep] == list(uniform(k, n).sets)
        projected = {
            sum((p >> j & 1) << t for t, j in enumerate(keep)) for p in parity_polytope(full).points
        }
        assert projected == set(parity_polytope(uniform(k, n)).points)


def test_neighborliness_from_f_vectors():
    f23 = face_lattice(parity_polytope(uniform(2, 3))).f_vector
    assert all(f23[i] == comb(8, i + 1) for i in range(3))
    f34 = face_lattice(parity_polytope(uniform(3, 4))).f_vector
    assert all(f34[i] == comb(16, i + 1) for i in range(7))


def test_margin_independence_random():
    rng = random.Random(3)
    shapes = [parity_polytope(uniform(k, 3)) for k in (1, 2)] + [V("000", "100", "010", "001", "111")]
    for _ in range(150):
        v = rng.choice(shapes)
        sub = [p for p in v.points if rng.random() < 0.4] or [v.points[0]]
        assert is_face(v, sub, margin=1) == is_face(v, sub, margin=2)


def test_simplex_face_criterion_examples():
    odd = odd_configurations(3)
    assert not simplex_face_criterion(3, odd)
    assert all(simplex_face_criterion(3, s) for s in combinations(range(8), 3))
    for x in range(8):
        assert not simplex_face_criterion(3, set(range(8)) - {x})
    assert simplex_face_criterion(3, range(8))
    with pytest.raises(ValueError):
        simplex_face_criterion(3, [8])


def test_simplex_criterion_agrees_with_lp_n3():
    v = parity_polytope(uniform(2, 3))
    rows = parity_rows(uniform(2, 3))
    for mask in range(1, 256):
        sub = [x for x in range(8) if mask >> x & 1]
        assert simplex_face_criterion(3, sub) == is_face(v, [rows[x] for x in sub])


@pytest.mark.parametrize("g", [complete_graph(2), complete_graph(3), path_graph(3)], ids=["K2", "K3", "P3"])
def test_cut_polytope_is_renamed_parity_polytope(g):
    cut = cut_polytope_vertices(coned_graph(g))
    assert set(cut.points) == renamed_parity_rows(g)


def test_cut_polytope_trivial_cases():
    assert cut_polytope_vertices(complete_graph(2)).points == (0, 1)
    v = cut_polytope_vertices(Graph(3, frozenset()))
    assert v.dim == 0 and v.points == (0,)
    with pytest.raises(SizeGuardError):
        cut_polytope_vertices(Graph(7, frozenset()))


def test_vrep_and_json_round_trip():
    v = parity_polytope(uniform(2, 3))
    text = to_vrep(v)
    assert text.splitlines()[:3] == ["V-representation", "begin", "8 7 rational"]
    assert text.splitlines()[3] == "1 0 0 0 0 0 0"
    assert from_vrep(text) == v
    assert vertex_set_from_json(vertex_set_to_json(v)) == v
    with pytest.raises(ValueError):
        from_vrep("begin\n1 2 rational\n1 0\nend\n")
    with pytest.raises(ValueError):
        from_vrep("V-representation\nbegin\n1 2 rational\n0 1\nend\n")
    with pytest.raises(ValueError):
        vertex_set_from_json('{"dim": 3, "points": [[0, 1]]}')


def test_vertex_set_validation():
    with pytest.raises(ValueError):
        V("01", "01")
    with pytest.raises(ValueError):
        VertexSet01.from_vectors([[0, 2]])
    with pytest.raises(ValueError):
        VertexSet01(2, ())


def test_size_guard(monkeypatch):
    monkeypatch.delenv("PP_MAX_DIM", raising=False)
    big = VertexSet01(5, tuple(range(17)))
    with pytest.raises(SizeGuardError):
        face_lattice(big)
    f = face_lattice(big, force=True).f_vector
    assert f[0] == 17 and f[-1] == 1
    monkeypatch.setenv("PP_MAX_DIM", "20")
    assert face_lattice(big).f_vector == f
    with pytest.raises(SizeGuardError):
        face_lattice(parity_polytope(uniform(2, 3)), max_dim=3)
