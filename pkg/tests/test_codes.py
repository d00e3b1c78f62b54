from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from paritypoly.bases import parity_rows
from paritypoly.codes import (
    LinearCode,
    NotStandardFormError,
    code_from_hypergraph,
    codewords,
    distance_formula,
    hypergraph_from_generator,
    min_distance,
    verify_homomorphism,
)
from paritypoly.gf2 import GF2Matrix, popcount
from paritypoly.hypergraph import PreHypergraph, uniform


def G(*rows):
    return GF2Matrix.from_strings(rows)


def _all_prehypergraphs(n):
    extra = [m for m in range(1, 1 << n) if m & (m - 1)]
    for sel in range(1 << len(extra)):
        sets = [1 << i for i in range(n)] + [m for i, m in enumerate(extra) if sel >> i & 1]
        yield PreHypergraph(n, tuple(sets))


def _distance_by_pairs(words):
    # definition: smallest Hamming distance between distinct codewords
    return min(popcount(a ^ b) for a, b in combinations(words, 2))


def test_generator_of_uniform_2_3():
    c = code_from_hypergraph(uniform(2, 3))
    assert c.generator.to_strings() == ["100110", "010101", "001011"]
    assert (c.length, c.dim) == (6, 3)


def test_codewords_are_parity_rows():
    for a in (uniform(1, 3), uniform(2, 3), uniform(2, 4)):
        assert sorted(codewords(code_from_hypergraph(a))) == sorted(parity_rows(a))


def test_dependent_generator_rejected():
    with pytest.raises(ValueError):
        LinearCode(G("110", "011", "101"))


@pytest.mark.parametrize("n", range(1, 6))
def test_min_distance_formula(n):
    for k in range(1, n + 1):
        c = code_from_hypergraph(uniform(k, n))
        d = min_distance(c)
        assert d == distance_formula(k, n)
        assert d == _distance_by_pairs(codewords(c))


def test_distance_formula_values():
    assert [distance_formula(k, 4) for k in range(1, 5)] == [1, 4, 7, 8]
    with pytest.raises(ValueError):
        distance_formula(0, 3)


def test_round_trip_uniform_2_3():
    a, report = hypergraph_from_generator(G("100110", "010101", "001011"))
    assert a == uniform(2, 3)
    assert not report


def test_reordered_generator_gives_other_prehypergraph():
    a, report = hypergraph_from_generator(G("100110", "010011", "001111"))
    assert a.as_lists() == [[1], [2], [3], [1, 3], [2, 3], [1, 2, 3]]
    assert not report


def test_all_ones_column():
    a, _ = hypergraph_from_generator(G("1001", "0101", "0011"))
    assert a.as_lists() == [[1], [2], [3], [1, 2, 3]]


def test_round_trip_exhaustive_n3():
    seen = 0
    for a in _all_prehypergraphs(3):
        back, report = hypergraph_from_generator(code_from_hypergraph(a).generator)
        assert back == a and not report
        seen += 1
    assert seen == 16


@settings(max_examples=80)
@given(st.sets(st.sampled_from([m for m in range(1, 16) if m & (m - 1)])))
def test_round_trip_n4(extra):
    a = PreHypergraph(4, tuple([1, 2, 4, 8] + sorted(extra)))
    back, report = hypergraph_from_generator(code_from_hypergraph(a).generator)
    assert back == a and not report


def test_duplicate_columns_reported():
    a, report = hypergraph_from_generator(G("10110", "01011"))
    assert a.as_lists() == [[1], [2], [1, 2]]
    assert report.atom_copies == (0, 2)
    assert report.repeated == ()
    a, report = hypergraph_from_generator(G("1011", "0111"))
    assert a.as_lists() == [[1], [2], [1, 2]]
    assert report.repeated == (1,)


def test_non_standard_form_rejected():
    with pytest.raises(NotStandardFormError, match="standard form"):
        hypergraph_from_generator(G("011", "101"))
    with pytest.raises(NotStandardFormError, match="zero"):
        hypergraph_from_generator(G("100", "010"))
    with pytest.raises(NotStandardFormError):
        hypergraph_from_generator(G("10", "01", "11"))


@pytest.mark.parametrize("n", range(1, 6))
def test_homomorphism_uniform(n):
    for k in range(1, n + 1):
        assert verify_homomorphism(uniform(k, n))


def test_homomorphism_every_prehypergraph_n3():
    assert all(verify_homomorphism(a) for a in _all_prehypergraphs(3))
