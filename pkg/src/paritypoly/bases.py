"""Generating systems of the interaction space as explicit matrices.

Every matrix has one row per configuration ``x`` in ``{0,1}^N``, in ascending
binary order of the string ``x_1 x_2 ... x_N`` (``x_1`` most significant).
Configurations are packed as ints with ``x_{i+1}`` in bit ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from . import linalg
from .gf2 import parity
from .hypergraph import HypergraphError, PreHypergraph, is_hypergraph, maximal_elements, members

KINDS = ("parity", "character", "monomial", "marginal")
MAX_N = 16


def configurations(n: int) -> list[int]:
    """All of ``{0,1}^n`` in table order, packed ``x_{i+1}`` -> bit ``i``."""
    return [sum(((r >> (n - 1 - i)) & 1) << i for i in range(n)) for r in range(1 << n)]


def config_str(x: int, n: int) -> str:
    return "".join(str((x >> i) & 1) for i in range(n))


def parity_vector(a: PreHypergraph, x: int) -> int:
    """The parity image of ``x``, packed with set ``j`` (canonical order) in bit ``j``."""
    out = 0
    for j, s in enumerate(a.sets):
        if parity(x & s):
            out |= 1 << j
    return out


def parity_rows(a: PreHypergraph) -> list[int]:
    return [parity_vector(a, x) for x in configurations(a.n)]


@dataclass(frozen=True)
class StatisticMatrix:
    kind: str
    n: int
    columns: tuple[str, ...]
    data: np.ndarray

    @property
    def rows(self) -> list[tuple[int, ...]]:
        return [tuple(int(v) for v in r) for r in self.data]

    def to_tsv(self) -> str:
        head = "x\t" + "\t".join(self.columns)
        lines = [head]
        for x, r in zip(configurations(self.n), self.data):
            lines.append(config_str(x, self.n) + "\t" + "\t".join(str(int(v)) for v in r))
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "columns": list(self.columns),
            "rows": [config_str(x, self.n) for x in configurations(self.n)],
            "data": [[int(v) for v in r] for r in self.data],
        }


def _check_size(a: PreHypergraph) -> None:
    if a.n > MAX_N:
        raise ValueError(f"N={a.n} exceeds the limit of {MAX_N} variables")


def _labels(a: PreHypergraph) -> tuple[str, ...]:
    return tuple(a.label(s) for s in a.sets)


def parity_matrix(a: PreHypergraph) -> StatisticMatrix:
    _check_size(a)
    data = np.array(
        [[parity(x & s) for s in a.sets] for x in configurations(a.n)], dtype=np.int8
    )
    return StatisticMatrix("parity", a.n, _labels(a), data)


def character_matrix(a: PreHypergraph) -> StatisticMatrix:
    _check_size(a)
    data = np.array(
        [[-1 if parity(x & s) else 1 for s in a.sets] for x in configurations(a.n)],
        dtype=np.int8,
    )
    return StatisticMatrix("character", a.n, _labels(a), data)


def monomial_matrix(a: PreHypergraph) -> StatisticMatrix:
    _check_size(a)
    data = np.array(
        [[int(x & s == s) for s in a.sets] for x in configurations(a.n)], dtype=np.int8
    )
    return StatisticMatrix("monomial", a.n, _labels(a), data)


def _cylinders(n: int, sets) -> tuple[list[str], list[list[int]]]:
    """Indicator columns ``1{X_A = y_A}``, ``y_A`` ascending over A's members."""
    labels, cols = [], []
    xs = configurations(n)
    for s in sets:
        mem = members(s)
        for y in product((0, 1), repeat=len(mem)):
            target = sum(1 << i for i, b in zip(mem, y) if b)
            labels.append(
                "{" + ",".join(str(i + 1) for i in mem) + "}=" + "".join(map(str, y))
            )
            cols.append([int(x & s == target) for x in xs])
    return labels, cols


def marginal_matrix(a: PreHypergraph) -> StatisticMatrix:
    """Configuration-major marginal map: columns ``(A, y_A)`` over maximal A."""
    _check_size(a)
    labels, cols = _cylinders(a.n, maximal_elements(a))
    data = np.array(cols, dtype=np.int8).T.copy()
    return StatisticMatrix("marginal", a.n, tuple(labels), data)


def statistic_matrix(a: PreHypergraph, kind: str) -> StatisticMatrix:
    builders = {
        "parity": parity_matrix,
        "character": character_matrix,
        "monomial": monomial_matrix,
        "marginal": marginal_matrix,
    }
    try:
        return builders[kind](a)
    except KeyError:
        raise ValueError(f"unknown basis {kind!r}; choose from {', '.join(KINDS)}") from None


def _require_hypergraph(a: PreHypergraph) -> None:
    if not is_hypergraph(a):
        raise HypergraphError("input is not a hypergraph (not closed under nonempty subsets)")


def interaction_space_dim(a: PreHypergraph) -> int:
    """Rank of all cylinder indicators ``1{X_A = y_A}``, ``A`` in the family."""
    _require_hypergraph(a)
    _check_size(a)
    _, cols = _cylinders(a.n, a.sets)
    return linalg.rank(cols)


def verify_parity_basis(a: PreHypergraph) -> bool:
    """Parity columns plus the constant span exactly the interaction space, independently."""
    _require_hypergraph(a)
    _check_size(a)
    ones = [1] * (1 << a.n)
    par = [list(c) for c in parity_matrix(a).data.T.tolist()] + [ones]
    _, cyl = _cylinders(a.n, a.sets)
    rp = linalg.rank(par)
    if rp != len(par):
        return False
    return rp == linalg.rank(cyl) == linalg.rank(par + cyl)


class StatisticTransformer(TransformerMixin, BaseEstimator):
    """Map 0/1 configurations to their sufficient-statistic vectors.

    Parameters
    ----------
    hypergraph : PreHypergraph
        Family indexing the statistics.
    kind : {"parity", "character", "monomial", "marginal"}
    """

    def __init__(self, hypergraph: PreHypergraph | None = None, kind: str = "parity"):
        self.hypergraph = hypergraph
        self.kind = kind

    def fit(self, X, y=None):
        if self.hypergraph is None:
            raise ValueError("hypergraph must be set")
        if self.kind not in KINDS:
            raise ValueError(f"unknown basis {self.kind!r}")
        X = self._validate(X)
        if X.shape[1] != self.hypergraph.n:
            raise ValueError(f"X has {X.shape[1]} columns, hypergraph has N={self.hypergraph.n}")
        self.n_features_in_ = X.shape[1]
        self.table_ = statistic_matrix(self.hypergraph, self.kind)
        self.columns_ = self.table_.columns
        return self

    def transform(self, X):
        check_is_fitted(self, "table_")
        X = self._validate(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} features, expected {self.n_features_in_}")
        n = self.n_features_in_
        # row index in table order: x_1 is the most significant bit
        weights = 1 << np.arange(n - 1, -1, -1)
        idx = X.astype(np.int64) @ weights
        return self.table_.data[idx].astype(np.int64)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "table_")
        return np.asarray(self.columns_, dtype=object)

    @staticmethod
    def _validate(X):
        X = check_array(X, dtype=np.int64)
        if not np.isin(X, (0, 1)).all():
            raise ValueError("configurations must be 0/1")
        return X
