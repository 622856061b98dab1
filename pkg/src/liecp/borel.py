"""Spectral matrix of a Borel subalgebra.

In the ordered basis (h_1..h_n, E_1..E_s), positive roots sorted by height,
``ad h_i`` is diagonal and each ``ad E_j`` is strictly lower triangular, so the
adjoint characteristic polynomial of B splits as::

    z0^n * prod_j (z0 + sum_i alpha_j(h_i) z_i)

With the coroot basis h_i = h_{alpha_i}, ``alpha_j(h_i)`` is the Cartan integer
``<alpha_j, alpha_i>``, i.e. the fundamental coordinates of alpha_j.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exactnum import RationalMatrix, rank_over_rationals
from .rootsys import RootSystem
from .weights import WeightMultiset


@dataclass(frozen=True)
class SpectralMatrix:
    matrix: RationalMatrix
    rank: int
    num_positive: int

    @property
    def size(self) -> int:
        return self.rank + self.num_positive


def borel_factors(rs: RootSystem) -> WeightMultiset:
    """Linear factors of f_B: the zero vector n times plus one per positive root."""
    entries: dict[tuple[int, ...], int] = {(0,) * rs.rank: rs.rank}
    for w in rs.positive_roots_fundamental:
        entries[w] = entries.get(w, 0) + 1
    return WeightMultiset(entries, rs.tag)


def spectral_matrix(rs: RootSystem) -> SpectralMatrix:
    n, s = rs.rank, len(rs.positive_roots)
    size = n + s
    rows = [[0] * size for _ in range(n)]
    for w in rs.positive_roots_fundamental:
        rows.append(list(w) + [0] * s)
    return SpectralMatrix(RationalMatrix.from_rows(rows, cols=size), n, s)


def spectral_rank(rs: RootSystem, check: bool = True) -> int:
    """Exact rank of the spectral matrix; with ``check`` it must equal dim h."""
    r = rank_over_rationals(spectral_matrix(rs).matrix)
    if check and r != rs.rank:
        raise AssertionError(f"rank of the spectral matrix of {rs.name} is {r}, expected {rs.rank}")
    return r
