"""Pairwise-comparison weighting of sibling groups.

Each group of siblings is weighted by how many permissions each member
commands. Two routes produce the weights:

* the matrix route: build the pairwise comparison matrix
  ``m[i][j] = count[i] / count[j]``, normalize its columns, and average
  each row;
* the closed form: ``w[i] = count[i] / sum(counts)``.

Because the matrix entries are ratios of one positive characteristic, the
matrix is ideally consistent (``m[i][j] == m[i][s] * m[s][j]`` for every
triple) and the two routes agree exactly, rational for rational. Both are
kept: the matrix route doubles as an in-repo oracle for the closed form
and as the extension point for future non-consistent (judgment-driven)
matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import EmptyGroupError


@dataclass(frozen=True)
class PairwiseMatrix:
    """Square positive reciprocal matrix of exact rationals."""

    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.entries)


def _check_counts(counts: Sequence[int]) -> None:
    if len(counts) == 0:
        raise EmptyGroupError("sibling group has no members")
    for c in counts:
        if c < 1:
            raise ValueError(f"permission counts must be >= 1, got {c}")


def build_matrix(counts: Sequence[int]) -> PairwiseMatrix:
    """Pairwise comparison matrix with entries ``counts[i] / counts[j]``."""
    _check_counts(counts)
    rows = tuple(
        tuple(Fraction(ci, cj) for cj in counts)
        for ci in counts
    )
    return PairwiseMatrix(rows)


def weights_via_matrix(matrix: PairwiseMatrix) -> list[Fraction]:
    """Weights by column normalization and row means, computed exactly.

    Normalized entry: ``m*[i][j] = m[i][j] / (m[1][j] + ... + m[k][j])``;
    weight: ``w[i] = (m*[i][1] + ... + m*[i][k]) / k``. The result sums
    to exactly 1.
    """
    k = matrix.dim
    column_sums = [
        sum(matrix.entries[i][j] for i in range(k))
        for j in range(k)
    ]
    return [
        sum(matrix.entries[i][j] / column_sums[j] for j in range(k)) / k
        for i in range(k)
    ]


def weights_closed_form(counts: Sequence[int]) -> list[Fraction]:
    """Weights without building a matrix: each count over the group total."""
    _check_counts(counts)
    total = sum(counts)
    return [Fraction(c, total) for c in counts]


def check_consistency(matrix: PairwiseMatrix) -> bool:
    """True iff ``m[i][j] == m[i][s] * m[s][j]`` holds exactly for all triples."""
    k = matrix.dim
    m = matrix.entries
    return all(
        m[i][j] == m[i][s] * m[s][j]
        for i in range(k)
        for s in range(k)
        for j in range(k)
    )
