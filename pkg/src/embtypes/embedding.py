"""Embedding data: multiplicity matrices with positive columns.

An embedding datum is an f x r matrix of non-negative integers summing
to m in which every column has a positive entry.  Two data are the same
embedding type when their row-major flattenings are rotations of each
other.  The skeleton records the column sums and the row level of each
of the m units in column-major order; rank reduction views the datum
over a smaller field as a single column of length f * r.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .cyclic import classes_equal, flatten, make_matrix


@dataclass(frozen=True, slots=True)
class EmbeddingDatum:
    """f x r multiplicity matrix with entry sum m and positive columns."""

    f: int
    r: int
    m: int
    rows: tuple[tuple[int, ...], ...]


def make_datum(rows: Sequence[Sequence[int]], f: int, r: int, m: int) -> EmbeddingDatum:
    """Validated embedding datum."""
    mat = make_matrix(rows)
    if mat.nrows != f or mat.ncols != r:
        raise ValueError(f"expected a {f}x{r} matrix, got {mat.nrows}x{mat.ncols}")
    total = sum(sum(row) for row in mat.rows)
    if total != m:
        raise ValueError(f"size mismatch: entries sum to {total}, not {m}")
    for j in range(r):
        if all(row[j] == 0 for row in mat.rows):
            raise ValueError(f"invalid embedding datum: column {j} is zero")
    return EmbeddingDatum(f, r, m, mat.rows)


def data_equivalent(a: EmbeddingDatum, b: EmbeddingDatum) -> bool:
    """Same embedding type: flattenings agree up to rotation."""
    if (a.f, a.r, a.m) != (b.f, b.r, b.m):
        return False
    return classes_equal(flatten(a.rows), flatten(b.rows))


@dataclass(frozen=True, slots=True)
class PearlSkeleton:
    """Column sums and the row level of each unit, column-major."""

    partition: tuple[int, ...]
    levels: tuple[int, ...]


def skeleton(datum: EmbeddingDatum) -> PearlSkeleton:
    """Partition and levels of the datum.

    Column j contributes its sum to the partition and, scanning its
    rows upward, repeats level i exactly rows[i][j] times.
    """
    partition = tuple(sum(row[j] for row in datum.rows) for j in range(datum.r))
    levels = []
    for j in range(datum.r):
        for i in range(datum.f):
            levels.extend([i] * datum.rows[i][j])
    return PearlSkeleton(partition, tuple(levels))


def rank_reduce(datum: EmbeddingDatum) -> EmbeddingDatum:
    """The datum over the smaller field: one column of length f * r.

    The flattening is preserved entry for entry, not merely as a class.
    """
    flat = flatten(datum.rows)
    return make_datum([(v,) for v in flat], datum.f * datum.r, 1, datum.m)


def unramified_degree(residue_degree: int, d: int) -> int:
    """Degree of the largest unramified part landing inside the algebra."""
    if residue_degree < 1 or d < 1:
        raise ValueError("degrees must be positive")
    return gcd(residue_degree, d)


def datum_to_json(datum: EmbeddingDatum) -> dict:
    """Wire form {f, r, m, rows}."""
    return {"f": datum.f, "r": datum.r, "m": datum.m, "rows": [list(r) for r in datum.rows]}


def datum_from_json(obj: dict) -> EmbeddingDatum:
    return make_datum(obj["rows"], int(obj["f"]), int(obj["r"]), int(obj["m"]))
