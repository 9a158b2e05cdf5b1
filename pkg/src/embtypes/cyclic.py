"""Cyclic classes of integer vectors and the complement operation.

A vector of non-negative integers is considered up to cyclic rotation.
This module fixes a canonical rotation for each class, converts a class
to and from its pairs form (the nonzero values together with the gaps
separating them), and implements the complement, which swaps values
with gaps and exchanges classes of length s summing to t with classes
of length t summing to s.  Matrices enter through their row-major
flattening; reshape cuts a class back into a matrix with no zero
column.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Vec = tuple[int, ...]


def rotate(entries: Sequence[int], k: int) -> Vec:
    """Left rotation by k places: (v_k, v_{k+1}, ..., v_{k-1})."""
    v = tuple(entries)
    if not v:
        raise ValueError("empty vector")
    k %= len(v)
    return v[k:] + v[:k]


def _least_rotation(items: tuple) -> tuple[tuple, int]:
    """Lexicographically least rotation of items and its smallest shift."""
    best, shift = items, 0
    for k in range(1, len(items)):
        cand = items[k:] + items[:k]
        if cand < best:
            best, shift = cand, k
    return best, shift


@dataclass(frozen=True, slots=True)
class CyclicClass:
    """A rotation class, stored as its canonical representative.

    vector is the lexicographically least rotation of the input and
    shift the smallest k with rotate(input, k) == vector.
    """

    vector: Vec
    shift: int

    def __len__(self) -> int:
        return len(self.vector)

    @property
    def total(self) -> int:
        return sum(self.vector)


def canonical(entries: Sequence[int] | CyclicClass) -> CyclicClass:
    """Canonical representative of the rotation class of entries."""
    if isinstance(entries, CyclicClass):
        return CyclicClass(entries.vector, 0)
    v = tuple(int(e) for e in entries)
    if not v:
        raise ValueError("empty vector has no rotation class")
    if any(e < 0 for e in v):
        raise ValueError("entries must be non-negative")
    vec, shift = _least_rotation(v)
    return CyclicClass(vec, shift)


def classes_equal(a: Sequence[int] | CyclicClass, b: Sequence[int] | CyclicClass) -> bool:
    """Whether two vectors are rotations of each other."""
    return canonical(a).vector == canonical(b).vector


@dataclass(frozen=True, slots=True)
class PairsForm:
    """Pairs form of a nonzero class: (value, gap to the next nonzero).

    One pair per nonzero entry, in cyclic order around the vector; the
    gap of the last pair wraps past the end.  The pair list is stored in
    its least rotation, so equal classes give equal forms.
    """

    pairs: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def length(self) -> int:
        """Length of the underlying vector, the sum of the gaps."""
        return sum(g for _, g in self.pairs)

    @property
    def total(self) -> int:
        """Sum of the underlying vector, the sum of the values."""
        return sum(a for a, _ in self.pairs)


def pairs_of(entries: Sequence[int] | CyclicClass) -> PairsForm:
    """Pairs form of the class of entries.

    Rotating the vector rotates the pair list, so the stored form only
    depends on the class.  The zero vector has no pairs form.
    """
    v = entries.vector if isinstance(entries, CyclicClass) else tuple(int(e) for e in entries)
    if any(e < 0 for e in v):
        raise ValueError("entries must be non-negative")
    support = [i for i, e in enumerate(v) if e != 0]
    if not support:
        raise ValueError("zero vector has no pairs form")
    s = len(v)
    pairs = []
    for j, i in enumerate(support):
        if j + 1 < len(support):
            gap = support[j + 1] - i
        else:
            gap = support[0] + s - i
        pairs.append((v[i], gap))
    least, _ = _least_rotation(tuple(pairs))
    return PairsForm(least)


def from_pairs(form: PairsForm | Iterable[Sequence[int]]) -> CyclicClass:
    """Class of the vector with the given pairs form.

    Gaps say how far each value sits from the next one, so the gaps sum
    to the vector length and the values fill the support.
    """
    if isinstance(form, PairsForm):
        pairs = form.pairs
    else:
        pairs = tuple((int(a), int(b)) for a, b in form)
    if not pairs:
        raise ValueError("pairs form must be nonempty")
    if any(a <= 0 or b <= 0 for a, b in pairs):
        raise ValueError("values and gaps must be positive")
    out = [0] * sum(b for _, b in pairs)
    pos = 0
    for a, b in pairs:
        out[pos] = a
        pos += b
    return canonical(out)


def complement(entries: Sequence[int] | CyclicClass) -> CyclicClass:
    """Complement class: swap the roles of values and gaps.

    If the pairs form is ((a_0, b_0), ..., (a_k, b_k)), the complement
    has pairs form ((b_0, a_1), (b_1, a_2), ..., (b_k, a_0)).  It maps
    classes of length s and sum t to classes of length t and sum s, and
    applying it twice gives back the original class.
    """
    p = pairs_of(entries).pairs
    k = len(p)
    swapped = tuple((p[j][1], p[(j + 1) % k][0]) for j in range(k))
    return from_pairs(swapped)


@dataclass(frozen=True, slots=True)
class CycMatrix:
    """Integer matrix compared through the class of its flattening."""

    rows: tuple[Vec, ...]

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])


def make_matrix(rows: Sequence[Sequence[int]]) -> CycMatrix:
    """Validated matrix from nested sequences."""
    tup = tuple(tuple(int(e) for e in r) for r in rows)
    if not tup or not tup[0]:
        raise ValueError("matrix must be nonempty")
    if any(len(r) != len(tup[0]) for r in tup):
        raise ValueError("ragged matrix")
    if any(e < 0 for r in tup for e in r):
        raise ValueError("entries must be non-negative")
    return CycMatrix(tup)


def flatten(rows: Sequence[Sequence[int]] | CycMatrix) -> Vec:
    """Row-major flattening of a matrix."""
    mat = rows if isinstance(rows, CycMatrix) else make_matrix(rows)
    return tuple(e for row in mat.rows for e in row)


def matrices_equal(a: Sequence[Sequence[int]] | CycMatrix, b: Sequence[Sequence[int]] | CycMatrix) -> bool:
    """Whether two matrices flatten to the same rotation class."""
    return classes_equal(flatten(a), flatten(b))


def reshape(entries: Sequence[int] | CyclicClass, nrows: int, ncols: int) -> CycMatrix:
    """Cut a class into an nrows x ncols matrix with no zero column.

    Scans the rotations of the canonical vector in shift order and cuts
    the first one whose columns all have positive sum.
    """
    v = canonical(entries).vector
    s = len(v)
    if nrows <= 0 or ncols <= 0:
        raise ValueError("matrix dimensions must be positive")
    if s != nrows * ncols:
        raise ValueError(f"cannot reshape length {s} into {nrows}x{ncols}")
    for k in range(s):
        w = rotate(v, k)
        rows = tuple(w[i * ncols : (i + 1) * ncols] for i in range(nrows))
        if all(any(row[j] for row in rows) for j in range(ncols)):
            return CycMatrix(rows)
    raise ValueError("no rotation yields positive columns")
