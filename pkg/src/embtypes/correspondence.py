"""The centralizer map and the two routes to the local type.

A point of the apartment with denominator d also lives in the smaller
apartment of a degree-f centralizer when f divides d: the coordinates
stay put and only the denominator shrinks.  The local type of an
embedding datum can be computed two independent ways, by a counting
formula on the flattened datum and by walking the geometric pipeline
(standard chain, barycenter, diagonal move, centralizer); the verifier
checks both against the complement identity on the flattening.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .apartment import (
    ApartmentContext,
    ApartmentPoint,
    LocalType,
    barycenter,
    coordinate_class,
    local_type,
    make_point,
    standard_chain,
    translate,
)
from .cyclic import CyclicClass, canonical, complement, flatten, reshape
from .embedding import EmbeddingDatum, datum_to_json, make_datum, rank_reduce, skeleton


def to_centralizer(x: ApartmentPoint, f: int) -> ApartmentPoint:
    """Image of the point in the apartment of the degree-f centralizer.

    Coordinates are unchanged; the denominator shrinks from d to d / f,
    so in the affine chart this divides by f.
    """
    if f < 1:
        raise ValueError("f must be positive")
    if x.context.d % f:
        raise ValueError("not applicable: E must be unramified of degree dividing d")
    return make_point(ApartmentContext(x.context.m, x.context.d // f), x.alpha)


def from_centralizer(y: ApartmentPoint, f: int) -> ApartmentPoint:
    """Inverse direction: scale the denominator back up by f."""
    if f < 1:
        raise ValueError("f must be positive")
    return make_point(ApartmentContext(y.context.m, y.context.d * f), y.alpha)


def intersection_property(x: ApartmentPoint, f: int) -> bool:
    """Exponent identity defining the centralizer map.

    Entrywise ceil(e / f) of the square lattice of x at t must equal
    the square lattice of the image at t for every t.  Both sides are
    step functions of t whose jumps lie on a known rational grid, so
    sampling half steps over one period decides the identity for all t.
    The matrices are evaluated by integer ceiling division, which is
    what square_lattice_exponents computes at these t.
    """
    y = to_centralizer(x, f)
    d = x.context.d
    m = x.context.m
    small = y.context.d
    grid = lcm(d, *[a.denominator for a in x.alpha])
    q = 2 * grid
    # q * delta_ij is integral by the choice of grid
    big_num = [[int(q * d * (ai - aj)) for aj in x.alpha] for ai in x.alpha]
    small_num = [[int(q * small * (ai - aj)) for aj in x.alpha] for ai in x.alpha]
    # one period of the image side: t in [0, f/d), i.e. k < q * f / d
    for k in range(q * f // d):
        for i in range(m):
            row_b, row_s = big_num[i], small_num[i]
            for j in range(m):
                left = -((-(d * k + row_b[j])) // q)
                right = -((-(small * k + row_s[j])) // q)
                if -((-left) // f) != right:
                    return False
    return True


def local_type_direct(datum: EmbeddingDatum) -> tuple[Fraction, ...]:
    """Ordered local coordinates of the datum, by the counting formula.

    Reduce to a single column over the smaller field and let a_j be the
    row holding the j-th of the m units; the coordinates are the cyclic
    differences of the a_j over f * r, wrap term first.
    """
    ft = datum.f * datum.r
    flat = flatten(rank_reduce(datum).rows)
    a = []
    row = 0
    covered = flat[0]
    for j in range(1, datum.m + 1):
        while covered < j:
            row += 1
            covered += flat[row]
        a.append(row)
    mu = [Fraction(ft - a[-1] + a[0], ft)]
    mu.extend(Fraction(a[j] - a[j - 1], ft) for j in range(1, datum.m))
    return tuple(mu)


def local_type_geometric(datum: EmbeddingDatum) -> LocalType:
    """Local type of the datum, through the geometry of the apartment.

    Barycenter of the standard chain of the column sums in denominator
    f * r, moved to the diagonal frame by the skeleton levels, then
    read in the centralizer apartment.
    """
    sk = skeleton(datum)
    ctx = ApartmentContext(datum.m, datum.f * datum.r)
    x = barycenter(standard_chain(sk.partition), ctx)
    moved = translate(x, [-l for l in sk.levels])
    return local_type(to_centralizer(moved, datum.f))


def embedding_type_from_local(mu: LocalType, f: int, r: int) -> EmbeddingDatum:
    """A datum whose local type is the given class.

    Scale the class to f * r, complement, and cut into f rows; the
    result is one representative of the matrix class.
    """
    if f < 1 or r < 1:
        raise ValueError("f and r must be positive")
    if (f * r) % mu.denominator:
        raise ValueError(f"not a local type for ({f},{r})")
    scale = f * r // mu.denominator
    mat = reshape(complement([e * scale for e in mu.entries]), f, r)
    return make_datum(mat.rows, f, r, len(mu.entries))


@dataclass(frozen=True, slots=True)
class CorrespondenceReport:
    """Outcome of the three agreement checks for one datum."""

    datum: EmbeddingDatum
    coordinates: tuple[Fraction, ...]
    geometric: LocalType
    complement_class: CyclicClass | None
    verdict: bool
    mismatch: str | None


def verify_correspondence(datum: EmbeddingDatum) -> CorrespondenceReport:
    """Check the datum against its local type from every side.

    The checks run in order (integrality of f * r times the direct
    coordinates, complement identity against the flattening, agreement
    of the two pipelines) and the first failing site is recorded.
    """
    mu = local_type_direct(datum)
    geometric = local_type_geometric(datum)
    ft = datum.f * datum.r
    scaled = [ft * v for v in mu]
    mismatch = None
    comp = None
    if any(v.denominator != 1 for v in scaled):
        mismatch = "integrality"
    else:
        comp = complement([int(v) for v in scaled])
        if comp.vector != canonical(flatten(datum.rows)).vector:
            mismatch = "complement-identity"
    if mismatch is None and coordinate_class(mu) != geometric:
        mismatch = "pipeline-agreement"
    return CorrespondenceReport(datum, mu, geometric, comp, mismatch is None, mismatch)


def report_to_json(report: CorrespondenceReport) -> dict:
    """Wire form {datum, mu, complement, verdict, mismatch}."""
    return {
        "datum": datum_to_json(report.datum),
        "mu": [[v.numerator, v.denominator] for v in report.coordinates],
        "complement": None if report.complement_class is None else list(report.complement_class.vector),
        "verdict": "pass" if report.verdict else "fail",
        "mismatch": report.mismatch,
    }
