"""One apartment of the affine building, in exact rational coordinates.

Lattices are integer exponent vectors of length m, considered modulo
adding a constant (homothety).  A point of the apartment is a rational
coordinate vector alpha with alpha_m = 0; it selects the lattice
ceil(d * (t + alpha)) at parameter t, where d is the denominator the
context fixes.  Chains of lattices are the faces of the apartment,
hereditary orders are exponent matrices, and the local type of a point
is the cyclic class of its barycentric gaps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import ceil, gcd, lcm
from typing import Sequence

from .cyclic import CyclicClass, canonical

Exponents = tuple[int, ...]
Rational = Fraction | int


@dataclass(frozen=True, slots=True)
class ApartmentContext:
    """Ambient sizes: m frame lines, denominator d of the valuation."""

    m: int
    d: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.d < 1:
            raise ValueError("m and d must be positive")


def normalize_exponents(c: Sequence[int]) -> Exponents:
    """Shift so the least entry is 0, fixing a homothety representative."""
    v = tuple(int(x) for x in c)
    if not v:
        raise ValueError("empty exponent vector")
    low = min(v)
    return tuple(x - low for x in v)


def homothetic(a: Sequence[int], b: Sequence[int]) -> bool:
    """Whether two exponent vectors differ by a constant."""
    if len(a) != len(b):
        return False
    return normalize_exponents(a) == normalize_exponents(b)


@dataclass(frozen=True, slots=True)
class ChainFace:
    """One period of a lattice chain, stored canonically.

    steps lists (c^(0), ..., c^(r-1)), componentwise non-decreasing and
    strictly increasing around the cycle, with c^(r) := c^(0) + 1.  The
    stored representative starts at the lexicographically least
    normalized step, so equal chains compare equal.
    """

    steps: tuple[Exponents, ...]

    @property
    def period(self) -> int:
        return len(self.steps)

    @property
    def size(self) -> int:
        return len(self.steps[0])


def chain_face(steps: Sequence[Sequence[int]]) -> ChainFace:
    """Canonical chain face from one period of steps.

    Accepts any representative: the steps may carry a common shift and
    may start anywhere in the cycle.
    """
    raw = tuple(tuple(int(x) for x in s) for s in steps)
    if not raw or not raw[0]:
        raise ValueError("a chain needs at least one step")
    m = len(raw[0])
    if any(len(s) != m for s in raw):
        raise ValueError("steps must share one length")
    r = len(raw)
    # jump vectors, cyclically: jumps[l] leads into step l, jumps[0] wraps
    jumps = [tuple(raw[0][i] + 1 - raw[-1][i] for i in range(m))]
    for l in range(1, r):
        jumps.append(tuple(raw[l][i] - raw[l - 1][i] for i in range(m)))
    for j in jumps:
        if any(x not in (0, 1) for x in j):
            raise ValueError("each coordinate must rise exactly once per period")
        if not any(j):
            raise ValueError("steps must be strictly increasing around the cycle")
    norm = [normalize_exponents(s) for s in raw]
    start = min(range(r), key=lambda l: norm[l])
    out = [norm[start]]
    for k in range(1, r):
        j = jumps[(start + k) % r]
        out.append(tuple(out[-1][i] + j[i] for i in range(m)))
    return ChainFace(tuple(out))


def standard_chain(composition: Sequence[int]) -> ChainFace:
    """Chain of the composition (n_1, ..., n_r): block l jumps at step l.

    Step l is the 0/1 indicator of the first l blocks, so the period is
    the number of blocks and the jump counts are exactly the given
    composition.
    """
    parts = tuple(int(n) for n in composition)
    if not parts or any(n <= 0 for n in parts):
        raise ValueError("composition entries must be positive")
    m = sum(parts)
    cur = [0] * m
    steps = [tuple(cur)]
    pos = 0
    for n in parts[:-1]:
        for i in range(pos, pos + n):
            cur[i] = 1
        pos += n
        steps.append(tuple(cur))
    return chain_face(steps)


@dataclass(frozen=True, slots=True)
class ApartmentPoint:
    """A point of the apartment in chart coordinates, last entry 0."""

    context: ApartmentContext
    alpha: tuple[Fraction, ...]


def make_point(context: ApartmentContext, values: Sequence[Rational]) -> ApartmentPoint:
    """Point with the given chart coordinates, normalized so alpha_m = 0."""
    vals = [Fraction(v) for v in values]
    if len(vals) != context.m:
        raise ValueError("coordinate count must match the context")
    last = vals[-1]
    return ApartmentPoint(context, tuple(v - last for v in vals))


def lattice_at(x: ApartmentPoint, t: Rational) -> Exponents:
    """Exponent vector of the lattice the point selects at parameter t."""
    d = x.context.d
    tt = Fraction(t)
    return tuple(ceil(d * (tt + a)) for a in x.alpha)


def face_of(x: ApartmentPoint) -> ChainFace:
    """The face whose closure contains the point.

    Coordinate i moves as t crosses (-d * alpha_i) mod 1 (in the scaled
    parameter), so the distinct thresholds give one step each and the
    period is the number of distinct fractional parts of d * alpha.
    """
    scaled = [x.context.d * a for a in x.alpha]
    thetas = sorted({(-v) % 1 for v in scaled})
    return chain_face([tuple(ceil(th + v) for v in scaled) for th in thetas])


def order_of_chain(ch: ChainFace) -> tuple[Exponents, ...]:
    """Exponent matrix of the chain: entry (i, j) is max_l (c^(l)_i - c^(l)_j)."""
    m = ch.size
    return tuple(
        tuple(max(s[i] - s[j] for s in ch.steps) for j in range(m)) for i in range(m)
    )


def chain_of_order(e: Sequence[Sequence[int]]) -> ChainFace:
    """The chain of all lattices stable under the exponent matrix.

    A vector c is stable exactly when c_i - c_j <= e_ij for all i, j.
    Fixing c_m = 0 confines the candidates to a box of width at most 1
    per coordinate, which is searched directly.
    """
    mat = tuple(tuple(int(v) for v in row) for row in e)
    m = len(mat)
    if m == 0 or any(len(row) != m for row in mat):
        raise ValueError("not a split hereditary order: matrix must be square")
    for i in range(m):
        if mat[i][i] != 0:
            raise ValueError("not a split hereditary order: nonzero diagonal")
        for j in range(m):
            if mat[i][j] + mat[j][i] not in (0, 1):
                raise ValueError("not a split hereditary order: e_ij + e_ji not in {0, 1}")
            for k in range(m):
                if mat[i][j] + mat[j][k] < mat[i][k]:
                    raise ValueError("not a split hereditary order: triangle inequality fails")
    last = m - 1
    ranges = [range(-mat[last][i], mat[i][last] + 1) for i in range(last)]
    stable = set()
    for combo in product(*ranges):
        c = combo + (0,)
        if all(c[i] - c[j] <= mat[i][j] for i in range(m) for j in range(m)):
            stable.add(normalize_exponents(c))
    classes = sorted(stable)
    base = classes[0]
    window = []
    for n in classes[1:]:
        k = max(base[i] - n[i] for i in range(m))
        window.append(tuple(x + k for x in n))
    window.sort(key=sum)
    return chain_face([base] + window)


def invariant_of(ch: ChainFace) -> tuple[int, CyclicClass]:
    """Period and jump-count class: how many coordinates move at each step."""
    r = ch.period
    m = ch.size
    counts = [
        sum(ch.steps[l][i] - ch.steps[l - 1][i] for i in range(m)) for l in range(1, r)
    ]
    counts.append(sum(ch.steps[0][i] + 1 - ch.steps[r - 1][i] for i in range(m)))
    return r, canonical(counts)


def square_lattice_exponents(x: ApartmentPoint, t: Rational) -> tuple[Exponents, ...]:
    """Exponent matrix of the square lattice the point selects at t.

    Entry (i, j) is ceil(d * (t + alpha_i - alpha_j)), the largest value
    of c_i(s + t) - c_j(s) over all s.
    """
    d = x.context.d
    tt = Fraction(t)
    return tuple(
        tuple(ceil(d * (tt + ai - aj)) for aj in x.alpha) for ai in x.alpha
    )


def oriented_edge(v: Sequence[int], w: Sequence[int]) -> bool:
    """Whether the edge from vertex class [v] to [w] carries the orientation.

    True when some representative of [w] lies above v with total excess
    exactly 1.  Distinct adjacent vertices are oriented in exactly one
    direction; coincident classes span no edge.
    """
    a = tuple(int(x) for x in v)
    b = tuple(int(x) for x in w)
    m = len(a)
    if len(b) != m:
        raise ValueError("vertex vectors must share one length")
    if homothetic(a, b):
        raise ValueError("not an edge")
    excess = 1 - (sum(b) - sum(a))
    if excess % m:
        return False
    k = excess // m
    return all(b[i] + k - a[i] >= 0 for i in range(m))


def barycenter(ch: ChainFace, context: ApartmentContext) -> ApartmentPoint:
    """Equal-weight average of the chain's vertex points."""
    if context.m != ch.size:
        raise ValueError("chain size must match the context")
    r = ch.period
    coords = [
        Fraction(sum(s[i] for s in ch.steps), r * context.d) for i in range(ch.size)
    ]
    return make_point(context, coords)


def translate(x: ApartmentPoint, shift: Sequence[int]) -> ApartmentPoint:
    """Translate by an integer exponent vector: alpha_i += shift_i / d."""
    if len(shift) != x.context.m:
        raise ValueError("shift length must match the context")
    d = x.context.d
    return make_point(x.context, [a + Fraction(int(s), d) for a, s in zip(x.alpha, shift)])


@dataclass(frozen=True, slots=True)
class LocalType:
    """Cyclic class of barycentric gaps, scaled to least terms.

    entries is the canonical rotation of the scaled gaps; the rational
    gaps sum to 1, so the entries sum to the denominator.
    """

    entries: tuple[int, ...]
    denominator: int

    def __len__(self) -> int:
        return len(self.entries)

    def as_fractions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(e, self.denominator) for e in self.entries)


def gap_class(values: Sequence[Rational]) -> LocalType:
    """Gap class of a rational vector, a function of fractional parts only.

    Sort the fractional parts decreasingly; the gaps between consecutive
    ones, led by the wrap gap 1 - largest + smallest, form the local
    coordinate vector.  Adding one constant to all values rotates the
    gap list, so the class is shift invariant.
    """
    vals = [Fraction(v) for v in values]
    if not vals:
        raise ValueError("empty vector")
    den = lcm(*[v.denominator for v in vals])
    b = sorted(((v.numerator * (den // v.denominator)) % den for v in vals), reverse=True)
    gaps = [den - b[0] + b[-1]]
    gaps.extend(b[k - 1] - b[k] for k in range(1, len(b)))
    g = 0
    for x in gaps:
        g = gcd(g, x)
    # the gaps sum to den, so g divides den as well
    return LocalType(canonical([x // g for x in gaps]).vector, den // g)


def coordinate_class(values: Sequence[Rational]) -> LocalType:
    """The cyclic class of an explicit coordinate vector, in least terms.

    For turning an ordered vector of barycentric coordinates (summing
    to 1) into a LocalType comparable with gap_class output.
    """
    vals = [Fraction(v) for v in values]
    if not vals or any(v < 0 for v in vals) or sum(vals) != 1:
        raise ValueError("coordinates must be non-negative and sum to 1")
    den = lcm(*[v.denominator for v in vals])
    ints = [int(v * den) for v in vals]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return LocalType(canonical([x // g for x in ints]).vector, den // g)


def local_type(x: ApartmentPoint) -> LocalType:
    """Local type of the point: the gap class of d * alpha."""
    return gap_class([x.context.d * a for a in x.alpha])


def point_to_json(x: ApartmentPoint) -> dict:
    """Wire form {m, d, alpha: [[num, den], ...]}."""
    return {
        "m": x.context.m,
        "d": x.context.d,
        "alpha": [[a.numerator, a.denominator] for a in x.alpha],
    }


def point_from_json(obj: dict) -> ApartmentPoint:
    ctx = ApartmentContext(int(obj["m"]), int(obj["d"]))
    return make_point(ctx, [Fraction(int(n), int(d)) for n, d in obj["alpha"]])
