"""Newton polygons of staircases and their limiting shape.

A polygon here is the unbounded region of the first quadrant lying on or
above a convex chain running from the y-axis down to the x-axis; only the
chain is stored.  All coordinates are exact ``Fraction`` values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cohomology import AsymptoticProfile, asymptotic_profile, hilbert_function
from .configuration import ConfigurationType, NegativeCurves, enumerate_NEG
from .errors import InconsistencyError, InsufficientDataError, ValidationError
from .staircase import Staircase, staircase_from_hilbert

Point = tuple[Fraction, Fraction]


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class RationalPolygon:
    vertices: tuple[Point, ...]

    def __post_init__(self) -> None:
        verts = tuple((Fraction(x), Fraction(y)) for x, y in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if not verts:
            raise ValidationError("a polygon needs at least one vertex")
        if verts[0][0] != 0 or verts[-1][1] != 0:
            raise ValidationError("chain must start on the y-axis and end on the x-axis")
        for a, b in zip(verts, verts[1:]):
            if not (b[0] > a[0] and b[1] < a[1]):
                raise ValidationError(f"chain not monotone between {a} and {b}")
        for a, b, c in zip(verts, verts[1:], verts[2:]):
            if _cross(a, b, c) <= 0:
                raise ValidationError(f"chain not strictly convex at {b}")

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self):
        return list(zip(self.vertices, self.vertices[1:]))

    def contains_point(self, p: Point) -> bool:
        if p[0] < 0 or p[1] < 0:
            return False
        if len(self.vertices) == 1:
            return True
        return all(_cross(a, b, p) >= 0 for a, b in self.edges())

    def on_boundary(self, p: Point) -> bool:
        return self.contains_point(p) and any(
            _cross(a, b, p) == 0 and a[0] <= p[0] <= b[0] for a, b in self.edges())

    def to_json(self) -> list[list[str]]:
        return [[str(x), str(y)] for x, y in self.vertices]

    @classmethod
    def from_json(cls, data) -> RationalPolygon:
        return cls(tuple((Fraction(x), Fraction(y)) for x, y in data))

    def __str__(self) -> str:
        return " - ".join(f"({x}, {y})" for x, y in self.vertices)


def lower_chain(points) -> RationalPolygon:
    """Boundary chain of ``conv(points) + R^2_{>=0}``; collinear points dropped."""
    pts = sorted({(Fraction(x), Fraction(y)) for x, y in points})
    if not pts:
        raise ValidationError("no points")
    end = min(pts, key=lambda p: (p[1], p[0]))
    pts = [p for p in pts if p[0] <= end[0]]
    hull: list[Point] = []
    for p in pts:
        if hull and hull[-1][0] == p[0]:
            # same x, larger y: not on the lower boundary
            continue
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return RationalPolygon(tuple(hull))


def newton_polytope(s: Staircase) -> RationalPolygon:
    return lower_chain([(i, s.lambdas[i]) for i in range(s.alpha)] + [(s.alpha, 0)])


def scale(p: RationalPolygon, factor) -> RationalPolygon:
    factor = Fraction(factor)
    if factor <= 0:
        raise ValidationError("scale factor must be positive")
    return RationalPolygon(tuple((x * factor, y * factor) for x, y in p.vertices))


def complement_area(p: RationalPolygon) -> Fraction:
    """Area of the part of the quadrant below the chain."""
    return sum(((b[0] - a[0]) * (a[1] + b[1]) / 2 for a, b in p.edges()), Fraction(0))


def intercepts(p: RationalPolygon) -> tuple[Fraction, Fraction]:
    return p.vertices[-1][0], p.vertices[0][1]


def segment_count(p: RationalPolygon) -> int:
    return len(p.vertices) - 1


def contains(outer: RationalPolygon, inner: RationalPolygon) -> bool:
    """Whether the region of ``inner`` lies inside the region of ``outer``."""
    return all(outer.contains_point(v) for v in inner.vertices)


# --- limits -------------------------------------------------------------------


@dataclass(frozen=True)
class LimitReport:
    """Limiting shape together with the finite-m polygons it was checked against.

    ``samples`` holds the unscaled polygons ``P_m``.  ``exact`` says the limit
    is exact rather than the largest-m scaled polygon standing in for it.  When
    the limit comes from the rational reduction, ``extrapolated`` is the shape
    read off the samples by affine fitting (None if the fit failed) and
    ``agrees`` records whether the two match.
    """

    limit: RationalPolygon
    samples: tuple[tuple[int, RationalPolygon], ...]
    exact: bool
    extrapolated: RationalPolygon | None = None
    agrees: bool | None = None

    def scaled_samples(self) -> list[tuple[int, RationalPolygon]]:
        return [(m, scale(p, Fraction(1, m))) for m, p in self.samples]


def _is_affine(ms, values) -> bool:
    slopes = {Fraction(values[k + 1] - values[k], ms[k + 1] - ms[k]) for k in range(len(ms) - 1)}
    return len(slopes) == 1


def _surjections(K: int, k: int):
    """Nondecreasing maps of K chain positions onto k vertices, as index tuples."""
    for steps in itertools.combinations(range(K - 1), k - 1):
        idx, out = 0, [0]
        for g in range(K - 1):
            if g in steps:
                idx += 1
            out.append(idx)
        yield tuple(out)


_MAX_MATCHINGS = 200_000


def extrapolate_limit(samples) -> LimitReport:
    """Limit of ``P_m / m`` by fitting vertex families affinely in ``m``.

    The sample with the most vertices fixes the families; on samples with
    fewer vertices some families coincide, so every order-preserving way of
    merging them is tried until each coordinate of each family is affine in
    ``m`` across all samples.  The leading coefficients, with collinear
    points merged, are the limit.  If no matching fits, the largest-m scaled
    polygon is returned with ``exact=False``.
    """
    samples = tuple(sorted((int(m), p) for m, p in samples))
    if len(samples) < 3:
        raise InsufficientDataError(f"need at least 3 samples, got {len(samples)}")
    ms = [m for m, _ in samples]
    if len(set(ms)) != len(ms) or ms[0] < 1:
        raise ValidationError("sample multiplicities must be distinct positive integers")
    K = max(len(p) for _, p in samples)
    options = [list(_surjections(K, len(p))) for _, p in samples]
    total = 1
    for o in options:
        total *= len(o)
    fitted = None
    if total <= _MAX_MATCHINGS:
        for choice in itertools.product(*options):
            families = [[samples[s][1].vertices[choice[s][f]] for s in range(len(samples))]
                        for f in range(K)]
            if all(_is_affine(ms, [v[0] for v in fam]) and _is_affine(ms, [v[1] for v in fam])
                   for fam in families):
                fitted = [tuple(Fraction(fam[1][c] - fam[0][c], ms[1] - ms[0]) for c in (0, 1))
                          for fam in families]
                break
    if fitted is None:
        m, p = samples[-1]
        return LimitReport(scale(p, Fraction(1, m)), samples, False)
    return LimitReport(lower_chain(fitted), samples, True)


def limit_from_profile(profile: AsymptoticProfile) -> RationalPolygon:
    """Limit shape from the scaled x,y-growth ``c(s)`` of the rational reduction.

    Scaled, a monomial ``x^a y^b`` lies in the limit iff ``b <= c(a + b)``; the
    boundary is traced by ``s -> (s - c(s), c(s))`` from ``s = alpha`` up to
    the first ``s`` with ``c(s) = s``, closed off by ``(alpha, 0)``.
    """
    chambers = sorted(profile.chambers, key=lambda ch: ch.lo)
    top = None
    for ch in chambers:
        lead, const = ch.slope[0] - 1, ch.offset[0]
        if lead * ch.lo + const >= 0:
            top = ch.lo
        elif lead > 0 and (ch.hi is None or -const / lead <= ch.hi):
            top = -const / lead
        if top is not None:
            break
    if top is None:
        raise InconsistencyError("growth rate never catches up with the degree")
    pts: list[Point] = [(profile.alpha, Fraction(0))]
    for ch in chambers:
        for s in (ch.lo, ch.hi):
            if s is not None and s <= top:
                c = ch.degree(s)
                pts.append((s - c, c))
    c = profile.degree(top)
    pts.append((top - c, c))
    return lower_chain(pts)


def sample_polytope(cfg: ConfigurationType, m: int,
                    neg_curves: NegativeCurves | None = None) -> RationalPolygon:
    return newton_polytope(staircase_from_hilbert(hilbert_function(cfg, m, neg_curves=neg_curves)))


def limiting_shape(cfg: ConfigurationType, m_list=(12, 24, 36),
                   neg_curves: NegativeCurves | None = None) -> LimitReport:
    """Exact limiting shape, cross-checked against the polygons for ``m_list``.

    The limit itself comes from the rational reduction, which needs no
    sampling.  The samples are fitted independently; every scaled sample must
    lie inside the limit, and ``agrees`` reports whether the fit reproduced it.
    """
    m_list = [int(m) for m in m_list]
    if len(m_list) < 3:
        raise InsufficientDataError(f"need at least 3 values of m, got {len(m_list)}")
    if any(m < 1 for m in m_list):
        raise ValidationError("multiplicities must be positive")
    neg_curves = neg_curves or enumerate_NEG(cfg)
    samples = [(m, sample_polytope(cfg, m, neg_curves)) for m in m_list]
    fit = extrapolate_limit(samples)
    limit = limit_from_profile(asymptotic_profile(cfg, neg_curves))
    for m, p in fit.scaled_samples():
        if not contains(limit, p):
            raise InconsistencyError(f"scaled polygon for m={m} sticks out of the limit")
    return LimitReport(limit, fit.samples, True,
                       fit.limit if fit.exact else None,
                       fit.exact and fit.limit == limit)
