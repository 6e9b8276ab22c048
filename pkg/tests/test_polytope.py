from fractions import Fraction as Q

import pytest

from fatgin.configuration import by_slug
from fatgin.errors import InsufficientDataError, ValidationError
from fatgin.polytope import (RationalPolygon, complement_area, contains, extrapolate_limit,
                             intercepts, limiting_shape, lower_chain, newton_polytope, scale,
                             segment_count)
from fatgin.staircase import Staircase, staircase_from_hilbert

from conftest import H, negs, table


def poly(*pts):
    return RationalPolygon(tuple((Q(x), Q(y)) for x, y in pts))


def sample(slug, m):
    return newton_polytope(staircase_from_hilbert(table(slug, m)))


def test_H_samples():
    assert sample(H, 12) == poly((0, 36), (4, 28), (7, 23), (13, 16), (24, 4), (28, 0))
    assert sample(H, 24) == poly((0, 72), (10, 52), (13, 47), (23, 35), (29, 28), (48, 8), (56, 0))
    assert complement_area(scale(sample(H, 12), Q(1, 12))) == Q(293, 96)


def test_collinear_point_dropped():
    s = Staircase(2, (2, 1))
    assert newton_polytope(s) == poly((0, 2), (2, 0))


def test_lower_chain_ignores_points_above():
    p = lower_chain([(0, 4), (0, 6), (1, 1), (1, 3), (3, 0), (5, 0), (4, 4)])
    assert p == poly((0, 4), (1, 1), (3, 0))


@pytest.mark.parametrize("pts", [
    [(1, 2), (2, 0)],
    [(0, 2), (2, 1)],
    [(0, 2), (1, 1), (2, 0)],
    [(0, 2), (0, 1), (2, 0)],
])
def test_polygon_validation(pts):
    with pytest.raises(ValidationError):
        poly(*pts)


def test_polygon_helpers():
    p = poly((0, 3), ("1/2", 2), ("4/3", 1), ("7/3", 0))
    assert complement_area(p) == 3
    assert intercepts(p) == (Q(7, 3), Q(3))
    assert segment_count(p) == 3
    assert RationalPolygon.from_json(p.to_json()) == p
    assert p.on_boundary((Q(2), Q(1, 3)))
    assert not p.on_boundary((Q(1), Q(2)))
    assert p.contains_point((Q(3), Q(3)))
    assert not p.contains_point((Q(1), Q(1)))
    assert contains(p, scale(p, 2))
    assert not contains(scale(p, 2), p)
    with pytest.raises(ValidationError):
        scale(p, 0)


def test_extrapolation_of_affine_families():
    base = poly((0, 3), (1, 1), (2, 0))
    samples = [(m, RationalPolygon(tuple((x * m + 1, y * m) if i else (x, y * m + 2)
                                         for i, (x, y) in enumerate(base.vertices))))
               for m in (6, 12, 18)]
    rep = extrapolate_limit(samples)
    assert rep.exact
    assert rep.limit == base


def test_extrapolation_needs_three():
    with pytest.raises(InsufficientDataError):
        extrapolate_limit([(12, sample(H, 12)), (24, sample(H, 24))])


def test_limit_H():
    rep = limiting_shape(by_slug(H), (12, 24, 36), negs(H))
    assert rep.exact
    assert rep.limit == poly((0, 3), ("1/2", 2), ("4/3", 1), ("7/3", 0))
    assert rep.agrees
    assert (Q(2), Q(1, 3)) not in rep.limit.vertices
    assert rep.limit.on_boundary((Q(2), Q(1, 3)))


def test_limit_validation():
    with pytest.raises(InsufficientDataError):
        limiting_shape(by_slug(H), (12, 24))
    with pytest.raises(ValidationError):
        limiting_shape(by_slug(H), (0, 12, 24))


def test_scaled_samples_inside_limit(slug):
    rep = limiting_shape(by_slug(slug), (3, 6, 12), negs(slug))
    assert complement_area(rep.limit) == 3
    for _, p in rep.scaled_samples():
        assert contains(rep.limit, p)


def test_scale_examples():
    p12 = sample(H, 12)
    assert scale(p12, Q(1, 12)) == poly((0, 3), ("1/3", "7/3"), ("7/12", "23/12"),
                                        ("13/12", "4/3"), (2, "1/3"), ("7/3", 0))
    assert scale(p12, 1) == p12
    assert scale(scale(p12, 2), Q(1, 2)) == p12


def test_intercepts_and_small_chain():
    assert intercepts(sample(H, 12)) == (28, 36)
    unit = poly((0, 1), (1, 0))
    assert complement_area(unit) == Q(1, 2)
    assert intercepts(unit) == (1, 1)
    assert segment_count(unit) == 1


def test_constant_samples():
    base = poly((0, 3), ("1/2", 2), ("7/3", 0))
    rep = extrapolate_limit([(m, scale(base, m)) for m in (12, 24, 36)])
    assert rep.exact and rep.limit == base


def test_scaled_area_decreases_to_three(slug):
    areas = [complement_area(scale(sample(slug, m), Q(1, m))) for m in (12, 24, 36)]
    assert all(a >= 3 for a in areas)
    assert areas[0] >= areas[1] >= areas[2]


def test_nesting_along_divisibility(slug):
    scaled = [scale(sample(slug, m), Q(1, m)) for m in (3, 6, 12, 24)]
    assert all(contains(big, small) for small, big in zip(scaled, scaled[1:]))


def test_consecutive_nesting_recorded():
    # Not asserted as nesting: alpha(13) = 31 > 13 * 7/3, so the m=13 polygon
    # sticks out past the m=12 one on the x-axis.
    nested = [contains(scale(sample(H, m + 1), Q(1, m + 1)), scale(sample(H, m), Q(1, m)))
              for m in range(12, 24)]
    assert nested == [False] * 12
    assert intercepts(sample(H, 13))[0] == 31
