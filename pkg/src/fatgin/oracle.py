"""Fat-point Hilbert functions by linear algebra on explicit coordinates.

This is deliberately independent of the divisor machinery: a configuration
is realized by concrete integer points and ``dim I^(m)_t`` is the number of
degree-t monomials minus the rank of the vanishing conditions, computed by
exact integer elimination.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, lcm

from .configuration import ConfigurationType, by_slug
from .errors import InvalidConfigurationError

Coord = tuple[int, int, int]


def _primitive(p) -> Coord:
    fr = [Fraction(v) for v in p]
    if all(v == 0 for v in fr):
        raise InvalidConfigurationError("the zero vector is not a projective point")
    den = lcm(*(v.denominator for v in fr))
    ints = [int(v * den) for v in fr]
    g = gcd(*ints)
    ints = [v // g for v in ints]
    # sign-normalize so equal projective points get equal coordinates
    if next(v for v in ints if v) < 0:
        ints = [-v for v in ints]
    return tuple(ints)


@dataclass(frozen=True)
class PointSet:
    points: tuple[Coord, ...]

    def __post_init__(self) -> None:
        pts = tuple(_primitive(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if len(set(pts)) != len(pts):
            raise InvalidConfigurationError("points must be pairwise distinct")


def _det3(a, b, c) -> int:
    return (a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


def _conic_row(p) -> list[int]:
    x, y, z = p
    return [x * x, x * y, x * z, y * y, y * z, z * z]


def _collinear(pts) -> bool:
    return all(_det3(*tri) == 0 for tri in itertools.combinations(pts, 3))


def verify_realization(ps: PointSet, cfg: ConfigurationType) -> bool:
    """Whether the coordinates have exactly the incidences of ``cfg``.

    A triple must be collinear iff it sits on a declared line.  For six
    points the conic matrix must be singular iff a conic is declared or the
    points are covered by two lines (a line pair is a reducible conic).
    """
    pts = ps.points
    if len(pts) != cfg.r:
        return False
    lines = [set(c.points) for c in cfg.lines]
    for tri in itertools.combinations(range(1, cfg.r + 1), 3):
        declared = any(set(tri) <= ln for ln in lines)
        if (_det3(*(pts[i - 1] for i in tri)) == 0) != declared:
            return False
    if cfg.r == 6:
        singular = rank([dict(enumerate(_conic_row(p))) for p in pts]) < 6
        idx = range(cfg.r)
        two_lines = any(_collinear([pts[i] for i in A]) and
                        _collinear([pts[i] for i in idx if i not in A])
                        for k in range(cfg.r + 1) for A in itertools.combinations(idx, k))
        if singular != (bool(cfg.conics) or two_lines):
            return False
    return True


def rank(rows) -> int:
    """Exact rank of an integer matrix given as sparse rows ``{column: value}``.

    Fraction-free elimination: a row is cleared against a pivot by integer
    cross-multiplication and then divided by the gcd of its entries.
    """
    pivots: list[tuple[int, dict[int, int]]] = []
    for row in sorted((dict((k, v) for k, v in r.items() if v) for r in rows), key=len):
        for col, prow in pivots:
            v = row.get(col)
            if not v:
                continue
            pv = prow[col]
            g = gcd(pv, v)
            a, b = pv // g, v // g
            new = {k: a * x for k, x in row.items()}
            for k, x in prow.items():
                y = new.get(k, 0) - b * x
                if y:
                    new[k] = y
                else:
                    new.pop(k, None)
            row = new
            if not row:
                break
            g = gcd(*row.values())
            if g > 1:
                row = {k: x // g for k, x in row.items()}
        if row:
            col = min(row, key=lambda k: (abs(row[k]), k))
            pivots.append((col, row))
    return len(pivots)


def monomials(t: int) -> list[tuple[int, int, int]]:
    return [(u, v, t - u - v) for u in range(t, -1, -1) for v in range(t - u, -1, -1)]


def vanishing_rows(ps: PointSet, m: int, t: int) -> list[dict[int, int]]:
    """One row per point and local derivative (i, j) with i + j < m.

    In an affine chart around the point, the row is the coefficient of
    ``(X - a)^i (Y - b)^j`` in the Taylor expansion of each monomial, scaled
    to integers.
    """
    mons = monomials(t)
    rows = []
    for p in ps.points:
        k = next(idx for idx in (2, 0, 1) if p[idx])
        a_idx, b_idx = [idx for idx in range(3) if idx != k]
        for i in range(m):
            for j in range(m - i):
                row = {}
                for col, e in enumerate(mons):
                    eu, ev = e[a_idx], e[b_idx]
                    if eu < i or ev < j:
                        continue
                    val = (comb(eu, i) * comb(ev, j) * p[a_idx] ** (eu - i)
                           * p[b_idx] ** (ev - j) * p[k] ** e[k])
                    if val:
                        row[col] = val
                rows.append(row)
    return rows


def oracle_hilbert(ps: PointSet, m: int, t: int) -> int:
    if t < 0:
        return 0
    return comb(t + 2, 2) - rank(vanishing_rows(ps, m, t))


def _affine(*pts) -> tuple[Coord, ...]:
    return tuple((x, y, 1) for x, y in pts)


# Two independent witnesses per catalog type: a hand-built affine one and a
# homogeneous one found by random search over small integers.
_WITNESSES: dict[str, tuple[tuple[Coord, ...], ...]] = {
    "generic": (
        _affine((0, 0), (1, 0), (0, 1), (1, 1), (2, 3), (3, 7)),
        ((2, 0, -1), (3, -2, 1), (4, 1, -1), (1, 3, -1), (0, 2, 1), (1, 0, -1)),
    ),
    "one-line-3": (
        _affine((0, 0), (1, 0), (2, 0), (0, 1), (1, 2), (3, 5)),
        ((3, -3, -1), (5, -4, -1), (2, -1, 0), (2, -3, 1), (1, 3, 1), (3, -2, 1)),
    ),
    "two-lines-3-disjoint": (
        _affine((0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (3, 1)),
        ((2, -2, -3), (6, 7, 4), (0, 1, 1), (9, -3, -8), (3, 0, -2), (0, 3, 2)),
    ),
    "two-lines-3-meeting": (
        _affine((0, 0), (1, 0), (2, 0), (0, 1), (0, 2), (1, 3)),
        ((6, -5, -4), (3, 4, -2), (3, -5, -2), (0, 1, -1), (6, 2, -11), (3, -2, -1)),
    ),
    "three-lines-3": (
        _affine((0, 0), (4, 0), (0, 4), (1, 0), (1, 3), (0, 1)),
        ((2, 3, -3), (1, 1, -1), (3, 4, -3), (0, 1, -1), (0, 1, 0), (2, 1, 3)),
    ),
    "four-lines-3": (
        _affine((0, 0), (1, 0), (2, 0), (0, 1), (0, 3), (4, -3)),
        ((3, -7, 9), (3, 3, -1), (6, 11, -7), (1, 1, 3), (1, 6, 3), (1, 1, -2)),
    ),
    "line-4": (
        _affine((0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (1, 2)),
        ((11, -5, -7), (1, -1, -1), (5, -2, -3), (9, 6, 1), (1, 4, 1), (2, -4, 1)),
    ),
    "line-4-line-3": (
        _affine((1, 0), (2, 0), (3, 0), (0, 0), (0, 1), (0, 2)),
        ((1, 4, 1), (9, 12, 1), (1, 10, 3), (9, 3, -2), (5, -3, 2), (2, 3, -2)),
    ),
    "line-5": (
        _affine((0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (0, 1)),
        ((6, -9, 2), (2, -3, -5), (2, -3, -2), (2, -3, -8), (2, -3, -4), (2, -4, -1)),
    ),
    "line-6": (
        _affine((0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (5, 0)),
        ((1, 1, -1), (0, 2, -1), (1, -5, 2), (3, 1, -2), (2, 0, -1), (4, -2, -1)),
    ),
    "conic-6": (
        tuple((t * t, t, 1) for t in range(6)),
        ((1, 0, 1), (4, 3, -5), (3, -4, -5), (0, 1, 1), (4, -3, -5), (0, 1, -1)),
    ),
}


def realize(slug: str, which: int = 0) -> PointSet:
    """Committed coordinates realizing a catalog type (``which`` selects the witness)."""
    try:
        options = _WITNESSES[slug]
    except KeyError:
        raise InvalidConfigurationError(f"no witness for {slug!r}") from None
    return PointSet(options[which])


def witness_count(slug: str) -> int:
    return len(_WITNESSES[slug])


def check_witnesses() -> dict[str, list[bool]]:
    return {slug: [verify_realization(PointSet(w), by_slug(slug)) for w in ws]
            for slug, ws in _WITNESSES.items()}
