"""Configuration types of points in the plane, described by their defining curves.

A configuration type is never stored through coordinates: only the lines
through three or more of the points and the conic through all six matter
for fat-point Hilbert functions, so that incidence data is the whole model.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .errors import InvalidConfigurationError, UnsupportedSurfaceError
from .picard import DivisorClass, MAX_POINTS, curve_class, exceptional_class, intersect

CATALOG_POINTS = 6


@dataclass(frozen=True, order=True)
class DefiningCurve:
    degree: int
    points: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(sorted(set(int(p) for p in self.points))))

    @property
    def label(self) -> str:
        """``C_{d,N}``: degree and number of configuration points on the curve."""
        return f"C{self.degree},{len(self.points)}"

    def to_json(self) -> dict:
        return {"degree": self.degree, "points": list(self.points)}


def line(*points: int) -> DefiningCurve:
    return DefiningCurve(1, points)


def conic(*points: int) -> DefiningCurve:
    return DefiningCurve(2, points)


@dataclass(frozen=True)
class ConfigurationType:
    r: int
    curves: tuple[DefiningCurve, ...]

    @property
    def lines(self) -> tuple[DefiningCurve, ...]:
        return tuple(c for c in self.curves if c.degree == 1)

    @property
    def conics(self) -> tuple[DefiningCurve, ...]:
        return tuple(c for c in self.curves if c.degree == 2)

    def relabel(self, perm) -> ConfigurationType:
        """Apply ``perm`` (a sequence with ``perm[i-1]`` the new label of point i)."""
        curves = tuple(sorted(DefiningCurve(c.degree, tuple(perm[p - 1] for p in c.points))
                              for c in self.curves))
        return ConfigurationType(self.r, curves)

    def canonical(self) -> ConfigurationType:
        """Lexicographically least relabeling; equal for configurations of the same type."""
        return min((self.relabel(p) for p in itertools.permutations(range(1, self.r + 1))),
                   key=_curve_key)

    def to_json(self) -> dict:
        return {"points": self.r, "curves": [c.to_json() for c in self.curves]}


def _curve_key(cfg: ConfigurationType):
    return tuple((c.degree, len(c.points), c.points) for c in cfg.curves)


def validate(curves, r: int = CATALOG_POINTS) -> ConfigurationType:
    """Check the incidence axioms and return a normalized :class:`ConfigurationType`."""
    if not 1 <= r <= MAX_POINTS:
        raise UnsupportedSurfaceError(f"point count must lie in 1..{MAX_POINTS}, got {r}")
    curves = [c if isinstance(c, DefiningCurve) else DefiningCurve(c[0], c[1]) for c in curves]
    for c in curves:
        if c.degree not in (1, 2):
            raise InvalidConfigurationError(f"defining curves are lines or conics, got degree {c.degree}")
        if any(not 1 <= p <= r for p in c.points):
            raise InvalidConfigurationError(f"curve {c.points} uses a point outside 1..{r}")
        need = 3 if c.degree == 1 else 6
        if len(c.points) < need:
            raise InvalidConfigurationError(
                f"a defining {'line' if c.degree == 1 else 'conic'} needs at least {need} points, "
                f"got {len(c.points)}")
    if len(set(curves)) != len(curves):
        raise InvalidConfigurationError("duplicate defining curve")
    lines = [c for c in curves if c.degree == 1]
    conics = [c for c in curves if c.degree == 2]
    for a, b in itertools.combinations(lines, 2):
        if len(set(a.points) & set(b.points)) >= 2:
            raise InvalidConfigurationError(f"lines {a.points} and {b.points} share two points")
    if conics and lines:
        raise InvalidConfigurationError("an irreducible conic through the points excludes collinear triples")
    for a, b in itertools.combinations(conics, 2):
        if len(set(a.points) & set(b.points)) >= 5:
            raise InvalidConfigurationError("two conics share five points")
    return ConfigurationType(r, tuple(sorted(curves)))


@dataclass(frozen=True)
class NegativeCurves:
    """Negative curves of the blow-up.

    ``NEG`` lists the non-exceptional negative curves (defining curves plus
    the (-1)-lines and (-1)-conics); the exceptional classes ``e_i`` are kept
    apart in ``exceptional``.  ``all`` is the full set used for nef tests.
    """

    neg: tuple[DivisorClass, ...]
    NEG: tuple[DivisorClass, ...]
    exceptional: tuple[DivisorClass, ...] = ()

    @property
    def all(self) -> tuple[DivisorClass, ...]:
        return self.exceptional + self.NEG


def neg_classes(cfg: ConfigurationType) -> tuple[DivisorClass, ...]:
    return tuple(sorted(curve_class(c.degree, c.points, cfg.r) for c in cfg.curves))


def enumerate_NEG(cfg: ConfigurationType) -> NegativeCurves:
    """Classes of reduced irreducible curves of negative self-intersection.

    The candidates beyond the defining curves are the exceptional classes,
    lines through two or more points and conics through five or more; the
    survivors have square -1 and meet every defining curve nonnegatively.
    """
    if cfg.r != CATALOG_POINTS:
        raise UnsupportedSurfaceError("negative-curve enumeration is implemented for six points")
    r = cfg.r
    neg = neg_classes(cfg)
    candidates = [exceptional_class(i, r) for i in range(1, r + 1)]
    for k in range(2, r + 1):
        candidates += [curve_class(1, s, r) for s in itertools.combinations(range(1, r + 1), k)]
    for k in range(5, r + 1):
        candidates += [curve_class(2, s, r) for s in itertools.combinations(range(1, r + 1), k)]
    extra = [c for c in candidates
             if intersect(c, c) == -1 and all(intersect(c, d) >= 0 for d in neg)]
    exceptional = tuple(sorted(c for c in extra if c.d == 0))
    curves = tuple(sorted(set(neg) | {c for c in extra if c.d > 0}))
    return NegativeCurves(neg, curves, exceptional)


def incidence_types(cfg: ConfigurationType) -> tuple[dict[int, tuple[str, ...]], int]:
    """Map each point to the sorted labels of the defining curves through it."""
    types = {p: tuple(sorted(c.label for c in cfg.curves if p in c.points))
             for p in range(1, cfg.r + 1)}
    return types, len(set(types.values()))


def incidence_multiset(cfg: ConfigurationType) -> Counter:
    types, _ = incidence_types(cfg)
    return Counter(types.values())


# slug -> (curves, letter, letter is only presumed)
_CATALOG = {
    "generic": ((), "A", True),
    "one-line-3": ((line(1, 2, 3),), "B", False),
    "two-lines-3-disjoint": ((line(1, 2, 3), line(4, 5, 6)), None, False),
    "two-lines-3-meeting": ((line(1, 2, 3), line(1, 4, 5)), "H", False),
    "three-lines-3": ((line(1, 2, 4), line(2, 3, 5), line(1, 3, 6)), None, False),
    "four-lines-3": ((line(1, 2, 3), line(1, 4, 5), line(2, 4, 6), line(3, 5, 6)), None, False),
    "line-4": ((line(1, 2, 3, 4),), None, False),
    "line-4-line-3": ((line(1, 2, 3, 4), line(4, 5, 6)), "F", False),
    "line-5": ((line(1, 2, 3, 4, 5),), None, False),
    "line-6": ((line(1, 2, 3, 4, 5, 6),), None, False),
    "conic-6": ((conic(1, 2, 3, 4, 5, 6),), None, False),
}

SLUGS = tuple(_CATALOG)


@dataclass(frozen=True)
class CatalogEntry:
    slug: str
    cfg: ConfigurationType
    alias: str | None
    presumed_alias: str | None = None


def catalog() -> list[CatalogEntry]:
    entries = []
    for slug, (curves, letter, presumed) in _CATALOG.items():
        cfg = validate(curves, CATALOG_POINTS)
        if presumed:
            entries.append(CatalogEntry(slug, cfg, None, letter))
        else:
            entries.append(CatalogEntry(slug, cfg, letter))
    return entries


def by_slug(slug: str) -> ConfigurationType:
    try:
        curves = _CATALOG[slug][0]
    except KeyError:
        raise InvalidConfigurationError(f"unknown configuration slug {slug!r}") from None
    return validate(curves, CATALOG_POINTS)


def by_alias(letter: str) -> ConfigurationType:
    for e in catalog():
        if e.alias == letter:
            return e.cfg
    raise InvalidConfigurationError(f"no catalog entry carries the letter {letter!r}")


def slug_of(cfg: ConfigurationType) -> str | None:
    canon = cfg.canonical()
    for e in catalog():
        if e.cfg.canonical() == canon:
            return e.slug
    return None


def enumerate_all_types(r: int = CATALOG_POINTS) -> list[ConfigurationType]:
    """Every valid defining-curve set on ``r`` points, one per relabeling class."""
    if r != CATALOG_POINTS:
        raise UnsupportedSurfaceError("type enumeration is implemented for six points")
    pts = range(1, r + 1)
    lines = [line(*s) for k in range(3, r + 1) for s in itertools.combinations(pts, k)]

    found: dict = {}

    def extend(chosen: list[DefiningCurve], start: int) -> None:
        cfg = validate(chosen, r)
        canon = cfg.canonical()
        found.setdefault(_curve_key(canon), canon)
        for i in range(start, len(lines)):
            cand = lines[i]
            if all(len(set(cand.points) & set(c.points)) <= 1 for c in chosen):
                extend(chosen + [cand], i + 1)

    extend([], 0)
    canon = validate([conic(*pts)], r).canonical()
    found.setdefault(_curve_key(canon), canon)
    return [found[k] for k in sorted(found)]


def from_json(data: dict) -> ConfigurationType:
    if not isinstance(data, dict) or "curves" not in data:
        raise InvalidConfigurationError('configuration JSON needs "points" and "curves"')
    r = data.get("points", CATALOG_POINTS)
    if not isinstance(r, int):
        raise InvalidConfigurationError('"points" must be an integer')
    curves = []
    for c in data["curves"]:
        try:
            curves.append(DefiningCurve(int(c["degree"]), tuple(int(p) for p in c["points"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidConfigurationError(f"malformed curve entry {c!r}") from exc
    return validate(curves, r)


def resolve(text: str) -> ConfigurationType:
    """A catalog slug, a catalog letter, or a path to a JSON configuration file."""
    if text in _CATALOG:
        return by_slug(text)
    if len(text) == 1 and text.isalpha():
        return by_alias(text.upper())
    path = Path(text)
    if not path.exists():
        raise InvalidConfigurationError(f"{text!r} is neither a catalog slug nor a file")
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise InvalidConfigurationError(f"malformed configuration JSON: {exc}") from exc
    return from_json(data)
