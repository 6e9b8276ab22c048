"""Divisor classes on the blow-up of the projective plane at ``r`` points.

A class is stored as the tuple ``(d; m_1, ..., m_r)`` standing for
``d*e_0 - sum(m_i * e_i)``, where ``e_0`` is the pullback of a line and
``e_i`` are the exceptional classes.  With this convention the exceptional
class ``e_i`` itself has ``m_i = -1`` and the canonical class is
``(-3; -1, ..., -1)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError, UnsupportedSurfaceError

MAX_POINTS = 8


@dataclass(frozen=True, order=True)
class DivisorClass:
    d: int
    mults: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "mults", tuple(int(m) for m in self.mults))
        if not self.mults:
            raise DimensionError("a divisor class needs at least one point")

    @property
    def r(self) -> int:
        return len(self.mults)

    def as_tuple(self) -> tuple[int, ...]:
        return (self.d, *self.mults)

    def _check(self, other: DivisorClass) -> None:
        if not isinstance(other, DivisorClass):
            raise TypeError(f"expected DivisorClass, got {type(other).__name__}")
        if other.r != self.r:
            raise DimensionError(f"classes on {self.r} and {other.r} points")

    def __add__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(self.d + other.d, tuple(a + b for a, b in zip(self.mults, other.mults)))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(self.d - other.d, tuple(a - b for a, b in zip(self.mults, other.mults)))

    def __neg__(self) -> DivisorClass:
        return DivisorClass(-self.d, tuple(-a for a in self.mults))

    def __mul__(self, k: int) -> DivisorClass:
        return DivisorClass(k * self.d, tuple(k * a for a in self.mults))

    __rmul__ = __mul__

    def dot(self, other: DivisorClass) -> int:
        return intersect(self, other)

    def square(self) -> int:
        return intersect(self, self)

    def __str__(self) -> str:
        return f"({self.d}; {', '.join(str(m) for m in self.mults)})"


def intersect(a: DivisorClass, b: DivisorClass) -> int:
    """Intersection number for the form diag(1, -1, ..., -1)."""
    a._check(b)
    return a.d * b.d - sum(x * y for x, y in zip(a.mults, b.mults))


def _check_r(r: int) -> None:
    if not 1 <= r <= MAX_POINTS:
        raise UnsupportedSurfaceError(f"r must lie in 1..{MAX_POINTS}, got {r}")


def canonical_class(r: int) -> DivisorClass:
    _check_r(r)
    return DivisorClass(-3, (-1,) * r)


def fat_point_class(t: int, m: int, r: int) -> DivisorClass:
    """The class ``t*e_0 - m*(e_1 + ... + e_r)`` of degree-t forms through ``m`` fat points."""
    if r < 1:
        raise DimensionError("r must be positive")
    return DivisorClass(t, (m,) * r)


def line_class(r: int) -> DivisorClass:
    return DivisorClass(1, (0,) * r)


def exceptional_class(i: int, r: int) -> DivisorClass:
    """``e_i`` for 1-based point index ``i``."""
    if not 1 <= i <= r:
        raise DimensionError(f"point index {i} outside 1..{r}")
    mults = [0] * r
    mults[i - 1] = -1
    return DivisorClass(0, tuple(mults))


def curve_class(degree: int, points, r: int) -> DivisorClass:
    """Class of a degree-``degree`` curve through the given 1-based points, once each."""
    mults = [0] * r
    for p in points:
        if not 1 <= p <= r:
            raise DimensionError(f"point index {p} outside 1..{r}")
        mults[p - 1] = 1
    return DivisorClass(degree, tuple(mults))
