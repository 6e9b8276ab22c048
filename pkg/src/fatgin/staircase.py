"""Generic initial ideals of fat-point ideals as monomial staircases in x, y.

The reverse-lex gin of ``I^(m)`` is generated in ``x`` and ``y`` and is
Borel-fixed, so in each degree ``t`` its x,y-part is the segment of the
``c_t = H(t) - H(t-1)`` largest monomials ``x^t, x^(t-1) y, ...``.  That
pins the whole ideal down from the Hilbert function alone.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass

from .cohomology import HilbertTable
from .errors import StaircaseInconsistencyError, UnrealizableHilbertError


@dataclass(frozen=True)
class Staircase:
    """The ideal ``(x^alpha, x^(alpha-1) y^lambda_(alpha-1), ..., y^lambda_0)``."""

    alpha: int
    lambdas: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lambdas", tuple(int(v) for v in self.lambdas))
        if self.alpha < 1 or len(self.lambdas) != self.alpha:
            raise StaircaseInconsistencyError(
                f"need one lambda per i < alpha={self.alpha}, got {len(self.lambdas)}")
        if self.lambdas[-1] < 1:
            raise StaircaseInconsistencyError("lambda_(alpha-1) must be at least 1")
        for i in range(1, self.alpha):
            if self.lambdas[i] >= self.lambdas[i - 1]:
                raise StaircaseInconsistencyError(
                    f"lambdas not strictly decreasing at i={i}: {self.lambdas[i - 1]}, {self.lambdas[i]}")

    def contains(self, i: int, j: int) -> bool:
        return i >= self.alpha or j >= self.lambdas[i]

    def xy_count(self, t: int) -> int:
        """Number of degree-t monomials in x, y alone lying in the ideal."""
        if t < 0:
            return 0
        return sum(1 for i in range(t + 1) if self.contains(i, t - i))

    def to_json(self) -> dict:
        return {"alpha": self.alpha, "lambdas": list(self.lambdas)}

    @classmethod
    def from_json(cls, data: dict) -> Staircase:
        return cls(int(data["alpha"]), tuple(data["lambdas"]))


def _hilbert_getter(table):
    if isinstance(table, HilbertTable):
        return table.__getitem__, table.t_stop
    if isinstance(table, Mapping):
        values = {int(k): int(v) for k, v in table.items()}
        if not values:
            raise UnrealizableHilbertError("empty Hilbert table")
        lo, hi = min(values), max(values)
        missing = [t for t in range(lo, hi + 1) if t not in values]
        if missing:
            raise UnrealizableHilbertError(f"Hilbert table has gaps at {missing}")
        return (lambda t: values[t] if t >= lo else 0), hi
    raise TypeError(f"expected HilbertTable or mapping, got {type(table).__name__}")


def xy_counts(table) -> list[int]:
    """``c_t = H(t) - H(t-1)`` for ``t = 0 .. t_max``, checked for realizability."""
    H, t_max = _hilbert_getter(table)
    counts = [H(t) - H(t - 1) for t in range(t_max + 1)]
    for t, c in enumerate(counts):
        if not 0 <= c <= t + 1:
            raise UnrealizableHilbertError(f"degree {t} would hold {c} monomials in x, y")
        if t and c < counts[t - 1]:
            raise UnrealizableHilbertError(
                f"x,y-part shrinks from {counts[t - 1]} to {c} between degrees {t - 1} and {t}")
        if t and counts[t - 1] and c == counts[t - 1]:
            raise UnrealizableHilbertError(f"x,y-part does not grow under y at degree {t}")
    return counts


def staircase_from_hilbert(table) -> Staircase:
    counts = xy_counts(table)
    t_max = len(counts) - 1
    if counts[-1] != t_max + 1:
        raise UnrealizableHilbertError(
            f"table ends at degree {t_max} before every x,y-monomial is in the ideal")
    alpha = next(t for t, c in enumerate(counts) if c > 0)
    lambdas = []
    for i in range(alpha):
        # x^i y^j lies in degree i+j, inside the top-c segment iff j < c_(i+j)
        lambdas.append(next(j for j in range(t_max - i + 1) if j < counts[i + j]))
    return Staircase(alpha, tuple(lambdas))


def minimal_generators(s: Staircase) -> list[tuple[int, int]]:
    """Exponent pairs (x-degree, y-degree); strict decrease makes every corner minimal."""
    return [(i, s.lambdas[i]) for i in range(s.alpha)] + [(s.alpha, 0)]


def generator_count_by_degree(s: Staircase) -> dict[int, int]:
    counts = Counter(i + j for i, j in minimal_generators(s))
    return dict(sorted(counts.items()))


def generator_count_from_hilbert(table, t: int) -> int:
    """Minimal generators in degree ``t`` from second differences of ``H``.

    ``c_t - c_(t-1)`` minus one more when degree ``t-1`` already holds an
    x,y-monomial (its multiples by x and y overlap in one monomial).
    """
    H, _ = _hilbert_getter(table)
    c = H(t) - H(t - 1)
    prev = H(t - 1) - H(t - 2)
    return c - prev - (1 if prev > 0 else 0)


def hilbert_of_staircase(s: Staircase, t: int) -> int:
    """Dimension of the degree-t part of the ideal in ``K[x, y, z]``."""
    return sum(s.xy_count(u) for u in range(t + 1))
