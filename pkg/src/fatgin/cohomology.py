"""Sections of fat-point divisors via reduction by negative curves.

``reduce`` walks a class ``F`` down by negative curves it meets negatively
until the remainder is nef (then Riemann-Roch gives ``h^0``) or has negative
degree (then ``h^0 = 0``).  ``hilbert_function`` evaluates this on the
classes ``(t; m, ..., m)``.

The second half of the module does the same reduction over the rationals for
the classes ``(s; 1, ..., 1)``: the positive part of the Zariski
decomposition, tracked as an exact piecewise-linear function of ``s``.  Its
degree is the scaled growth rate of the x,y-part of the generic initial
ideal, which is what the limiting shape is built from.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .configuration import ConfigurationType, NegativeCurves, enumerate_NEG
from .errors import DivergenceError, InconsistencyError, ValidationError
from .picard import DivisorClass, canonical_class, fat_point_class, intersect

NEF = "nef"
NOT_EFFECTIVE = "not-effective"


@dataclass(frozen=True)
class ReductionResult:
    input: DivisorClass
    final: DivisorClass
    subtracted: tuple[tuple[DivisorClass, int], ...]
    status: str
    h0: int

    def subtracted_total(self) -> DivisorClass:
        total = DivisorClass(0, (0,) * self.input.r)
        for c, k in self.subtracted:
            total = total + c * k
        return total

    def copies(self, c: DivisorClass) -> int:
        return dict(self.subtracted).get(c, 0)


def riemann_roch_nef(h: DivisorClass, r: int | None = None) -> int:
    """``(h^2 - h.K)/2 + 1``; valid for nef ``h`` (the caller's job to check)."""
    k = canonical_class(h.r if r is None else r)
    twice = intersect(h, h) - intersect(h, k)
    if twice % 2:
        raise InconsistencyError(f"h^2 - h.K is odd for {h}")
    return twice // 2 + 1


def _exceptional(i: int, r: int) -> DivisorClass:
    mults = [0] * r
    mults[i] = -1
    return DivisorClass(0, tuple(mults))


def reduce(F: DivisorClass, neg_curves: NegativeCurves,
           rng: random.Random | None = None) -> ReductionResult:
    """Reduce ``F`` to a nef or visibly non-effective class with the same ``h^0``.

    Negative multiplicities are cleared first (each is a run of exceptional
    curves).  Among negative curves meeting the current class negatively the
    one with the most negative intersection is removed, ties broken by the
    smallest tuple; with ``rng`` given the choice is uniform instead.
    """
    curves = neg_curves.all
    r = F.r
    limit = (max(F.d, 0) + 1) * max(len(curves), 1) + sum(abs(m) for m in F.mults)
    removed: Counter = Counter()
    current = F
    steps = 0
    while True:
        steps += 1
        if steps > limit + 1:
            raise DivergenceError(f"reduction of {F} exceeded {limit} steps")
        if any(m < 0 for m in current.mults):
            for i, m in enumerate(current.mults):
                if m < 0:
                    removed[_exceptional(i, r)] += -m
            current = DivisorClass(current.d, tuple(max(m, 0) for m in current.mults))
        if current.d < 0:
            status, h0 = NOT_EFFECTIVE, 0
            break
        bad = [(intersect(current, c), c) for c in curves]
        bad = [(v, c) for v, c in bad if v < 0]
        if not bad:
            status, h0 = NEF, riemann_roch_nef(current)
            break
        if rng is None:
            _, chosen = min(bad, key=lambda vc: (vc[0], vc[1].as_tuple()))
        else:
            _, chosen = rng.choice(bad)
        removed[chosen] += 1
        current = current - chosen
    return ReductionResult(F, current, tuple(sorted(removed.items())), status, h0)


@dataclass(frozen=True)
class HilbertTable:
    cfg: ConfigurationType
    m: int
    values: tuple[int, ...]
    alpha: int
    closure: int

    def __getitem__(self, t: int) -> int:
        if t < 0:
            return 0
        if t >= len(self.values):
            # past closure every condition is independent
            return comb(t + 2, 2) - self.cfg.r * comb(self.m + 1, 2)
        return self.values[t]

    @property
    def t_stop(self) -> int:
        return len(self.values) - 1

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.values))


def hilbert_value(cfg: ConfigurationType, m: int, t: int,
                  neg_curves: NegativeCurves | None = None) -> int:
    neg_curves = neg_curves or enumerate_NEG(cfg)
    return reduce(fat_point_class(t, m, cfg.r), neg_curves).h0


def hilbert_function(cfg: ConfigurationType, m: int, through: int | None = None,
                     neg_curves: NegativeCurves | None = None) -> HilbertTable:
    """``H(t) = dim I^(m)_t`` for ``t = 0, 1, ...`` up to staircase closure.

    Closure is the first degree ``t`` whose increment ``H(t) - H(t-1)``
    equals ``t + 1``, i.e. every degree-t monomial in x, y lies in the
    generic initial ideal.  ``through`` extends the table further.
    """
    if m < 1:
        raise ValidationError(f"multiplicity must be positive, got {m}")
    neg_curves = neg_curves or enumerate_NEG(cfg)
    values: list[int] = []
    closure = None
    cap = 10 * m + 10
    t = 0
    while True:
        values.append(reduce(fat_point_class(t, m, cfg.r), neg_curves).h0)
        prev = values[t - 1] if t else 0
        if closure is None and values[t] - prev == t + 1:
            closure = t
        if closure is not None and (through is None or t >= through):
            break
        t += 1
        if closure is None and t > cap:
            raise InconsistencyError(f"no staircase closure below degree {cap}")
    alpha = next(t for t, v in enumerate(values) if v > 0)
    return HilbertTable(cfg, m, tuple(values), alpha, closure)


# --- rational reduction -------------------------------------------------------

Vec = tuple[Fraction, ...]


def _pair(a, b) -> Fraction:
    return a[0] * b[0] - sum(x * y for x, y in zip(a[1:], b[1:]))


def _axpy(k, x, y) -> Vec:
    return tuple(k * xi + yi for xi, yi in zip(x, y))


def _solve(G: list[list[Fraction]], rhs: list[list[Fraction]]) -> list[list[Fraction]]:
    """Solve ``G X = rhs`` for a square nonsingular ``G`` (Gauss-Jordan over Q)."""
    n = len(G)
    aug = [list(G[i]) + list(rhs[i]) for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular intersection matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def _uniform(s, r: int) -> Vec:
    return (Fraction(s),) + (Fraction(1),) * r


@dataclass(frozen=True)
class Chamber:
    """Interval of ``s`` on which the positive part of ``(s; 1, ..., 1)`` is affine.

    On ``[lo, hi]`` the positive part is ``s * slope + offset`` and the
    classes in ``support`` carry the negative part.
    """

    lo: Fraction
    hi: Fraction | None
    support: tuple[DivisorClass, ...]
    slope: Vec
    offset: Vec

    def positive_part(self, s) -> Vec:
        return _axpy(Fraction(s), self.slope, self.offset)

    def degree(self, s) -> Fraction:
        """Degree of the positive part, i.e. its intersection with a line."""
        return self.slope[0] * s + self.offset[0]


def _zariski_support(s: Fraction, curves, r: int) -> tuple[DivisorClass, ...]:
    D = _uniform(s, r)
    support: list[DivisorClass] = []
    P = D
    while True:
        new = [c for c in curves if c not in support and _pair(P, c.as_tuple()) < 0]
        if not new:
            return tuple(support)
        support += new
        G = [[Fraction(intersect(a, b)) for b in support] for a in support]
        coeffs = _solve(G, [[_pair(D, c.as_tuple())] for c in support])
        if any(row[0] < 0 for row in coeffs):
            raise ArithmeticError("negative coefficient in Zariski support")
        P = D
        for c, row in zip(support, coeffs):
            P = _axpy(-row[0], c.as_tuple(), P)


def _chamber_at(s: Fraction, curves, r: int) -> Chamber:
    support = _zariski_support(s, curves, r)
    L = (Fraction(1),) + (Fraction(0),) * r
    E = (Fraction(0),) + (Fraction(1),) * r
    slope, offset = L, E
    if support:
        G = [[Fraction(intersect(a, b)) for b in support] for a in support]
        rhs = [[_pair(L, c.as_tuple()), _pair(E, c.as_tuple())] for c in support]
        sol = _solve(G, rhs)
        for c, (ka, kb) in zip(support, sol):
            v = c.as_tuple()
            slope = _axpy(-ka, v, slope)
            offset = _axpy(-kb, v, offset)
    else:
        sol = []
    lo, hi = None, None

    def bound(k: Fraction, c0: Fraction) -> None:
        # require k*s + c0 >= 0
        nonlocal lo, hi
        if k > 0:
            lo = -c0 / k if lo is None else max(lo, -c0 / k)
        elif k < 0:
            hi = -c0 / k if hi is None else min(hi, -c0 / k)
        elif c0 < 0:
            raise ArithmeticError("empty chamber")

    for ka, kb in sol:
        bound(ka, kb)
    for c in curves:
        if c not in support:
            v = c.as_tuple()
            bound(_pair(slope, v), _pair(offset, v))
    if lo is None or lo > s or (hi is not None and hi < s):
        raise ArithmeticError("probe outside its own chamber")
    return Chamber(lo, hi, support, slope, offset)


@dataclass(frozen=True)
class AsymptoticProfile:
    """Chambers covering ``[alpha, inf)`` for the classes ``(s; 1, ..., 1)``.

    ``alpha`` is where the classes stop being big: the scaled initial degree
    ``lim alpha(m)/m``.  Below it the scaled x,y-growth rate is zero.
    """

    chambers: tuple[Chamber, ...] = field(repr=False)
    alpha: Fraction

    def chamber(self, s) -> Chamber:
        for ch in self.chambers:
            if ch.lo <= s and (ch.hi is None or s <= ch.hi):
                return ch
        raise ValueError(f"s = {s} lies below the big cone")

    def degree(self, s) -> Fraction:
        """Limit of ``(H(sm) - H(sm - 1)) / m``, right-continuous at ``alpha``."""
        if s < self.alpha:
            return Fraction(0)
        return self.chamber(s).degree(s)

    def breakpoints(self) -> list[Fraction]:
        return sorted({ch.lo for ch in self.chambers})


def asymptotic_profile(cfg: ConfigurationType,
                       neg_curves: NegativeCurves | None = None) -> AsymptoticProfile:
    neg_curves = neg_curves or enumerate_NEG(cfg)
    curves = neg_curves.all
    r = cfg.r
    top = max(Fraction(sum(c.mults), c.d) for c in curves if c.d > 0)
    top = max(top, Fraction(0))
    chambers = [_chamber_at(top + 1, curves, r)]
    if chambers[0].support:
        raise InconsistencyError("classes above the nef threshold are not nef")
    chambers[0] = Chamber(top, None, (), chambers[0].slope, chambers[0].offset)
    lo = top
    while True:
        P = chambers[-1].positive_part(lo)
        if _pair(P, P) == 0:
            break
        if lo <= 0:
            raise InconsistencyError("big cone extends to s <= 0")
        eta = lo / 4
        for _ in range(400):
            try:
                ch = _chamber_at(lo - eta, curves, r)
            except (ArithmeticError, ZeroDivisionError):
                eta /= 2
                continue
            Q = ch.positive_part(lo - eta)
            if (ch.hi is not None and ch.hi < lo) or _pair(Q, Q) <= 0 or Q[0] < 0:
                eta /= 2
                continue
            break
        else:
            raise InconsistencyError(f"could not continue the chamber walk below s = {lo}")
        ch = Chamber(ch.lo, lo, ch.support, ch.slope, ch.offset)
        if ch.positive_part(lo) != P:
            raise InconsistencyError(f"positive part jumps at s = {lo}")
        chambers.append(ch)
        lo = ch.lo
    return AsymptoticProfile(tuple(chambers), lo)
