from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from fatgin.configuration import SLUGS, by_slug
from fatgin.errors import InvalidConfigurationError
from fatgin.oracle import (PointSet, check_witnesses, oracle_hilbert, rank, realize,
                           verify_realization, witness_count)

from conftest import H, table


def fraction_rank(matrix):
    rows = [[Fraction(v) for v in r] for r in matrix]
    rk, cols = 0, len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((i for i in range(rk, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        for i in range(len(rows)):
            if i != rk and rows[i][c]:
                f = rows[i][c] / rows[rk][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rk])]
        rk += 1
    return rk


@settings(max_examples=60)
@given(st.lists(st.lists(st.integers(-4, 4), min_size=5, max_size=5), min_size=1, max_size=7))
def test_rank_matches_fraction_elimination(matrix):
    sparse = [{j: v for j, v in enumerate(r) if v} for r in matrix]
    assert rank(sparse) == fraction_rank(matrix)


def test_all_witnesses_verify():
    assert all(all(v) for v in check_witnesses().values())
    assert all(witness_count(s) == 2 for s in SLUGS)


def test_verify_rejects_wrong_type():
    assert not verify_realization(realize(H), by_slug("generic"))
    assert not verify_realization(realize("generic"), by_slug(H))
    assert not verify_realization(realize("conic-6"), by_slug("generic"))
    # the sextuple (0,0),(1,0),(2,0),(0,1),(0,2),(1,1) has a third line x + y = 2
    ps = PointSet([(0, 0, 1), (1, 0, 1), (2, 0, 1), (0, 1, 1), (0, 2, 1), (1, 1, 1)])
    assert not verify_realization(ps, by_slug(H))


def test_point_set_normalizes():
    ps = PointSet([(2, 4, 2), (Fraction(1, 2), 0, 1)])
    assert ps.points == ((1, 2, 1), (1, 0, 2))
    with pytest.raises(InvalidConfigurationError):
        PointSet([(1, 1, 1), (-2, -2, -2)])
    with pytest.raises(InvalidConfigurationError):
        PointSet([(0, 0, 0)])


def test_generic_small_values():
    ps = realize("generic")
    assert oracle_hilbert(ps, 1, 2) == 0
    assert oracle_hilbert(ps, 1, 3) == 4
    assert oracle_hilbert(ps, 1, -1) == 0


def test_two_witnesses_agree(slug):
    a, b = realize(slug, 0), realize(slug, 1)
    for m in (1, 2):
        for t in range(3 * m + 5):
            assert oracle_hilbert(a, m, t) == oracle_hilbert(b, m, t)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_tail_independence(slug, m):
    # k collinear points of multiplicity m only impose independent conditions
    # from degree k*m - 1 on, which exceeds 3m + 5 for six points on a line
    k = max((len(c.points) for c in by_slug(slug).lines), default=0)
    ps = realize(slug, 1)
    start = max(3 * m + 5, k * m - 1)
    for t in (start, start + 1):
        assert oracle_hilbert(ps, m, t) == comb(t + 2, 2) - 6 * comb(m + 1, 2)


def test_six_collinear_tail_starts_late():
    ps = realize("line-6")
    assert oracle_hilbert(ps, 3, 14) == 87 == table("line-6", 3)[14]
    assert comb(16, 2) - 6 * comb(4, 2) == 84


def test_matches_pipeline_m2(slug):
    tab = table(slug, 2)
    ps = realize(slug)
    values = [oracle_hilbert(ps, 2, t) for t in range(tab.t_stop + 2)]
    assert values == [tab[t] for t in range(tab.t_stop + 2)]
    assert values == sorted(values)
