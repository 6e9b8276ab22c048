import json

import pytest

from fatgin.configuration import (SLUGS, ConfigurationType, by_alias, by_slug, catalog, conic,
                                  enumerate_all_types, enumerate_NEG, from_json, incidence_types,
                                  line, resolve, slug_of, validate)
from fatgin.errors import InvalidConfigurationError, UnsupportedSurfaceError
from fatgin.picard import DivisorClass, intersect

from conftest import H


def cls(d, *m):
    return DivisorClass(d, m)


H_NEG = {
    cls(1, 1, 1, 1, 0, 0, 0), cls(1, 1, 0, 0, 1, 1, 0), cls(1, 1, 0, 0, 0, 0, 1),
    cls(1, 0, 1, 0, 0, 0, 1), cls(1, 0, 0, 1, 0, 0, 1), cls(1, 0, 0, 0, 1, 0, 1),
    cls(1, 0, 0, 0, 0, 1, 1), cls(1, 0, 1, 0, 1, 0, 0), cls(1, 0, 1, 0, 0, 1, 0),
    cls(1, 0, 0, 1, 1, 0, 0), cls(1, 0, 0, 1, 0, 1, 0), cls(2, 0, 1, 1, 1, 1, 1),
}


def test_neg_for_H():
    negs = enumerate_NEG(by_slug(H))
    assert set(negs.NEG) == H_NEG
    assert len(negs.NEG) == 12
    assert set(negs.neg) == {cls(1, 1, 1, 1, 0, 0, 0), cls(1, 1, 0, 0, 1, 1, 0)}
    assert len(negs.exceptional) == 6


@pytest.mark.parametrize("slug,total", [("generic", 27), ("line-6", 7)])
def test_neg_totals(slug, total):
    assert len(enumerate_NEG(by_slug(slug)).all) == total


def test_neg_members_are_negative(slug):
    negs = enumerate_NEG(by_slug(slug))
    for c in negs.all:
        assert c.square() < 0
    for c in negs.NEG:
        if c not in negs.neg:
            assert all(intersect(c, d) >= 0 for d in negs.neg)


def test_enumerate_all_types_matches_catalog():
    types = enumerate_all_types()
    assert len(types) == 11
    assert sorted(slug_of(t) for t in types) == sorted(SLUGS)


def test_relabel_invariance():
    cfg = by_slug(H)
    moved = cfg.relabel((6, 5, 4, 3, 2, 1))
    assert moved != cfg
    assert moved.canonical() == cfg.canonical()
    assert slug_of(moved) == H


@pytest.mark.parametrize("curves,msg", [
    ([line(1, 2)], "at least 3"),
    ([line(1, 2, 3), line(1, 2, 4)], "share two"),
    ([line(1, 2, 7)], "outside"),
    ([conic(1, 2, 3, 4, 5)], "at least 6"),
    ([conic(1, 2, 3, 4, 5, 6), line(1, 2, 3)], "conic"),
    ([(3, (1, 2, 3))], "degree"),
    ([line(1, 2, 3), line(3, 2, 1)], "duplicate"),
])
def test_validate_rejects(curves, msg):
    with pytest.raises(InvalidConfigurationError, match=msg):
        validate(curves)


def test_unsupported_point_count():
    with pytest.raises(UnsupportedSurfaceError):
        validate([], r=9)
    with pytest.raises(UnsupportedSurfaceError):
        enumerate_NEG(validate([], r=5))


def test_incidence_types():
    assert incidence_types(by_slug(H))[1] == 3
    assert incidence_types(by_slug("line-4-line-3"))[1] == 3
    assert incidence_types(by_slug("generic"))[1] == 1
    types, _ = incidence_types(by_slug(H))
    assert types[1] == ("C1,3", "C1,3")
    assert types[6] == ()


def test_catalog_letters():
    entries = {e.slug: e for e in catalog()}
    assert len(entries) == 11
    assert by_alias("H") == by_slug(H)
    assert by_alias("F") == by_slug("line-4-line-3")
    assert entries["generic"].alias is None
    assert entries["generic"].presumed_alias == "A"


def test_json_round_trip(tmp_path):
    cfg = by_slug("four-lines-3")
    assert from_json(json.loads(json.dumps(cfg.to_json()))) == cfg
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(cfg.to_json()))
    assert resolve(str(path)) == cfg
    assert resolve("H") == by_slug(H)


def test_resolve_errors(tmp_path):
    with pytest.raises(InvalidConfigurationError):
        resolve("no-such-type")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InvalidConfigurationError):
        resolve(str(bad))
    with pytest.raises(InvalidConfigurationError):
        from_json({"points": 6, "curves": [{"degree": 1}]})


def test_type_is_frozen():
    cfg = by_slug(H)
    assert isinstance(cfg, ConfigurationType)
    with pytest.raises(AttributeError):
        cfg.r = 5
