import sys
from functools import lru_cache

import pytest

from fatgin.cohomology import hilbert_function
from fatgin.configuration import SLUGS, by_slug, enumerate_NEG


@lru_cache(maxsize=None)
def negs(slug):
    return enumerate_NEG(by_slug(slug))


@lru_cache(maxsize=None)
def table(slug, m):
    return hilbert_function(by_slug(slug), m, neg_curves=negs(slug))


@pytest.fixture(params=SLUGS)
def slug(request):
    return request.param


H = "two-lines-3-meeting"
F = "line-4-line-3"


def pytest_terminal_summary(terminalreporter):
    lines = getattr(sys.modules.get("test_acceptance"), "LINES", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
