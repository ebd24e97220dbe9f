import sys

import pytest
from hypothesis import strategies as st

from lrgen.partitions import Partition
from lrgen.pickets import H1Object, Picket, gamma
from lrgen.tableau import ExtTableau


@st.composite
def partitions(draw, max_part=8, max_len=8):
    parts = draw(st.lists(st.integers(1, max_part), max_size=max_len))
    return Partition(sorted(parts, reverse=True))


pickets = st.builds(Picket, st.sampled_from([0, 1]), st.integers(1, 6))
free_pickets = st.one_of(pickets, st.just(Picket(1, 0)))


@st.composite
def s1_objects(draw, max_size=5):
    return H1Object(tuple(draw(st.lists(pickets, max_size=max_size))))


@st.composite
def h1_objects(draw, max_size=5):
    return H1Object(tuple(draw(st.lists(free_pickets, max_size=max_size))))


@st.composite
def tableaux(draw, max_size=6):
    return gamma(draw(s1_objects(max_size)))


@st.composite
def ext_tableaux(draw, max_size=6):
    return ExtTableau(draw(tableaux(max_size)), draw(st.integers(0, 4)))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
