import os

from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=2000, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def words(n, max_len=8, min_len=0):
    return st.lists(st.integers(1, n), min_size=min_len, max_size=max_len).map(tuple)


@st.composite
def rank_and_word(draw, ranks=(3, 4, 5), max_len=8):
    n = draw(st.sampled_from(ranks))
    return n, draw(words(n, max_len))


import pytest


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        item.stash[_RESULT] = rep


_RESULT = pytest.StashKey()
_CRITERIA = []


def pytest_collection_modifyitems(items):
    _CRITERIA[:] = [it for it in items if it.get_closest_marker("criterion")]


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for item in sorted(_CRITERIA, key=lambda it: it.get_closest_marker("criterion").args[0]):
        number, title = item.get_closest_marker("criterion").args
        rep = item.stash.get(_RESULT, None)
        if rep is None:
            status = "NOT RUN"
        elif rep.passed:
            status = "PASS"
        elif rep.skipped:
            status = "SKIP"
        else:
            status = "FAIL"
        terminalreporter.write_line(f"{status} criterion {number}: {title}")
