import pytest

from conformal_systems.omega import Context

_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture(scope="session")
def ctx_cache():
    cache = {}

    def get(label, seed=None):
        key = (label, seed)
        if key not in cache:
            cache[key] = Context.build(label, seed)
        return cache[key]

    return get


@pytest.fixture(scope="session")
def a2(ctx_cache):
    return ctx_cache("A2")


@pytest.fixture(scope="session")
def a3(ctx_cache):
    return ctx_cache("A3")


@pytest.fixture(scope="session")
def d4(ctx_cache):
    return ctx_cache("D4")


@pytest.fixture
def record_criterion():
    def record(name, passed, detail=""):
        _ACCEPTANCE.append((name, passed, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
