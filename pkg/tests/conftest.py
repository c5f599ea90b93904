import pytest

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.fixture(autouse=True)
def isolated_seed_cache(tmp_path, monkeypatch):
    """Point the seed cache at an empty directory so the host cache cannot leak in."""
    path = tmp_path / "seed-cache"
    monkeypatch.setenv("RCFD_SEED_CACHE", str(path))
    return path


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _criteria[marker.args[0]] = (marker.args[1], rep.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        title, outcome = _criteria[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if outcome == 'passed' else 'FAIL'}  {title}")
