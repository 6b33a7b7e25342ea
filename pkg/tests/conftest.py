import importlib

import pytest
from hypothesis import HealthCheck, settings

# the backend fixture is a read-only module, safe to share across examples
settings.register_profile("default", suppress_health_check=[HealthCheck.function_scoped_fixture])
settings.load_profile("default")

BACKENDS = ["citeweight._kernels_py", "citeweight._kernels"]

_acceptance = {}


@pytest.fixture(params=BACKENDS, ids=["python", "cython"])
def backend(request):
    try:
        return importlib.import_module(request.param)
    except ImportError:
        pytest.skip("compiled kernels not built")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or (report.when != "call" and report.passed):
        return
    number, title = marker.args
    _, ok = _acceptance.get(number, (title, True))
    _acceptance[number] = (title, ok and report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, ok = _acceptance[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
