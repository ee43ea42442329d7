from collections import OrderedDict

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("repo", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

# criterion label -> list of (test name, passed, seconds)
_CRITERIA: "OrderedDict[str, list]" = OrderedDict()
_SETUP: dict[str, float] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    # module fixtures do the heavy lifting, so setup time counts too
    if rep.when == "setup" and rep.passed:
        _SETUP[item.nodeid] = rep.duration
    elif rep.when == "call" or rep.when == "setup":
        secs = rep.duration + _SETUP.pop(item.nodeid, 0.0)
        _CRITERIA.setdefault(str(mark.args[0]), []).append((item.name, rep.passed, secs))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")

    def key(label):
        head = "".join(ch for ch in label if ch.isdigit())
        return (int(head or 0), label)

    for label in sorted(_CRITERIA, key=key):
        parts = _CRITERIA[label]
        ok = all(p for _, p, _ in parts)
        secs = sum(s for _, _, s in parts)
        failed = [n for n, p, _ in parts if not p]
        detail = f"  failed: {', '.join(failed)}" if failed else ""
        tr.write_line(f"criterion {label}: {'PASS' if ok else 'FAIL'} ({len(parts)} checks, {secs:.1f}s){detail}")
