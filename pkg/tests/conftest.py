from __future__ import annotations

import pytest

from hopfkit.builtins import load_builtin
from hopfkit.exactfield import GF, QQ

# every builtin used by the property suites (address, small enough for full checks)
BUILTINS = [
    "cyclic:2@Q",
    "cyclic:3@GF7",
    "cyclic:5@GF11",
    "sym3@GF7",
    "dihedral:4@Q",
    "sweedler@Q",
    "taft:3:2@GF7",
    "taft:4:q@GF13",
    "gr_uq_sl2:3:2@GF7",
]


@pytest.fixture(params=BUILTINS)
def builtin(request):
    return load_builtin(request.param)


@pytest.fixture
def sweedler():
    return load_builtin("sweedler@Q")


@pytest.fixture
def s3():
    return load_builtin("sym3@GF7")


@pytest.fixture
def taft3():
    return load_builtin("taft:3:2@GF7")


@pytest.fixture(params=[QQ, GF(7), GF(2, [1, 1, 1])], ids=["Q", "GF7", "GF4"])
def field(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for k in sorted(results):
            terminalreporter.write_line(results[k])
