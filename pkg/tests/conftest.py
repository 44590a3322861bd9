"""Shared fixtures and the acceptance-summary reporter."""

import pytest

from itmfree import (
    ItmConfig,
    SpreadingParams,
    StefanParams,
    make_spreading,
    make_stefan,
    secant_solve,
)

# Populated by tests/test_acceptance.py: criterion id -> (passed, detail).
ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(ACCEPTANCE_RESULTS, key=lambda c: int(c.split(":")[0])):
        ok, detail = ACCEPTANCE_RESULTS[cid]
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {cid}: {verdict}{' - ' + detail if detail else ''}")


@pytest.fixture(scope="session")
def stefan_s1():
    problem, scaling = make_stefan(StefanParams(S=1.0))
    config = ItmConfig(s_star=0.5, step=1e-3, h0=30.0, h1=40.0)
    return secant_solve(problem, scaling, config)


@pytest.fixture(scope="session")
def spreading_problem():
    return make_spreading(SpreadingParams(H=0.5, L=-0.5))
