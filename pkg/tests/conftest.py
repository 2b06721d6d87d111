import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cyclic_census import census, fixtures  # noqa: E402

ACCEPTANCE = pytest.StashKey[dict]()
N_CRITERIA = 8


@pytest.fixture(scope="session")
def cubic_census():
    return census.multiplet_census(3, 100_000)


@pytest.fixture(scope="session")
def quartet_censuses():
    from reference_values import BOUNDS
    return {b: census.quartet_census(b) for b in BOUNDS}


@pytest.fixture(scope="session")
def fixture_rows():
    return fixtures.load_all()


@pytest.fixture(scope="session")
def fixture_report(fixture_rows):
    return fixtures.verify_fixtures(fixture_rows)


@pytest.fixture(scope="session")
def zero_edge_quartets():
    from cyclic_census.residue_graph import residue_graph
    return [c for c in census.conductors_with_t(100_000, 3) if not residue_graph(c).edges]


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion, print its line and assert it."""
    def record(n: int, ok: bool, detail: str) -> None:
        request.config.stash.setdefault(ACCEPTANCE, {})[n] = (ok, detail)
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")
        assert ok, detail
    return record


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(ACCEPTANCE, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in range(1, N_CRITERIA + 1):
        ok, detail = results.get(n, (False, "not reached"))
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")
