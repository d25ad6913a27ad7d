from pathlib import Path
import pytest

from wdclib.config import NumericsConfig
from wdclib.scenario import load_scenarios, run_reports


# reduced resolution, enough for every fixture verdict
FAST = dict(shells=12, angles=256, nmax=128, n_radii=128)


@pytest.fixture(scope='function')
def data_path():
    path = Path(__file__).parent / 'data'
    return path.absolute()


@pytest.fixture(scope='session')
def fast_config():
    return NumericsConfig().with_overrides(**FAST)


@pytest.fixture(scope='session')
def suite_results():
    path = Path(__file__).parent / 'data' / 'scenarios.json'
    scenarios = load_scenarios(path, overrides=FAST)
    return {result.scenario.name: result for result in run_reports(scenarios)}
