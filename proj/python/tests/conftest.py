import pathlib
import shutil

import pytest


def pytest_addoption(parser):
    parser.addoption("--cli", default=None, help="path to the opspec command-line tool")
    parser.addoption("--mutant", default=None, help="path to the fault-injected build of the tool")


@pytest.fixture(scope="session")
def cli(request):
    path = request.config.getoption("--cli") or shutil.which("opspec")
    if not path or not pathlib.Path(path).exists():
        pytest.skip("opspec command-line tool not available")
    return path


@pytest.fixture(scope="session")
def mutant(request):
    path = request.config.getoption("--mutant")
    if not path or not pathlib.Path(path).exists():
        pytest.skip("mutant build not available")
    return path
