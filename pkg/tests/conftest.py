import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from zdring import load_table

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def klein4():
    return load_table(DATA / "klein4.tab")


@pytest.fixture(scope="session")
def s3():
    return load_table(DATA / "s3.tab")


@pytest.fixture(scope="session")
def c6():
    return load_table(DATA / "c6.tab")


@pytest.fixture(scope="session")
def d4():
    return load_table(DATA / "d4.tab")


@pytest.fixture(scope="session")
def data_dir():
    return DATA
