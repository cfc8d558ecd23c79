import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from quandlekit import catalog_get, catalog_names


@pytest.fixture(scope="session")
def trefoil():
    return catalog_get("trefoil")


@pytest.fixture(scope="session")
def figure_eight():
    return catalog_get("figure_eight")


@pytest.fixture(scope="session")
def unknot_family():
    return [catalog_get(n) for n in ("unknot", "unknot_r1", "unknot_r2")]


@pytest.fixture(scope="session")
def all_catalog():
    return {name: catalog_get(name) for name in catalog_names()}
