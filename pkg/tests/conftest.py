import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from instances import build_artifacts  # noqa: E402

from aelcert import make_field  # noqa: E402


@pytest.fixture(scope="session")
def gf2():
    return make_field(2, 1)


@pytest.fixture(scope="session")
def gf4():
    return make_field(2, 2)


@pytest.fixture(scope="session")
def gf8():
    return make_field(2, 3)


@pytest.fixture(scope="session")
def gf16():
    return make_field(2, 4)


@pytest.fixture(scope="session")
def gf17():
    return make_field(17, 1)


@pytest.fixture(scope="session")
def acceptance(tmp_path_factory):
    """All acceptance instances, built once from the root seed."""
    outdir = tmp_path_factory.mktemp("acceptance")
    return build_artifacts(outdir)
