import os
import tempfile
from pathlib import Path

# must be set before anything imports app.constants
os.environ["SHARPTREE_STRICT_CHECKS"] = "1"
os.environ.setdefault("SHARPTREE_LOG_DIR", tempfile.mkdtemp(prefix="sharptree-logs-"))

import pytest
from hypothesis import HealthCheck, settings

from app.core.tree import parse_tree

settings.register_profile(
    "sharptree",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("sharptree")

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def load_fixture(name: str):
    return parse_tree((FIXTURES / name).read_text(encoding="utf-8"))


@pytest.fixture
def fixture_path():
    return lambda name: str(FIXTURES / name)


@pytest.fixture
def p5():
    return load_fixture("p5.txt")


@pytest.fixture
def t6():
    return load_fixture("t6.txt")


@pytest.fixture
def t1():
    return load_fixture("t1.txt")


@pytest.fixture
def t2():
    return load_fixture("t2.txt")


@pytest.fixture
def star():
    return load_fixture("star12.txt")
