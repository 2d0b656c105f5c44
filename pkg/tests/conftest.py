"""
Shared fixtures for use in tests
"""
import pytest

from orbita.BranchingEngine import BranchingEngine
from orbita.Config import Config
from orbita.RootDatum import RootSet


def _roots(name: str) -> RootSet:
    return Config.load(name).roots_G()


@pytest.fixture
def sl2_roots(request):
    del request  # unused
    return _roots('sl2')


@pytest.fixture
def su21_roots(request):
    del request  # unused
    return _roots('su21')


@pytest.fixture
def sp4_roots(request):
    del request  # unused
    return _roots('sp4')


@pytest.fixture(params=['sl2', 'su21', 'sp4'])
def group_name(request):
    """
    Every bundled single-group config
    """
    return request.param


@pytest.fixture
def bundled_roots(group_name):
    return _roots(group_name)


@pytest.fixture
def diag_engine(request):
    del request  # unused
    return BranchingEngine(Config.load('diag-sl2').pair())


@pytest.fixture
def hol_antihol_engine(request):
    del request  # unused
    return BranchingEngine(Config.load('hol-antihol-sl2').pair())


@pytest.fixture
def sl2_engine(request):
    del request  # unused
    return BranchingEngine(Config.load('sl2').pair())
