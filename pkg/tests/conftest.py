import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from skewbrace.brace import Brace
from skewbrace.cyclotomic import build_ring, build_example_brace
from skewbrace.gamma import GammaFunction, gamma_from_kernel_hom
from skewbrace.params import RunConfig
from skewbrace.pgroup import parse_spec


@pytest.fixture
def params():
    return RunConfig()


@pytest.fixture
def c4():
    return parse_spec('2:[2]')


@pytest.fixture
def klein():
    return parse_spec('2:[1,1]')


@pytest.fixture
def c9():
    return parse_spec('3:[2]')


@pytest.fixture
def brace_z4(c4):
    """ a o g = (-1)^g a + g on Z/4 """
    return Brace(c4, gamma_from_kernel_hom(c4, (1,), 1, [[-1]]))


@pytest.fixture
def trivial_c9(c9):
    return Brace(c9, GammaFunction.trivial(c9))


@pytest.fixture(scope='session')
def ring32():
    return build_ring(3, 2)


@pytest.fixture(scope='session')
def brace32(ring32):
    return build_example_brace(ring32)
