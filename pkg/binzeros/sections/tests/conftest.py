import pytest

from sections.exactpoly import SectionParams, build_section
from sections.solver import find_zeros


@pytest.fixture(scope='session')
def zeros_10_30():
    """Zeros of B_{10,30} at default precision."""
    return find_zeros(build_section(SectionParams(10, 30)))


@pytest.fixture(scope='session')
def zeros_1_5():
    return find_zeros(build_section(SectionParams(1, 5)))
