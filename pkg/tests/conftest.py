import pytest

from topolab import chain3, discrete, indiscrete, sierpinski


@pytest.fixture
def s2():
    return sierpinski()


@pytest.fixture
def c3():
    return chain3()


@pytest.fixture
def d2():
    return discrete(2)


@pytest.fixture
def i2():
    return indiscrete(2)
