import pytest

from polyad.constructions import named_example

_cache = {}


def example(name):
    if name not in _cache:
        _cache[name] = named_example(name)
    return _cache[name]


@pytest.fixture(scope="session")
def t3():
    return example("T3")


@pytest.fixture(scope="session")
def rusakov5():
    return example("Rusakov5")


@pytest.fixture(scope="session")
def v6():
    return example("V6")


@pytest.fixture(scope="session")
def s3_ternary():
    return example("derived(S3,3)")


@pytest.fixture(scope="session")
def s4_ternary():
    return example("derived(S4,3)")


@pytest.fixture(scope="session")
def d6_ternary():
    return example("D6_ternary")


@pytest.fixture(scope="session")
def b3_5ary():
    return example("B3_5ary")


@pytest.fixture(scope="session")
def s3_7ary():
    return example("derived(S3,7)")


@pytest.fixture(scope="session")
def z4_ternary():
    return example("derived(Z4,3)")
