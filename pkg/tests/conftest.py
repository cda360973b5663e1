import pytest
from hypothesis import settings

from enrichkit.instances import (
    bool_poset,
    cocycle_vcat,
    join_monoid_v2cat,
    preorder_vcat,
    xor_group_v2cat,
    zmod2,
)

settings.register_profile("kernel", derandomize=True, max_examples=60,
                          deadline=None)
settings.load_profile("kernel")


@pytest.fixture(scope="session")
def bool2():
    return bool_poset(2)


@pytest.fixture(scope="session")
def bool3():
    return bool_poset(3)


@pytest.fixture(scope="session")
def zmod3():
    return zmod2(3)


@pytest.fixture(scope="session")
def preorder_p(bool2):
    return preorder_vcat(bool2, ["a", "b"],
                         {("a", "a"), ("a", "b"), ("b", "b")})


@pytest.fixture(scope="session")
def cocycle_d(zmod3):
    return cocycle_vcat(zmod3, {"x": "0", "y": "1"})


@pytest.fixture(scope="session")
def join_w(bool2):
    return join_monoid_v2cat(bool2)


@pytest.fixture(scope="session")
def xor_x2(zmod3):
    return xor_group_v2cat(zmod3)
