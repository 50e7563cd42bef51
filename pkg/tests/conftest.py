import pytest

from finspan import catalog


@pytest.fixture(scope="session")
def nerve_z2():
    return catalog.nerve(catalog.cyclic_group_category(2), 4)


@pytest.fixture(scope="session")
def nerve_z3():
    return catalog.nerve(catalog.cyclic_group_category(3), 4)


@pytest.fixture(scope="session")
def interval_l2():
    return catalog.partial_monoid_nerve(catalog.interval_monoid(2), 4)


@pytest.fixture(scope="session")
def interval_l3():
    return catalog.partial_monoid_nerve(catalog.interval_monoid(3), 4)


@pytest.fixture(scope="session")
def interval_l2_cyclic():
    return catalog.interval_cyclic(2, 4)


@pytest.fixture(scope="session")
def z2_groupoid_cyclic():
    return catalog.groupoid_cyclic(catalog.cyclic_group_category(2), 4)


@pytest.fixture(scope="session")
def interval_l3_gamma():
    return catalog.commutative_monoid_gamma(catalog.interval_monoid(3), 4)


@pytest.fixture(scope="session")
def path3_gamma():
    return catalog.graph_partition_gamma(catalog.path_graph(3), 4)
