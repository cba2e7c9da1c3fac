from __future__ import annotations

import pytest

from netorder.instances.fixtures import fixture
from netorder.model.network import NetworkInstance


@pytest.fixture()
def fig1() -> NetworkInstance:
    return fixture("fig1_trivial").instance


@pytest.fixture()
def fig2() -> NetworkInstance:
    return fixture("fig2_double_diamond").instance


@pytest.fixture()
def fig4() -> NetworkInstance:
    return fixture("fig4_removable_dd").instance


@pytest.fixture()
def fig4_shared() -> NetworkInstance:
    return fixture("fig4_shared_tails").instance


@pytest.fixture()
def fig5() -> NetworkInstance:
    return fixture("fig5_wait_example").instance


@pytest.fixture()
def fig6() -> NetworkInstance:
    return fixture("fig6_multi_source").instance

