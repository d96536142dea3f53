import pytest

from evencycles.oracle.generators import gen_complete_bipartite
from evencycles.pipeline.params import Params


@pytest.fixture
def k55():
    return gen_complete_bipartite(5, 5).graph


@pytest.fixture
def k48():
    return gen_complete_bipartite(4, 8).graph


@pytest.fixture
def params2():
    return Params(k=2, eps=1)
