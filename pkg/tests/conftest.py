import json

import pytest
from hypothesis import settings

from mspace import new_morphism, new_space

settings.register_profile('multispace', deadline=None, max_examples=50)
settings.load_profile('multispace')


@pytest.fixture
def two_point():
    """({a:1, b:2}), el espacio de la potencia numerable"""
    return new_space(['a', 'b'], [1, 2])


@pytest.fixture
def halving():
    """({x},4) -> ({v},2)"""
    return new_morphism(new_space(['x'], [4]), new_space(['v'], [2]), {'x': 'v'})


@pytest.fixture
def write_json(tmp_path):
    def write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding='utf-8')
        return str(path)
    return write
