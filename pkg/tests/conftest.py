from functools import lru_cache

import pytest

from edcert.catalogue import build, parse_group_spec


@lru_cache(maxsize=None)
def _built(text):
    return build(parse_group_spec(text))


@pytest.fixture(scope="session")
def group_of():
    """Session-cached group builder: group_of('A:7') etc."""
    return _built
