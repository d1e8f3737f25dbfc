from fractions import Fraction

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

F = Fraction


@pytest.fixture
def half():
    return F(1, 2)
