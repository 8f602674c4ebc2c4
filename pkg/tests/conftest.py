from fractions import Fraction

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

RATIONAL_QS = [Fraction(1, 2), Fraction(4, 5), Fraction(3, 2), Fraction(2)]


@pytest.fixture(params=RATIONAL_QS, ids=str)
def q0(request):
    return request.param
