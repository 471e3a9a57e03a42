import os
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

from promislow.prime_field import FieldCtx  # noqa: E402


@pytest.fixture(params=[2, 3, 5], ids=lambda d: f"d{d}")
def ctx(request):
    return FieldCtx(request.param)


@pytest.fixture
def gf2():
    return FieldCtx(2)
