from __future__ import annotations

import pytest

from msadvisor import builtin_kb


@pytest.fixture(scope="session")
def kb():
    return builtin_kb()
