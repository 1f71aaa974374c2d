import os
import sys

import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from core.commands import RunSettings  # noqa: E402
from core.reference_codes import z4_code, z30_codes, z30_matrix  # noqa: E402
from core.ring import ring_new  # noqa: E402

SPEC_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'specs'))


@pytest.fixture
def z30():
    return ring_new(30)


@pytest.fixture
def z30_example():
    C1, C2 = z30_codes()
    return C1, C2, z30_matrix()


@pytest.fixture
def z4_lcd_code():
    return z4_code()


@pytest.fixture
def small_settings():
    return RunSettings(workers=2, suite_counts={
        'ring-core': 8, 'exact-linalg': 6, 'dual-algebra': 8, 'mpc-algebra': 6, 'torsion': 6,
    })


@pytest.fixture
def spec_path():
    def _path(name):
        return os.path.join(SPEC_DIR, name)
    return _path
