import os
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

from qpehr.qposet import QuasiPoset, parse_qp  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def named():
    return {
        "empty": QuasiPoset.empty(),
        "pt": QuasiPoset.point(),
        "C2": parse_qp("2: 1<2"),
        "A2": parse_qp("2:"),
        "B2": parse_qp("2: 1~2"),
        "C3": parse_qp("3: 1<2 2<3"),
        "V": parse_qp("3: 1<2 1<3"),
        "Lam": parse_qp("3: 1<3 2<3"),
    }
