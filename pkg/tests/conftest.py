from pathlib import Path

import pytest

from edvtrees.tree import parse_edge_list

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def equal_vector_pair():
    return tuple(parse_edge_list((FIXTURES / f"equal_vector_t{i}.edges").read_text()) for i in (1, 2))
