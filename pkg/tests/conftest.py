import functools

import pytest

from chevalley import Diagram, build_root_system, compute_all_positive

# Every supported diagram at desk ranks.
DESK_SYSTEMS = (
    [("A", r) for r in range(1, 9)]
    + [("B", r) for r in range(2, 9)]
    + [("C", r) for r in range(2, 9)]
    + [("D", r) for r in range(4, 9)]
    + [("E", 6), ("F", 4), ("G", 2)]
)


@functools.lru_cache(maxsize=None)
def _system(kind, rank):
    return build_root_system(Diagram(kind, rank))


@functools.lru_cache(maxsize=None)
def _matrix(kind, rank, force_general=False):
    return compute_all_positive(_system(kind, rank), force_general=force_general)


@pytest.fixture(scope="session")
def make_system():
    """Session-cached root-system builder; systems are immutable and shared."""
    return _system


@pytest.fixture(scope="session")
def make_matrix():
    """Session-cached fully computed matrices; tests must copy() before mutating."""
    return _matrix
