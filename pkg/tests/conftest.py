import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pluot import MemoCache, MemoryStore, StoreRegistry


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)


@pytest.fixture
def registry():
    return StoreRegistry()


@pytest.fixture
def cache():
    return MemoCache()


def memory_registry(entries, name="mem"):
    reg = StoreRegistry()
    reg.register(name, MemoryStore(entries))
    return reg
