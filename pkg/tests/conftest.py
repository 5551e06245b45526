import functools

import pytest

from transgress import LieType, build_root_system, weyl_group

# Every simple type at rank <= 8.
ALL_TYPES = (
    [f"A{r}" for r in range(1, 9)]
    + [f"B{r}" for r in range(2, 9)]
    + [f"C{r}" for r in range(2, 9)]
    + [f"D{r}" for r in range(3, 9)]
    + ["E6", "E7", "E8", "F4", "G2"]
)


@functools.lru_cache(maxsize=None)
def cached_root_system(name: str):
    return build_root_system(LieType(name[0], int(name[1:])))


@functools.lru_cache(maxsize=None)
def cached_weyl_group(name: str):
    return weyl_group(cached_root_system(name))


@pytest.fixture(scope="session")
def root_system():
    return cached_root_system


@pytest.fixture(scope="session")
def weyl():
    return cached_weyl_group
