from functools import lru_cache

from hypothesis import strategies as st

from snchar.partitions import Partition, enumerate_partitions


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    return tuple(enumerate_partitions(n))


def partitions_st(max_n: int, min_n: int = 0):
    """Hypothesis strategy over all partitions of sizes in [min_n, max_n]."""
    return st.integers(min_n, max_n).flatmap(lambda n: st.sampled_from(partitions_of(n)))
