from itertools import permutations as iter_permutations

import pytest
from hypothesis import strategies as st

from symfusion import Partition


@st.composite
def partition_strategy(draw, max_n: int = 8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    parts = []
    remaining = n
    max_part = n
    while remaining:
        p = draw(st.integers(min_value=1, max_value=min(max_part, remaining)))
        parts.append(p)
        max_part = p
        remaining -= p
    return Partition(parts)


def brute_force_standard_count(shape: tuple[int, ...]) -> int:
    """Independent oracle: count monotone fillings by exhausting permutations."""
    n = sum(shape)
    count = 0
    for perm in iter_permutations(range(1, n + 1)):
        rows = []
        i = 0
        for length in shape:
            rows.append(perm[i : i + length])
            i += length
        ok = True
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if c + 1 < len(row) and v >= row[c + 1]:
                    ok = False
                    break
                if r + 1 < len(rows) and c < len(rows[r + 1]) and v >= rows[r + 1][c]:
                    ok = False
                    break
            if not ok:
                break
        count += ok
    return count


@pytest.fixture(scope="session")
def all_partitions_through():
    from symfusion import partitions_of

    def _through(max_n: int):
        for n in range(1, max_n + 1):
            yield from partitions_of(n)

    return _through
