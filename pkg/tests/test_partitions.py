"""Unit tests for integer partition utilities."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from truncsym.partitions import (
    conjugate,
    distinct_orbit,
    enum_partitions,
    is_partition,
    multinomial,
    multiplicities,
)

PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


def test_unrestricted_counts_match_the_partition_numbers():
    for k, want in enumerate(PARTITION_COUNTS):
        assert len(enum_partitions(k)) == want


def test_zero_has_the_empty_partition():
    assert enum_partitions(0) == [()]
    assert is_partition(())


def test_reverse_lex_order_with_bounds():
    assert enum_partitions(5, max_part=3, max_length=3) == [(3, 2), (3, 1, 1), (2, 2, 1)]
    assert enum_partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_residue_restriction_keeps_parts_in_classes_zero_and_one():
    assert enum_partitions(4, mod01=3) == [(4,), (3, 1), (1, 1, 1, 1)]
    assert enum_partitions(2, mod01=3) == [(1, 1)]
    for lam in enum_partitions(9, mod01=4):
        assert all(part % 4 in (0, 1) for part in lam)


def test_is_partition():
    assert is_partition((3, 1, 1))
    assert not is_partition((1, 3))
    assert not is_partition((3, 0))
    assert not is_partition((-1,))


partitions = st.integers(0, 10).map(lambda k: enum_partitions(k)).flatmap(st.sampled_from)


class TestConjugate:
    @given(lam=partitions)
    def test_involution(self, lam):
        """Conjugating twice returns the original partition."""
        assert conjugate(conjugate(lam)) == lam

    @given(lam=partitions)
    def test_swaps_length_and_largest_part(self, lam):
        """The conjugate's largest part is the original length."""
        mu = conjugate(lam)
        if lam:
            assert mu[0] == len(lam)
            assert len(mu) == lam[0]
        else:
            assert mu == ()

    @given(lam=partitions)
    def test_preserves_weight(self, lam):
        """Conjugation preserves the sum of parts."""
        assert sum(conjugate(lam)) == sum(lam)


def test_conjugate_golden():
    assert conjugate((3, 2)) == (2, 2, 1)
    assert conjugate((2, 1, 1)) == (3, 1)


def test_multiplicities_and_multinomial():
    assert multiplicities((3, 1, 1)) == {3: 1, 1: 2}
    assert multinomial([2, 1]) == 3
    assert multinomial([]) == 1
    assert multinomial([1, 1, 1]) == 6


@given(lam=partitions, extra=st.integers(0, 2))
def test_orbit_size_counts_distinct_rearrangements(lam, extra):
    """The orbit size is the multinomial coefficient of the padded multiplicity vector."""
    n = len(lam) + extra
    orbit = distinct_orbit(lam, n)
    counts = list(multiplicities(lam).values())
    if n > len(lam):
        counts.append(n - len(lam))
    want = math.factorial(n)
    for c in counts:
        want //= math.factorial(c)
    assert len(orbit) == want
    assert len(set(orbit)) == len(orbit)
    assert all(sum(v) == sum(lam) for v in orbit)


def test_orbit_golden():
    assert distinct_orbit((2, 1, 1), 4)[0] == (2, 1, 1, 0)
    assert len(distinct_orbit((2, 1, 1), 4)) == 12
    assert distinct_orbit((1, 1), 1) == []
    assert distinct_orbit((), 2) == [(0, 0)]


def test_orbit_is_sorted_descending_lex():
    orbit = distinct_orbit((2, 1), 3)
    assert orbit == sorted(orbit, reverse=True)
    assert orbit[0] == (2, 1, 0)


def test_enum_rejects_negative_weight():
    with pytest.raises(ValueError):
        enum_partitions(-1)
