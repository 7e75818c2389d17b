"""Integer partitions: constrained enumeration, conjugates, orbit expansion.

Partitions are plain tuples of weakly decreasing positive integers; the
empty partition is ``()``.  Enumeration is reverse lexicographic (largest
first part first), which keeps every downstream report byte-stable.
"""

from __future__ import annotations

from math import factorial
from typing import Iterable, Iterator, Optional

Partition = tuple[int, ...]


def is_partition(lam: Iterable[int]) -> bool:
    lam = tuple(lam)
    if any(not isinstance(p, int) or p < 1 for p in lam):
        return False
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def enum_partitions(
    k: int,
    *,
    max_part: Optional[int] = None,
    max_length: Optional[int] = None,
    mod01: Optional[int] = None,
) -> list[Partition]:
    """All partitions of k, reverse lexicographic, under optional constraints.

    * ``max_part``: every part <= max_part,
    * ``max_length``: at most that many parts,
    * ``mod01``: every part congruent to 0 or 1 modulo mod01.

    ``enum_partitions(0)`` is ``[()]``.
    """
    if k < 0:
        raise ValueError(f"partition weight must be >= 0, got {k}")
    if max_part is not None and max_part < 0:
        raise ValueError("max_part must be >= 0")
    if max_length is not None and max_length < 0:
        raise ValueError("max_length must be >= 0")
    if mod01 is not None and mod01 < 1:
        raise ValueError("mod01 must be >= 1")

    def allowed(part: int) -> bool:
        return mod01 is None or part % mod01 in (0, 1)

    def gen(remaining: int, cap: int, slots: Optional[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        if slots is not None and slots == 0:
            return
        for part in range(min(cap, remaining), 0, -1):
            if not allowed(part):
                continue
            rest_slots = None if slots is None else slots - 1
            for rest in gen(remaining - part, part, rest_slots):
                yield (part,) + rest

    cap = k if max_part is None else min(max_part, k)
    return list(gen(k, cap, max_length))


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    lam = tuple(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def multiplicities(lam: Partition) -> dict[int, int]:
    """Map part value -> number of occurrences."""
    out: dict[int, int] = {}
    for p in lam:
        out[p] = out.get(p, 0) + 1
    return out


def multinomial(counts: Iterable[int]) -> int:
    """(sum counts)! / prod(count!)."""
    counts = list(counts)
    if any(c < 0 for c in counts):
        raise ValueError("counts must be >= 0")
    out = factorial(sum(counts))
    for c in counts:
        out //= factorial(c)
    return out


def distinct_orbit(lam: Partition, n: int) -> list[tuple[int, ...]]:
    """Distinct rearrangements of lam padded with zeros to length n.

    Empty when lam has more than n parts.  Ordered descending
    lexicographically, starting from the padded partition itself.
    """
    lam = tuple(lam)
    if n < 0:
        raise ValueError(f"length must be >= 0, got {n}")
    if len(lam) > n:
        return []
    padded = sorted(lam + (0,) * (n - len(lam)), reverse=True)

    def gen(pool: list[int]) -> Iterator[tuple[int, ...]]:
        if not pool:
            yield ()
            return
        seen = None
        for i, v in enumerate(pool):
            if v == seen:
                continue
            seen = v
            for rest in gen(pool[:i] + pool[i + 1 :]):
                yield (v,) + rest

    return list(gen(padded))
