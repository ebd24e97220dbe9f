"""Integer partitions: dual, pointwise sum, union, weight and containment.

A partition is stored as a non-increasing tuple of positive integers.  The
zero partition is the empty tuple; parts beyond the stored length read as 0.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import InvalidPartition, ParseError

MAX_PART = 10**6


class Partition(tuple):
    """Immutable non-increasing tuple of positive parts.

    >>> Partition([3, 1, 0])
    Partition(3, 1)
    """

    def __new__(cls, parts: Iterable[int] = ()) -> Partition:
        parts = [int(x) for x in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, x in enumerate(parts):
            if x < 1:
                raise InvalidPartition(f"parts must be positive, got {x} in row {i + 1}")
            if i and parts[i - 1] < x:
                raise InvalidPartition(f"parts must be non-increasing: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"

    def __str__(self) -> str:
        return format_partition(self)

    def part(self, i: int) -> int:
        """Return the i-th part (0-indexed), reading missing parts as 0."""
        return self[i] if i < len(self) else 0

    @property
    def weight(self) -> int:
        return sum(self)


def dual(p: Partition) -> Partition:
    """Conjugate partition: the i-th part counts parts of ``p`` that are >= i."""
    if not p:
        return Partition()
    return Partition(sum(1 for x in p if x >= i) for i in range(1, p[0] + 1))


def pointwise_sum(p: Partition, q: Partition) -> Partition:
    n = max(len(p), len(q))
    parts = [p.part(i) + q.part(i) for i in range(n)]
    # sums of non-increasing sequences are non-increasing
    assert all(parts[i] >= parts[i + 1] for i in range(n - 1))
    return Partition(parts)


def union(p: Partition, q: Partition) -> Partition:
    """Multiset union of parts."""
    return Partition(sorted((*p, *q), reverse=True))


def weight(p: Partition) -> int:
    return sum(p)


def contains(p: Partition, q: Partition) -> bool:
    """True iff the diagram of ``q`` fits inside that of ``p``."""
    return len(q) <= len(p) and all(y <= x for x, y in zip(p, q))


def parse_partition(text: str, max_part: int = MAX_PART) -> Partition:
    """Parse ``5,4,3,3,1``; ``0`` and the empty string give the zero partition."""
    s = text.strip()
    if s in ("", "0"):
        return Partition()
    parts = []
    pos = 0
    for token in s.split(","):
        stripped = token.strip()
        offset = pos + token.find(stripped) if stripped else pos
        if not stripped.isdigit():
            raise ParseError(f"expected a positive integer, got {stripped!r}", text, offset)
        value = int(stripped)
        if value == 0 or value > max_part:
            raise ParseError(f"part {value} outside 1..{max_part}", text, offset)
        parts.append(value)
        pos += len(token) + 1
    try:
        return Partition(parts)
    except InvalidPartition as exc:
        raise ParseError(str(exc), text, 0) from None


def format_partition(p: Partition) -> str:
    return ",".join(map(str, p)) if p else "0"


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""

    def rec(rest: int, bound: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, bound), 0, -1):
            for tail in rec(rest - first, first):
                yield (first, *tail)

    for parts in rec(n, n if max_part is None else max_part):
        yield Partition(parts)
