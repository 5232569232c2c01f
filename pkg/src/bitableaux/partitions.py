"""Integer partitions: validation, enumeration, conjugation."""

from __future__ import annotations

from typing import Iterable, Sequence

Partition = tuple[int, ...]


def check_partition(parts: Iterable[int]) -> Partition:
    """Normalize an iterable into a partition tuple, rejecting bad input.

    Parts must be positive and weakly decreasing; no trailing zeros are
    stored (strip them yourself first if you have a padded weight vector).
    """
    p = tuple(int(x) for x in parts)
    for i, part in enumerate(p):
        if part < 1:
            raise ValueError(f"partition parts must be positive, got {p}")
        if i and part > p[i - 1]:
            raise ValueError(f"partition parts must be weakly decreasing, got {p}")
    return p


def is_partition(parts: Sequence[int]) -> bool:
    return all(x >= 1 for x in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def trim(vec: Sequence[int]) -> Partition:
    """Drop trailing zeros, e.g. to compare a weight vector with a partition."""
    end = len(vec)
    while end and vec[end - 1] == 0:
        end -= 1
    return tuple(vec[:end])


def pad(parts: Sequence[int], length: int) -> tuple[int, ...]:
    """Extend with zeros to the requested length."""
    if len(parts) > length:
        raise ValueError(f"cannot pad {parts} to shorter length {length}")
    return tuple(parts) + (0,) * (length - len(parts))


def enumerate_partitions(k: int, max_length: int | None = None) -> list[Partition]:
    """All partitions of k (at most max_length parts), reverse-lexicographic."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    limit = k if max_length is None else min(max_length, k)
    out: list[Partition] = []

    def rec(remaining: int, max_part: int, slots: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if slots == 0:
            return
        for part in range(min(max_part, remaining), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, slots - 1, prefix)
            prefix.pop()

    rec(k, k, limit, [])
    return out


def conjugate(p: Sequence[int]) -> Partition:
    """Column lengths of the diagram; involutive."""
    p = check_partition(p)
    if not p:
        return ()
    return tuple(sum(1 for part in p if part > j) for j in range(p[0]))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """Cellwise containment of Young diagrams."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))
