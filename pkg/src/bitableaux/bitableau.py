"""Lexicographic bitableaux: pair-valued fillings, weights, and the [nm] encoding."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .partitions import Partition, check_partition
from .tableaux import SSYT

Pair = tuple[int, int]
PairRows = tuple[tuple[Pair, ...], ...]


@dataclass(frozen=True)
class Bitableau:
    """Filling by ordered pairs, semistandard for the lexicographic order.

    Entries weakly increase lexicographically along rows and strictly
    increase lexicographically down columns; first coordinates lie in [1, n],
    second coordinates in [1, m].
    """

    shape: Partition
    rows: PairRows
    n: int
    m: int

    def __post_init__(self) -> None:
        check_partition(self.shape)
        if tuple(len(r) for r in self.rows) != self.shape:
            raise ValueError("row lengths do not match shape")
        for r, row in enumerate(self.rows):
            for c, (a, b) in enumerate(row):
                if not (1 <= a <= self.n and 1 <= b <= self.m):
                    raise ValueError(f"entry ({a},{b}) outside [1,{self.n}]x[1,{self.m}]")
                if c and (a, b) < row[c - 1]:
                    raise ValueError("rows must weakly increase lexicographically")
                if r and c < len(self.rows[r - 1]) and (a, b) <= self.rows[r - 1][c]:
                    raise ValueError("columns must strictly increase lexicographically")

    @property
    def size(self) -> int:
        return sum(self.shape)

    def cells(self) -> Iterator[tuple[int, int, Pair]]:
        for r, row in enumerate(self.rows):
            for c, pair in enumerate(row):
                yield r, c, pair

    def with_entry(self, r: int, c: int, pair: Pair) -> "Bitableau":
        """Copy with one cell replaced (revalidates)."""
        rows = list(list(row) for row in self.rows)
        rows[r][c] = pair
        return Bitableau(self.shape, tuple(tuple(row) for row in rows), self.n, self.m)

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "rows": [[[a, b] for a, b in row] for row in self.rows],
            "n": self.n,
            "m": self.m,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Bitableau":
        rows = tuple(tuple((int(a), int(b)) for a, b in row) for row in data["rows"])
        n = int(data.get("n") or max((a for row in rows for a, _ in row), default=1))
        m = int(data.get("m") or max((b for row in rows for _, b in row), default=1))
        return cls(tuple(len(r) for r in rows), rows, n, m)

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[Sequence[int]]], n: int | None = None, m: int | None = None
    ) -> "Bitableau":
        grid = tuple(tuple((int(a), int(b)) for a, b in row) for row in rows)
        if n is None:
            n = max((a for row in grid for a, _ in row), default=1)
        if m is None:
            m = max((b for row in grid for _, b in row), default=1)
        return cls(tuple(len(r) for r in grid), grid, n, m)


def pair_to_int(pair: Pair, m: int) -> int:
    """Order isomorphism ([n]x[m], lex) -> [nm] via (i,j) -> (i-1)m + j."""
    i, j = pair
    if not 1 <= j <= m:
        raise ValueError(f"second coordinate {j} outside [1, {m}]")
    if i < 1:
        raise ValueError(f"first coordinate {i} must be positive")
    return (i - 1) * m + j


def int_to_pair(value: int, m: int) -> Pair:
    if value < 1:
        raise ValueError("value must be positive")
    return ((value - 1) // m + 1, (value - 1) % m + 1)


def iter_bitableau_rows(shape: Sequence[int], n: int, m: int) -> Iterator[PairRows]:
    """Yield raw pair-row tuples of every bitableau, row-major lex order."""
    shape = tuple(shape)
    if not shape:
        yield ()
        return
    if len(shape) > n * m:
        return
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    k = len(cells)
    grid = [[(0, 0)] * length for length in shape]
    pairs = [(a, b) for a in range(1, n + 1) for b in range(1, m + 1)]

    def rec(pos: int) -> Iterator[PairRows]:
        if pos == k:
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[pos]
        for pair in pairs:
            if c and pair < grid[r][c - 1]:
                continue
            if r and pair <= grid[r - 1][c]:
                continue
            grid[r][c] = pair
            yield from rec(pos + 1)
        grid[r][c] = (0, 0)

    yield from rec(0)


def iter_bitableau_rows_content(
    shape: Sequence[int],
    n: int,
    bcontent: Sequence[int],
    acontent: Sequence[int] | None = None,
) -> Iterator[PairRows]:
    """Bitableau rows with the exact b-content (and a-content when given)."""
    shape = tuple(shape)
    m = len(bcontent)
    if sum(shape) != sum(bcontent):
        return
    if acontent is not None and (len(acontent) != n or sum(acontent) != sum(shape)):
        return
    if not shape:
        yield ()
        return
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    k = len(cells)
    grid = [[(0, 0)] * length for length in shape]
    brem = list(bcontent)
    arem = list(acontent) if acontent is not None else None
    pairs = [(a, b) for a in range(1, n + 1) for b in range(1, m + 1)]

    def rec(pos: int) -> Iterator[PairRows]:
        if pos == k:
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[pos]
        for pair in pairs:
            a, b = pair
            if brem[b - 1] == 0 or (arem is not None and arem[a - 1] == 0):
                continue
            if c and pair < grid[r][c - 1]:
                continue
            if r and pair <= grid[r - 1][c]:
                continue
            brem[b - 1] -= 1
            if arem is not None:
                arem[a - 1] -= 1
            grid[r][c] = pair
            yield from rec(pos + 1)
            brem[b - 1] += 1
            if arem is not None:
                arem[a - 1] += 1
        grid[r][c] = (0, 0)

    yield from rec(0)


def enumerate_bitableaux(shape: Sequence[int], n: int, m: int) -> list[Bitableau]:
    """All lexicographic bitableaux with entries in [n]x[m], deterministic order."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be at least 1")
    shape = check_partition(shape)
    return [Bitableau(shape, rows, n, m) for rows in iter_bitableau_rows(shape, n, m)]


def weights(t: Bitableau) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(a-weight, b-weight): coordinate multiplicity vectors of lengths (n, m)."""
    a = [0] * t.n
    b = [0] * t.m
    for row in t.rows:
        for x, y in row:
            a[x - 1] += 1
            b[y - 1] += 1
    return tuple(a), tuple(b)


def bitableau_to_ssyt(t: Bitableau) -> SSYT:
    """Entrywise (i,j) -> (i-1)m + j; semistandard over [nm]."""
    rows = tuple(tuple(pair_to_int(p, t.m) for p in row) for row in t.rows)
    return SSYT(t.shape, rows, t.n * t.m)


def ssyt_to_bitableau(s: SSYT, n: int, m: int) -> Bitableau:
    """Inverse of bitableau_to_ssyt; rejects entries larger than n*m."""
    for row in s.rows:
        for x in row:
            if x > n * m:
                raise ValueError(f"entry {x} exceeds n*m = {n * m}")
    rows = tuple(tuple(int_to_pair(x, m) for x in row) for row in s.rows)
    return Bitableau(s.shape, rows, n, m)
