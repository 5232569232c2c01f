"""Reading words and the bracket-matching crystal operators on words.

The parenthesization rule: for the operator index i, every letter i becomes
")" and every i+1 becomes "(".  Lowering flips the rightmost unmatched ")"
(an i becomes i+1), raising flips the leftmost unmatched "(" (an i+1 becomes
i).  No unmatched bracket means the operator sends the word to zero, which is
returned as None.
"""

from __future__ import annotations

from typing import Sequence

from .bitableau import Bitableau

Word = tuple[int, ...]

READING_METHODS = ("row", "w", "w_prime", "u", "u_prime")


def bitableau_reading_cells(
    t: Bitableau, method: str
) -> tuple[Word, tuple[tuple[int, int], ...]]:
    """Reading word of a bitableau together with each letter's source cell.

    w / w_prime group boxes by top entry (ascending / descending) and read
    bottom entries; u / u_prime group by bottom entry and read top entries.
    Within a group, rows are read left to right, bottom row first.
    """
    if method == "w":
        groups, read_top = range(1, t.n + 1), False
    elif method == "w_prime":
        groups, read_top = range(t.n, 0, -1), False
    elif method == "u":
        groups, read_top = range(1, t.m + 1), True
    elif method == "u_prime":
        groups, read_top = range(t.m, 0, -1), True
    else:
        raise ValueError(f"unknown bitableau reading method {method!r}")
    word: list[int] = []
    cells: list[tuple[int, int]] = []
    for g in groups:
        for r in range(len(t.rows) - 1, -1, -1):
            for c, (a, b) in enumerate(t.rows[r]):
                key, letter = (b, a) if read_top else (a, b)
                if key == g:
                    word.append(letter)
                    cells.append((r, c))
    return tuple(word), tuple(cells)


def bitableau_reading_word(t: Bitableau, method: str) -> Word:
    if method == "row":
        raise ValueError("method 'row' applies to integer tableaux, not bitableaux")
    return bitableau_reading_cells(t, method)[0]


def unmatched_brackets(word: Sequence[int], i: int) -> tuple[list[int], list[int]]:
    """Positions of unmatched "(" (letters i+1) and unmatched ")" (letters i)."""
    opens: list[int] = []
    closes: list[int] = []
    for pos, x in enumerate(word):
        if x == i + 1:
            opens.append(pos)
        elif x == i:
            if opens:
                opens.pop()
            else:
                closes.append(pos)
    return opens, closes


def crystal_op_word(word: Sequence[int], i: int, direction: str) -> Word | None:
    """Apply f_i ("lower") or e_i ("raise"); None encodes "sent to zero"."""
    if i < 1:
        raise ValueError("operator index must be at least 1")
    word = tuple(word)
    opens, closes = unmatched_brackets(word, i)
    if direction == "lower":
        if not closes:
            return None
        pos = closes[-1]
        return word[:pos] + (i + 1,) + word[pos + 1 :]
    if direction == "raise":
        if not opens:
            return None
        pos = opens[0]
        return word[:pos] + (i,) + word[pos + 1 :]
    raise ValueError(f"direction must be 'raise' or 'lower', got {direction!r}")


def crystal_op_position(word: Sequence[int], i: int, direction: str) -> int | None:
    """Index of the letter the operator would change, or None."""
    opens, closes = unmatched_brackets(word, i)
    if direction == "lower":
        return closes[-1] if closes else None
    if direction == "raise":
        return opens[0] if opens else None
    raise ValueError(f"direction must be 'raise' or 'lower', got {direction!r}")


def is_yamanouchi(word: Sequence[int]) -> bool:
    """True iff every suffix has at least as many i's as (i+1)'s, for all i."""
    counts: dict[int, int] = {}
    for x in reversed(word):
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


def word_weight(word: Sequence[int], n: int) -> tuple[int, ...]:
    """Letter multiplicity vector of length n."""
    counts = [0] * n
    for x in word:
        if not 1 <= x <= n:
            raise ValueError(f"letter {x} outside [1, {n}]")
        counts[x - 1] += 1
    return tuple(counts)


def word_crystal_component(word: Sequence[int], n: int):
    """Connected component of the word under all e_i / f_i with i < n."""
    from .graphs import CrystalGraph, build_graph

    start = tuple(word)
    word_weight(start, n)  # validates the alphabet bound
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(1, n):
                for direction in ("lower", "raise"):
                    img = crystal_op_word(w, i, direction)
                    if img is not None and img not in seen:
                        seen.add(img)
                        nxt.append(img)
        frontier = nxt
    vertices = sorted(seen)
    return build_graph(
        payloads=[list(w) for w in vertices],
        weights_a=[None] * len(vertices),
        weights_b=[word_weight(w, n) for w in vertices],
        f_edges=lambda idx: [
            (i, vertices.index(img))
            for i in range(1, n)
            if (img := crystal_op_word(vertices[idx], i, "lower")) is not None
        ],
    )
