"""The gl_m crystal on bitableaux via sort-by-top reading words.

Operators act directly on the reading word with a back-map from letter
position to source box; the skew decomposition is kept as a cross-check of
that streamlined route.
"""

from __future__ import annotations

import json
from typing import Sequence

from .bitableau import Bitableau, iter_bitableau_rows, weights
from .graphs import CrystalGraph, CrystalVertex, export_crystal  # noqa: F401
from .kernels import tally_yamanouchi_acontent
from .partitions import Partition, check_partition, pad, trim
from .symfunc import monomial_coefficient_d  # noqa: F401  (oracle counterpart)
from .tableaux import SkewSSYT
from .words import (
    bitableau_reading_cells,
    crystal_op_position,
    is_yamanouchi,
)


class CrystalStructureError(RuntimeError):
    """An operator produced an invalid filling; this would falsify the construction."""


class CapExceededError(RuntimeError):
    """A vertex budget was exceeded."""


def apply_reading_op(
    t: Bitableau, i: int, direction: str, method: str, change: str
) -> Bitableau | None:
    """Word-level operator applied at the letter's source box.

    change selects which coordinate of the box moves: "bottom" for the
    w/w_prime words (a gl_m operator), "top" for u/u_prime (gl_n).  None
    mirrors the word-level null; an invalid resulting filling raises
    CrystalStructureError.
    """
    word, cells = bitableau_reading_cells(t, method)
    pos = crystal_op_position(word, i, direction)
    if pos is None:
        return None
    delta = 1 if direction == "lower" else -1
    r, c = cells[pos]
    a, b = t.rows[r][c]
    pair = (a, b + delta) if change == "bottom" else (a + delta, b)
    try:
        return t.with_entry(r, c, pair)
    except ValueError as exc:
        raise CrystalStructureError(
            f"{method} operator {direction} f_{i} broke semistandardness at {(r, c)}"
        ) from exc


def crystal_op_bitableau(
    t: Bitableau, i: int, direction: str, conv: str = "w"
) -> Bitableau | None:
    """gl_m operator on the bottom entries; conv picks the w or w' word."""
    if conv not in ("w", "w_prime"):
        raise ValueError(f"unknown convention {conv!r}")
    if not 1 <= i < t.m:
        raise ValueError(f"operator index {i} outside [1, {t.m - 1}]")
    return apply_reading_op(t, i, direction, conv, "bottom")


def is_highest_weight(t: Bitableau, conv: str = "w") -> bool:
    word, _ = bitableau_reading_cells(t, conv)
    return is_yamanouchi(word)


def count_d(
    lam: Sequence[int], mu: Sequence[int], nu: Sequence[int], conv: str = "w"
) -> int:
    """Bitableaux of shape lam with a(T)=mu, b(T)=nu and Yamanouchi word."""
    lam, mu, nu = check_partition(lam), check_partition(mu), check_partition(nu)
    if sum(mu) != sum(lam) or sum(nu) != sum(lam):
        raise ValueError("all three partitions must have the same size")
    tally = tally_yamanouchi_acontent(lam, len(mu), nu, conv)
    return tally.get(mu, 0)


def count_d_table(
    lam: Sequence[int], nu: Sequence[int], n: int, conv: str = "w"
) -> dict[tuple[int, ...], int]:
    """Yamanouchi counts for every a-content at once (one enumeration pass)."""
    return tally_yamanouchi_acontent(check_partition(lam), n, nu, conv)


def monomial_expansion_sweep(k: int, conv: str = "w") -> list[tuple[Partition, Partition, Partition, int, int]]:
    """Crystal count versus character-side d for every triple of partitions of k."""
    from .partitions import enumerate_partitions

    rows = []
    for lam in enumerate_partitions(k):
        for nu in enumerate_partitions(k):
            table = count_d_table(lam, nu, k, conv)
            for mu in enumerate_partitions(k):
                crystal = table.get(pad(mu, k), 0)
                oracle = monomial_coefficient_d(lam, mu, nu)
                rows.append((lam, mu, nu, crystal, oracle))
    return rows


def skew_decomposition(t: Bitableau) -> list[SkewSSYT]:
    """One skew tableau of bottom entries per top value, ascending.

    Cells with top entry at most a form a Young diagram, so the top-entry
    classes are nested skew shapes; empty classes are omitted.
    """
    pieces: list[SkewSSYT] = []
    prev = [0] * len(t.shape)
    for a in range(1, t.n + 1):
        outer = [sum(1 for (x, _) in row if x <= a) for row in t.rows]
        rows = tuple(tuple(b for (x, b) in row if x == a) for row in t.rows)
        if any(len(r) for r in rows):
            depth = max(r + 1 for r in range(len(outer)) if outer[r] > prev[r])
            piece = SkewSSYT(
                tuple(outer[:depth]), trim(prev[:depth]), rows[:depth]
            )
            pieces.append(piece)
        prev = outer
    return pieces


def full_crystal(
    lam: Sequence[int], n: int, m: int, conv: str = "w", cap: int = 10**6
) -> CrystalGraph:
    """Graph over all of B_lam(n,m) with every gl_m operator.

    Vertex ids are ordinals after sorting canonical JSON serializations, so
    exports are byte-stable.
    """
    lam = check_partition(lam)
    tableaux = [Bitableau(lam, rows, n, m) for rows in iter_bitableau_rows(lam, n, m)]
    if len(tableaux) > cap:
        raise CapExceededError(f"{len(tableaux)} vertices exceed the cap {cap}")
    tableaux.sort(key=lambda t: json.dumps(t.to_json(), sort_keys=True))
    index = {t.rows: i for i, t in enumerate(tableaux)}
    vertices = []
    edges: dict[tuple[int, int], int] = {}
    for vid, t in enumerate(tableaux):
        a, b = weights(t)
        vertices.append(CrystalVertex(vid, t.to_json(), a, b))
        for i in range(1, m):
            image = crystal_op_bitableau(t, i, "lower", conv)
            if image is not None:
                edges[(vid, i)] = index[image.rows]
    return CrystalGraph(tuple(vertices), edges)
