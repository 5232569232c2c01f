"""Search machinery for candidate top crystal structures.

The bottom gl_2 structure on B_lam(2,2) is known; a commuting top structure
is only partially determined.  Completions are enumerated by arranging the
bottom components into gl_2 strings of the correct lengths; every candidate
is then re-validated with the string criterion and an explicit commutation
check, so the search logic never has the final word.

Also here: the top operators on one-row and one-column bitableaux obtained
from the u / u' reading words, which transport through RSK and Burge
insertion, and the fixed-reading-order gl_3 candidate on shape (2,1).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .bitableau import Bitableau, iter_bitableau_rows, weights
from .crystal import CrystalStructureError, full_crystal
from .graphs import CrystalGraph, CrystalVertex
from .partitions import Partition, trim
from .tableaux import ssyt_from_reading_word
from .words import (
    bitableau_reading_cells,
    bitableau_reading_word,
    crystal_op_position,
    crystal_op_word,
    is_yamanouchi,
)

Weight = tuple[int, ...]


@dataclass
class PartialOperator:
    """A partial injection of vertex ids acting on the first-coordinate weights."""

    images: dict[int, int]
    index: int = 1
    role: str = "top"

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.images.items())


@dataclass
class SeminormalReport:
    valid: bool
    violations: list[tuple[int, str]] = field(default_factory=list)


def is_valid_gl2_structure(
    images: Mapping[int, int], weight_a: Mapping[int, Weight]
) -> SeminormalReport:
    """String criterion for a rank-one structure.

    The functional graph must be a disjoint union of directed paths, and on
    every vertex the steps remaining down its string minus the steps taken
    from the top must equal a_1 - a_2.
    """
    violations: list[tuple[int, str]] = []
    preimage: dict[int, int] = {}
    for src, dst in images.items():
        if dst in preimage:
            violations.append((dst, "two f-edges share a target"))
        preimage[dst] = src
        a = weight_a[src]
        b = weight_a[dst]
        if (a[0] - 1, a[1] + 1) != tuple(b):
            violations.append((src, f"edge breaks the weight shift: {a} -> {b}"))
    if violations:
        return SeminormalReport(False, violations)
    starts = [v for v in weight_a if v not in preimage]
    seen: set[int] = set()
    for start in starts:
        path = [start]
        seen.add(start)
        cur = start
        while cur in images:
            cur = images[cur]
            if cur in seen:
                violations.append((cur, "cycle reached from a path start"))
                return SeminormalReport(False, violations)
            seen.add(cur)
            path.append(cur)
        length = len(path)
        for depth, v in enumerate(path):
            a1, a2 = weight_a[v]
            if a1 - a2 != (length - 1 - depth) - depth:
                violations.append(
                    (v, f"string of length {length} misplaced at depth {depth}")
                )
    for v in weight_a:
        if v not in seen:
            violations.append((v, "vertex lies on a cycle"))
    return SeminormalReport(not violations, violations)


def commutes_with_bottom(
    f_top: Mapping[int, int] | PartialOperator, g: CrystalGraph
) -> tuple[bool, tuple[int, int, str] | None]:
    """Null-absorbing commutation of the top operator with every bottom f_i/e_i.

    Returns (True, None) or (False, (vertex, bottom index, which side)).
    """
    images = f_top.images if isinstance(f_top, PartialOperator) else f_top
    indices = g.operator_indices() or (1,)
    for v in (vert.id for vert in g.vertices):
        for i in indices:
            down = g.f(v, i)
            lhs = images.get(down) if down is not None else None
            mid = images.get(v)
            rhs = g.f(mid, i) if mid is not None else None
            if lhs != rhs:
                return False, (v, i, "lowering")
            up = g.e(v, i)
            lhs = images.get(up) if up is not None else None
            rhs = g.e(mid, i) if mid is not None else None
            if lhs != rhs:
                return False, (v, i, "raising")
    return True, None


# --- completions of the gl_2 x gl_2 examples --------------------------------


def _bottom_chains(g: CrystalGraph) -> list[tuple[int, ...]]:
    """f_1-strings of the bottom crystal, each listed from its highest vertex."""
    chains = []
    for head in sorted(v.id for v in g.vertices if g.e(v.id, 1) is None):
        chain = [head]
        while (nxt := g.f(chain[-1], 1)) is not None:
            chain.append(nxt)
        chains.append(tuple(chain))
    return chains


def _arrangements(
    chains_by_level: dict[int, list[int]], levels: list[int]
) -> Iterable[list[tuple[int, int]]]:
    """All ways to stack chains into top strings, as (parent chain, child chain).

    Levels are a_1 - a_2 values, processed downward; every open string must
    pick up exactly one chain per level until it closes at the mirror level.
    """

    def rec(idx: int, open_strings: list[tuple[int, int]]):
        # open_strings: (chain index, remaining levels to fill)
        if idx == len(levels):
            if not open_strings:
                yield []
            return
        level = levels[idx]
        comps = chains_by_level.get(level, [])
        if len(comps) < len(open_strings):
            return
        for assignment in itertools.permutations(comps, len(open_strings)):
            chosen = set(assignment)
            new_starts = [c for c in comps if c not in chosen]
            if new_starts and level < 0:
                continue  # a string cannot start below the mirror axis
            pairs = [
                (parent, child) for (parent, _), child in zip(open_strings, assignment)
            ]
            nxt = [
                (child, left - 1)
                for (_, left), child in zip(open_strings, assignment)
                if left - 1 > 0
            ]
            nxt.extend((c, level) for c in new_starts if level > 0)
            for rest in rec(idx + 1, nxt):
                yield pairs + rest

    yield from rec(0, [])


def enumerate_completions(
    lam: Sequence[int],
    n: int = 2,
    m: int = 2,
    conv: str = "w",
    cap: int = 100_000,
) -> tuple[CrystalGraph, list[PartialOperator]]:
    """All total top structures commuting with the bottom crystal.

    Bottom components of equal type (same chain of b-weights) are stacked
    into gl_2 strings in every level-respecting way; the operator between
    consecutive chains is the unique b-weight-preserving isomorphism.  Every
    result is re-validated before it is returned.
    """
    if n != 2 or m != 2:
        raise ValueError("completion search is implemented for n = m = 2")
    g = full_crystal(lam, n, m, conv=conv, cap=cap)
    weight_a = {v.id: v.weight_a for v in g.vertices}
    chains = _bottom_chains(g)
    for chain in chains:
        if len({weight_a[v] for v in chain}) != 1:
            raise CrystalStructureError("bottom chain does not preserve the a-weight")

    by_type: dict[tuple[Weight, ...], dict[int, list[int]]] = {}
    for ci, chain in enumerate(chains):
        btype = tuple(g.vertices[v].weight_b for v in chain)
        a1, a2 = weight_a[chain[0]]
        by_type.setdefault(btype, {}).setdefault(a1 - a2, []).append(ci)

    group_options: list[list[list[tuple[int, int]]]] = []
    for btype, by_level in sorted(by_type.items()):
        levels = sorted(by_level, reverse=True)
        full_levels = list(range(levels[0], min(levels) - 1, -2))
        options = list(_arrangements(by_level, full_levels))
        if not options:
            raise CrystalStructureError(
                f"no valid stacking of bottom components of type {btype}"
            )
        group_options.append(options)

    completions: list[PartialOperator] = []
    for combo in itertools.product(*group_options):
        images: dict[int, int] = {}
        for pairs in combo:
            for parent, child in pairs:
                for src, dst in zip(chains[parent], chains[child]):
                    images[src] = dst
        report = is_valid_gl2_structure(images, weight_a)
        ok, witness = commutes_with_bottom(images, g)
        if not report.valid or not ok:
            raise CrystalStructureError(
                f"search produced an invalid candidate: {report.violations or witness}"
            )
        completions.append(PartialOperator(dict(sorted(images.items()))))
    completions.sort(key=lambda op: sorted(op.images.items()))
    # exact deduplication as labeled structures
    unique: list[PartialOperator] = []
    seen: set[frozenset] = set()
    for op in completions:
        key = op.edge_set()
        if key not in seen:
            seen.add(key)
            unique.append(op)
    return g, unique


@dataclass
class SkeletonResult:
    graph: CrystalGraph
    forced: PartialOperator
    free_vertices: tuple[int, ...]
    free_slots: dict[tuple[Weight, Weight], tuple[int, ...]]
    free_segments: dict[Weight, tuple[tuple[int, ...], ...]]
    completion_count: int

    @property
    def forced_vertex_count(self) -> int:
        return len(self.graph.vertices) - len(self.free_vertices)


def skeleton(
    lam: Sequence[int],
    n: int = 2,
    m: int = 2,
    conv: str = "w",
    cap: int = 100_000,
) -> SkeletonResult:
    """Forced top edges (common to every completion) and the free slots.

    A vertex is free when its slot in the string structure (string length
    and depth from the top) varies across completions; free vertices are
    grouped by (a,b)-weight, free bottom chains by a-weight.
    """
    g, completions = enumerate_completions(lam, n, m, conv, cap)
    forced_edges = set(completions[0].edge_set())
    for op in completions[1:]:
        forced_edges &= op.edge_set()
    # a vertex is free when its slot in the string structure (string length,
    # depth from the top) varies across completions
    positions: dict[int, set[tuple[int, int]]] = {v.id: set() for v in g.vertices}
    for op in completions:
        targets = set(op.images.values())
        for head in (v.id for v in g.vertices if v.id not in targets):
            path = [head]
            while (nxt := op.images.get(path[-1])) is not None:
                path.append(nxt)
            for depth, v in enumerate(path):
                positions[v].add((len(path), depth))
    free = {v for v, pos in positions.items() if len(pos) > 1}
    slots: dict[tuple[Weight, Weight], list[int]] = {}
    for v in sorted(free):
        vert = g.vertices[v]
        slots.setdefault((vert.weight_a, vert.weight_b), []).append(v)
    segments: dict[Weight, list[tuple[int, ...]]] = {}
    for chain in _bottom_chains(g):
        if any(v in free for v in chain):
            segments.setdefault(g.vertices[chain[0]].weight_a, []).append(chain)
    return SkeletonResult(
        graph=g,
        forced=PartialOperator(dict(sorted(forced_edges))),
        free_vertices=tuple(sorted(free)),
        free_slots={key: tuple(ids) for key, ids in sorted(slots.items())},
        free_segments={key: tuple(val) for key, val in sorted(segments.items())},
        completion_count=len(completions),
    )


def highest_weight_census(
    f_top: Mapping[int, int] | PartialOperator, g: CrystalGraph
) -> dict[tuple[Partition, Partition], int]:
    """Doubly-highest-weight vertices per (a,b) weight pair."""
    images = f_top.images if isinstance(f_top, PartialOperator) else f_top
    has_top_preimage = set(images.values())
    census: dict[tuple[Partition, Partition], int] = {}
    for v in g.vertices:
        if v.id in has_top_preimage:
            continue
        if any(g.e(v.id, i) is not None for i in g.operator_indices()):
            continue
        key = (trim(v.weight_a), trim(v.weight_b))
        census[key] = census.get(key, 0) + 1
    return census


# --- RSK / bRSK transported top operators ------------------------------------


def _top_flip_resorted(
    t: Bitableau, method: str, j: int, direction: str
) -> Bitableau | None:
    """Word operator on a u/u' word, acting by top flip plus re-sorting.

    A one-row (or one-column) bitableau is just a sorted multiset of pairs,
    so after changing the source box's top entry the pairs are re-sorted;
    this is the action transported through RSK (resp. Burge insertion),
    which the intertwining tests pin down.  An invalid result would falsify
    the transported-crystal claims and raises.
    """
    word, cells = bitableau_reading_cells(t, method)
    pos = crystal_op_position(word, j, direction)
    if pos is None:
        return None
    delta = 1 if direction == "lower" else -1
    flat = [pair for row in t.rows for pair in row]
    one_row = len(t.shape) == 1
    r, c = cells[pos]
    idx = c if one_row else r
    a, b = flat[idx]
    flat[idx] = (a + delta, b)
    flat.sort()
    rows = (tuple(flat),) if one_row else tuple((pair,) for pair in flat)
    try:
        return Bitableau(t.shape, rows, t.n, t.m)
    except ValueError as exc:
        raise CrystalStructureError(
            f"{method} operator {direction} f_{j} has no valid re-sorted image"
        ) from exc


def row_top_operator(t: Bitableau, j: int, direction: str) -> Bitableau | None:
    """gl_n operator on a one-row bitableau via the u reading word."""
    if len(t.shape) != 1:
        raise ValueError("row operator requires a one-row shape")
    if not 1 <= j < t.n:
        raise ValueError(f"operator index {j} outside [1, {t.n - 1}]")
    return _top_flip_resorted(t, "u", j, direction)


def column_top_operator(t: Bitableau, j: int, direction: str) -> Bitableau | None:
    """gl_n operator on a one-column bitableau via the u' reading word."""
    if any(length != 1 for length in t.shape):
        raise ValueError("column operator requires a one-column shape")
    if not 1 <= j < t.n:
        raise ValueError(f"operator index {j} outside [1, {t.n - 1}]")
    return _top_flip_resorted(t, "u_prime", j, direction)


# --- the fixed-reading-order gl_3 candidate on shape (2,1) -------------------

_EAST_ORDER = ((1, 0), (0, 1), (0, 0))
_SOUTH_ORDER = ((0, 0), (1, 0), (0, 1))
_CORNER_SOUTH_FIRST = ((1, 0), (0, 0), (0, 1))
_CORNER_EAST_FIRST = ((0, 1), (0, 0), (1, 0))


def _shape21_reading_order(t: Bitableau, corner_first: str) -> tuple[tuple[int, int], ...]:
    bottoms = (t.rows[0][0][1], t.rows[0][1][1], t.rows[1][0][1])
    if bottoms == (1, 2, 1):
        return _EAST_ORDER
    if bottoms == (1, 1, 2):
        return _SOUTH_ORDER
    if bottoms == (2, 1, 1):
        return _CORNER_SOUTH_FIRST if corner_first == "south" else _CORNER_EAST_FIRST
    raise ValueError(f"unexpected bottom arrangement {bottoms}")


def shape21_candidate_crystal(corner_first: str = "south") -> CrystalGraph:
    """Candidate gl_3 crystal on shape (2,1) bitableaux with b-content (2,1).

    Vertices are the Yamanouchi-w(T) bitableaux over [3] x [2] with two
    bottom ones and one bottom two.  The reading order of the top entries
    depends only on the bottom arrangement; in the corner arrangement the
    corner is read second and corner_first ("south" or "east") picks which
    of the other two boxes is read first.  Operators act on the reading
    word, and the image is the unique vertex carrying the new word.
    """
    if corner_first not in ("south", "east"):
        raise ValueError("corner_first must be 'south' or 'east'")
    lam = (2, 1)
    keep: list[Bitableau] = []
    for rows in iter_bitableau_rows(lam, 3, 2):
        t = Bitableau(lam, rows, 3, 2)
        _, b = weights(t)
        if b == (2, 1) and is_yamanouchi(bitableau_reading_word(t, "w")):
            keep.append(t)
    keep.sort(key=lambda t: json.dumps(t.to_json(), sort_keys=True))

    words: dict[int, tuple[int, ...]] = {}
    lookup: dict[tuple[int, ...], int] = {}
    for vid, t in enumerate(keep):
        order = _shape21_reading_order(t, corner_first)
        vword = tuple(t.rows[r][c][0] for r, c in order)
        if ssyt_from_reading_word(vword) is None:
            raise CrystalStructureError(
                f"reading word {vword} is not the row word of a semistandard tableau"
            )
        if vword in lookup:
            raise CrystalStructureError(f"reading word {vword} is not injective")
        words[vid] = vword
        lookup[vword] = vid

    graph_vertices = []
    edges: dict[tuple[int, int], int] = {}
    for vid, t in enumerate(keep):
        a, b = weights(t)
        graph_vertices.append(CrystalVertex(vid, t.to_json(), a, b))
        for i in (1, 2):
            image_word = crystal_op_word(words[vid], i, "lower")
            if image_word is None:
                continue
            target = lookup.get(image_word)
            if target is not None:
                edges[(vid, i)] = target
    return CrystalGraph(tuple(graph_vertices), edges)
