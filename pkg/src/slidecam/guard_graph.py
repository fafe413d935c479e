"""Per-rectangle guard pieces and the weighted bipartite guard graph.

Each rectangle of the partition is fully seen by exactly one vertical and
one horizontal guarded-boundary piece.  The vertical one is found by
marching east through cells of identical vertical extent until the shared
wall is polygon boundary; the horizontal one by marching south.  The
graph has one vertex per piece (weight = length) and one edge per
rectangle, with parallel edges merged.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SeerNotUnique
from .geometry import HORIZONTAL, VERTICAL, OrthoPolygon, Rect
from .partition import RectPartition


@dataclass(frozen=True)
class SeerPair:
    rect_id: int
    vertical_seer: int
    horizontal_seer: int


@dataclass(frozen=True)
class GuardGraph:
    weights: dict[int, int]  # piece id -> piece length
    edges: tuple[tuple[int, int], ...]  # (vertical piece id, horizontal piece id)
    edge_rects: dict[tuple[int, int], tuple[int, ...]]

    @property
    def vertices(self) -> list[tuple[int, int]]:
        return sorted(self.weights.items())


class _SeerIndex:
    """Lookup tables reused across the seer searches of one partition."""

    def __init__(self, part: RectPartition):
        self.by_left = {(r.x0, r.y0, r.y1): r for r in part.rects}
        self.by_top = {(r.x0, r.x1, r.y1): r for r in part.rects}
        self.rect_id = {r: i for i, r in enumerate(part.rects)}
        self.v_pieces = [p for p in part.pieces if p.orientation == VERTICAL]
        self.h_pieces = [p for p in part.pieces if p.orientation == HORIZONTAL]

    def vertical_seer(self, rect: Rect) -> int:
        cur = rect
        while True:
            nxt = self.by_left.get((cur.x1, cur.y0, cur.y1))
            if nxt is None:
                break
            cur = nxt
        found = [
            p.id
            for p in self.v_pieces
            if p.segment.fixed == cur.x1 and p.segment.lo <= cur.y0 and p.segment.hi >= cur.y1
        ]
        if len(found) != 1:
            raise SeerNotUnique(
                f"rect {rect} has {len(found)} vertical guard pieces at x={cur.x1}"
            )
        return found[0]

    def horizontal_seer(self, rect: Rect) -> int:
        cur = rect
        while True:
            nxt = self.by_top.get((cur.x0, cur.x1, cur.y0))
            if nxt is None:
                break
            cur = nxt
        found = [
            p.id
            for p in self.h_pieces
            if p.segment.fixed == cur.y0 and p.segment.lo <= cur.x0 and p.segment.hi >= cur.x1
        ]
        if len(found) != 1:
            raise SeerNotUnique(
                f"rect {rect} has {len(found)} horizontal guard pieces at y={cur.y0}"
            )
        return found[0]


def seers(rect: Rect, P: OrthoPolygon, part: RectPartition) -> SeerPair:
    """The unique vertical and horizontal guard pieces seeing the whole rect."""
    idx = _SeerIndex(part)
    if rect not in idx.rect_id:
        raise ValueError(f"{rect} is not a cell of the partition")
    return SeerPair(idx.rect_id[rect], idx.vertical_seer(rect), idx.horizontal_seer(rect))


def build_guard_graph(P: OrthoPolygon, part: RectPartition) -> GuardGraph:
    idx = _SeerIndex(part)
    edge_rects: dict[tuple[int, int], list[int]] = {}
    for rid, rect in enumerate(part.rects):
        key = (idx.vertical_seer(rect), idx.horizontal_seer(rect))
        edge_rects.setdefault(key, []).append(rid)
    weights = {p.id: p.length for p in part.pieces}
    edges = tuple(sorted(edge_rects))
    return GuardGraph(weights, edges, {e: tuple(sorted(edge_rects[e])) for e in edges})
