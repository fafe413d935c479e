"""Exact minimum-length sliding cameras through the cover pipeline."""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import OrthoPolygon, OrthoSegment
from .guard_graph import GuardGraph, build_guard_graph
from .partition import RectPartition, compute_partition
from .vertex_cover import min_weight_vertex_cover


@dataclass(frozen=True)
class Cover:
    segments: tuple[OrthoSegment, ...]
    total_length: int
    piece_ids: tuple[int, ...]


def cover_from_vc(part: RectPartition, chosen: tuple[int, ...]) -> Cover:
    segments = tuple(part.piece(i).segment for i in chosen)
    return Cover(segments, sum(s.length for s in segments), tuple(chosen))


def solve_mlsc(P: OrthoPolygon) -> tuple[Cover, RectPartition, GuardGraph]:
    part = compute_partition(P)
    graph = build_guard_graph(P, part)
    sol = min_weight_vertex_cover(graph.weights, graph.edges)
    cover = cover_from_vc(part, sol.chosen)
    assert cover.total_length == sol.weight
    return cover, part, graph


def merge_collinear_cover(segments) -> tuple[OrthoSegment, ...]:
    """Cosmetic join of touching collinear segments; total length is preserved
    because guard pieces overlap at most at endpoints."""
    by_line: dict[tuple[str, int], list[OrthoSegment]] = {}
    for s in segments:
        by_line.setdefault((s.orientation, s.fixed), []).append(s)
    out: list[OrthoSegment] = []
    for (orient, fixed), group in sorted(by_line.items()):
        group.sort()
        lo, hi = group[0].lo, group[0].hi
        for s in group[1:]:
            if s.lo <= hi:
                hi = max(hi, s.hi)
            else:
                out.append(_make(orient, fixed, lo, hi))
                lo, hi = s.lo, s.hi
        out.append(_make(orient, fixed, lo, hi))
    return tuple(sorted(out))


def _make(orient: str, fixed: int, lo: int, hi: int) -> OrthoSegment:
    if orient == "v":
        return OrthoSegment((fixed, lo), (fixed, hi))
    return OrthoSegment((lo, fixed), (hi, fixed))
