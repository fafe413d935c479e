"""Independent coverage check on a refined grid.

The grid is cut at every polygon vertex coordinate and every cover
segment endpoint coordinate, so visibility is uniform across each cell:
either all of the cell is seen by a given camera or none of it.  A
vertical camera sees a cell when the cell's y-interval sits inside the
camera extent and the whole row of cells between them is interior.
Cells touching the extent only at a tip are not seen.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SegmentOutsidePolygon
from .geometry import (
    EXTERIOR,
    OrthoPolygon,
    OrthoSegment,
    Point,
    Rect,
    point_location,
    segment_in_polygon,
    slab_inside_intervals,
)


@dataclass(frozen=True)
class RefinedGrid:
    xs: tuple[int, ...]
    ys: tuple[int, ...]
    inside: tuple[tuple[bool, ...], ...]  # inside[j][i], row-major

    def cell_rect(self, i: int, j: int) -> Rect:
        return Rect(self.xs[i], self.ys[j], self.xs[i + 1], self.ys[j + 1])


@dataclass(frozen=True)
class VerifyResult:
    covered: bool
    witness: tuple[int, int] | None
    witness_rect: Rect | None
    grid: RefinedGrid


def build_grid(P: OrthoPolygon, segments=()) -> RefinedGrid:
    xs = {x for x, _ in P.vertices()}
    ys = {y for _, y in P.vertices()}
    for s in segments:
        xs.update((s.a[0], s.b[0]))
        ys.update((s.a[1], s.b[1]))
    xs_t = tuple(sorted(xs))
    ys_t = tuple(sorted(ys))
    rows = []
    for j in range(len(ys_t) - 1):
        intervals = slab_inside_intervals(P, ys_t[j], ys_t[j + 1])
        row = []
        for i in range(len(xs_t) - 1):
            row.append(any(lo <= xs_t[i] and xs_t[i + 1] <= hi for lo, hi in intervals))
        rows.append(tuple(row))
    return RefinedGrid(xs_t, ys_t, tuple(rows))


def visible_cells(seg: OrthoSegment, grid: RefinedGrid) -> set[tuple[int, int]]:
    """Cells fully seen by one camera; segment endpoints must be grid cuts."""
    seen: set[tuple[int, int]] = set()
    if seg.is_vertical:
        k = grid.xs.index(seg.fixed)
        for j in range(len(grid.ys) - 1):
            if not (seg.lo <= grid.ys[j] and grid.ys[j + 1] <= seg.hi):
                continue
            for i in range(k, len(grid.xs) - 1):
                if not grid.inside[j][i]:
                    break
                seen.add((i, j))
            for i in range(k - 1, -1, -1):
                if not grid.inside[j][i]:
                    break
                seen.add((i, j))
    else:
        k = grid.ys.index(seg.fixed)
        for i in range(len(grid.xs) - 1):
            if not (seg.lo <= grid.xs[i] and grid.xs[i + 1] <= seg.hi):
                continue
            for j in range(k, len(grid.ys) - 1):
                if not grid.inside[j][i]:
                    break
                seen.add((i, j))
            for j in range(k - 1, -1, -1):
                if not grid.inside[j][i]:
                    break
                seen.add((i, j))
    return seen


def verify_cover(P: OrthoPolygon, segments) -> VerifyResult:
    segments = tuple(segments)
    for s in segments:
        if not segment_in_polygon(s, P):
            raise SegmentOutsidePolygon(f"camera {s.a}-{s.b} leaves the polygon")
    grid = build_grid(P, segments)
    seen: set[tuple[int, int]] = set()
    for s in segments:
        seen |= visible_cells(s, grid)
    for i in range(len(grid.xs) - 1):
        for j in range(len(grid.ys) - 1):
            if grid.inside[j][i] and (i, j) not in seen:
                return VerifyResult(False, (i, j), grid.cell_rect(i, j), grid)
    return VerifyResult(True, None, None, grid)


def segment_sees_point(seg: OrthoSegment, p: Point, P: OrthoPolygon) -> bool:
    """Exact point visibility: perpendicular foot on the camera, path inside."""
    px, py = p
    if seg.is_vertical:
        if not (seg.lo <= py <= seg.hi):
            return False
        if px == seg.fixed:
            return point_location(p, P) != EXTERIOR
        return segment_in_polygon(OrthoSegment((seg.fixed, py), (px, py)), P)
    if not (seg.lo <= px <= seg.hi):
        return False
    if py == seg.fixed:
        return point_location(p, P) != EXTERIOR
    return segment_in_polygon(OrthoSegment((px, seg.fixed), (px, py)), P)
