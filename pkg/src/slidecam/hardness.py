"""Generator for the camera-count hardness construction.

A segment-hitting instance (unit-length integer horizontal segments, hit
by axis-parallel lines) is turned into an orthogonal polygon with four
L-shaped holes per unit segment.  Everything is scaled by 12 so that all
hole corners and unit midpoints are integers.  One hole per unit carries
the visibility vertex p(s), a reflex hole corner that cameras can only
see from close to the segment itself.  A 6x6 room hangs below the
bottom-left of the enclosure; its lid seg_e and right wall seg_e_prime
are the two canonical extra cameras, and its bottom-left corner is the
corner vertex that forces every cover to spend a camera on the room.

Hole offsets are frozen constants.  Their load-bearing properties, all
exercised by tests rather than assumed:
  - hole interiors avoid the columns x = 0 and 6 (mod 12) and the rows
    y = 0 (mod 12), so unit endpoint columns, midpoint columns, and unit
    rows stay traversable full-length;
  - every p(s) is blocked from below by its own hole, so the room
    cameras see no p(s) even though they sweep all hole-free columns;
  - holes of distinct units are pairwise disjoint for every non-overlap
    instance (horizontal neighbors have opposite parity).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotACover, NotAHittingSet, OverlappingUnits
from .geometry import (
    OrthoPolygon,
    OrthoSegment,
    Point,
    line_inside_runs,
    validate_polygon,
)
from .verifier import segment_sees_point, verify_cover

SCALE = 12

# Canonical L-hole: a 2x2 block of scaled cells minus the northeast cell,
# anchored at its bottom-left corner.  The single reflex corner (of the
# hole region) sits at anchor + (1, 1), which is also the rotation
# center, so the reflex corner is the same point in every orientation.
LHOLE_RING: tuple[Point, ...] = ((0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2))
LHOLE_CENTER: Point = (1, 1)

# Per-unit hole layouts: (anchor offset from the scaled unit origin,
# quarter turns of the notch: 0=NE, 1=NW, 2=SW, 3=SE).  The carrier hole
# is the one whose reflex corner is the unit's visibility vertex.
#
# Geometry the layout is built around (unit spans rel x in [0, 12]):
#   - p(s) is the carrier's reflex corner, one column outside the span;
#     the carrier's arm sits right under it, so the room cameras looking
#     up hole-free columns never see it;
#   - every notch cell opens toward column 0 or column 12, which always
#     carries a camera when the unit is hit by a vertical line, and the
#     approach corridor along the unit row is kept hole-free;
#   - even holes hug the unit row (the row-0 sweep reaches all four
#     notches), odd holes keep three rows of clearance so the unit rows
#     of even neighbors pass them untouched;
#   - cells repeat mod 12 under stacking, so the rows each hole occupies
#     stay out of the descent corridors and the seg_e_prime sight lines
#     that stacked and skipped copies of the gadget rely on.
EVEN_HOLES: tuple[tuple[Point, int], ...] = (
    ((-2, -2), 0),
    ((-2, 1), 3),
    ((12, -2), 1),
    ((12, 1), 2),
)
EVEN_CARRIER = 0
ODD_HOLES: tuple[tuple[Point, int], ...] = (
    ((-2, 4), 3),
    ((12, 4), 2),
    ((12, -5), 1),
    ((-2, -5), 0),
)
ODD_CARRIER = 1

ROOM_W = 6
ROOM_H = 6
MARGIN = 24


@dataclass(frozen=True)
class HittingInstance:
    """Unit segments [(a,b),(a+1,b)] plus the target line count k."""

    units: tuple[tuple[int, int], ...]
    k: int

    def __post_init__(self) -> None:
        units = tuple(sorted(self.units))
        for u, v in zip(units, units[1:]):
            if u == v:
                raise OverlappingUnits(f"duplicate unit segment {u}")
        if self.k < 0:
            raise ValueError(f"k must be nonnegative, got {self.k}")
        object.__setattr__(self, "units", units)

    @property
    def n(self) -> int:
        return len(self.units)


@dataclass(frozen=True)
class LHole:
    ring: tuple[Point, ...]
    reflex_corner: Point
    orientation: int  # quarter turns


@dataclass(frozen=True)
class ReductionOutput:
    polygon: OrthoPolygon
    visibility_vertices: dict[int, Point]
    corner_vertex: Point
    seg_e: OrthoSegment
    seg_e_prime: OrthoSegment
    scale: int
    instance: HittingInstance
    unit_segments: dict[int, OrthoSegment] = field(default_factory=dict)
    offset: Point = (0, 0)


def _rot(p: Point, quarter: int) -> Point:
    x, y = p
    for _ in range(quarter % 4):
        x, y = -y, x
    return (x, y)


def gen_lhole(anchor: Point, orientation: int) -> LHole:
    ax, ay = anchor
    cx, cy = LHOLE_CENTER
    ring = []
    for vx, vy in LHOLE_RING:
        rx, ry = _rot((vx - cx, vy - cy), orientation)
        ring.append((ax + cx + rx, ay + cy + ry))
    start = ring.index(min(ring))
    ring = ring[start:] + ring[:start]
    return LHole(tuple(ring), (ax + cx, ay + cy), orientation % 4)


def gen_hardness_polygon(I: HittingInstance) -> ReductionOutput:
    if I.units:
        ox = (ROOM_W + MARGIN + 6) - SCALE * min(a for a, _ in I.units)
        oy = (ROOM_H + MARGIN + 6) - SCALE * min(b for _, b in I.units)
    else:
        ox = oy = 0
    holes: list[LHole] = []
    vis: dict[int, Point] = {}
    unit_segs: dict[int, OrthoSegment] = {}
    for i, (a, b) in enumerate(I.units):
        x0, y0 = SCALE * a + ox, SCALE * b + oy
        layout, carrier = (EVEN_HOLES, EVEN_CARRIER) if a % 2 == 0 else (ODD_HOLES, ODD_CARRIER)
        for j, ((dx, dy), quarter) in enumerate(layout):
            hole = gen_lhole((x0 + dx, y0 + dy), quarter)
            holes.append(hole)
            if j == carrier:
                vis[i] = hole.reflex_corner
        unit_segs[i] = OrthoSegment((x0, y0), (x0 + SCALE, y0))
    if holes:
        w = max(x for h in holes for x, _ in h.ring) + MARGIN
        h_top = max(y for h in holes for _, y in h.ring) + MARGIN
    else:
        w = h_top = 2 * MARGIN
    outer = (
        (-2, -ROOM_H),
        (ROOM_W - 2, -ROOM_H),
        (ROOM_W - 2, 0),
        (w, 0),
        (w, h_top),
        (0, h_top),
        (0, 0),
        (-2, 0),
    )
    polygon = validate_polygon([outer] + [h.ring for h in holes])
    return ReductionOutput(
        polygon=polygon,
        visibility_vertices=vis,
        corner_vertex=(-2, -ROOM_H),
        seg_e=OrthoSegment((-2, 0), (w, 0)),
        seg_e_prime=OrthoSegment((ROOM_W - 2, -ROOM_H), (ROOM_W - 2, h_top)),
        scale=SCALE,
        instance=I,
        unit_segments=unit_segs,
        offset=(ox, oy),
    )


Line = tuple[str, int]  # ("v", x) or ("h", y), in scaled coordinates


def _unit_hit(line: Line, span: OrthoSegment) -> bool:
    orient, c = line
    if orient == "v":
        return span.lo <= c <= span.hi
    return c == span.fixed


def _clip_line(P: OrthoPolygon, line: Line) -> OrthoSegment:
    orient, c = line
    runs = line_inside_runs(P, orient, c)
    if not runs:
        raise ValueError(f"line {orient}={c} misses the polygon")
    return max(runs, key=lambda s: (s.length, -s.lo))


def lines_to_cover(lines, out: ReductionOutput) -> tuple[OrthoSegment, ...]:
    """Hitting lines (scaled coordinates) to a camera cover of the polygon.

    A vertical line strictly inside some unit's span is re-anchored to that
    unit's midpoint column before clipping; the unit is unique because
    distinct units overlap in at most an endpoint.  The extra camera C is
    the room lid seg_e unless every line is horizontal, in which case only
    the room wall seg_e_prime reaches the columns left of the enclosure.
    """
    lines = [(str(o), int(c)) for o, c in lines]
    for i, span in sorted(out.unit_segments.items()):
        if not any(_unit_hit(line, span) for line in lines):
            a, b = out.instance.units[i]
            raise NotAHittingSet(f"unit segment ({a},{b}) is hit by no line")
    anchored: list[Line] = []
    for orient, c in lines:
        if orient == "v":
            for span in out.unit_segments.values():
                if span.lo < c < span.hi:
                    c = (span.lo + span.hi) // 2
                    break
        anchored.append((orient, c))
    cover = [_clip_line(out.polygon, line) for line in anchored]
    if lines and all(o == "h" for o, _ in lines):
        cover.append(out.seg_e_prime)
    else:
        cover.append(out.seg_e)
    return tuple(sorted(set(cover)))


def cover_to_lines(cover, out: ReductionOutput) -> tuple[Line, ...]:
    """Camera cover to hitting lines (scaled coordinates), one unit at a time.

    The camera guarding the room corner never doubles as a unit's witness:
    each visibility vertex p(s) is picked up by the least camera seeing it,
    whose supporting line is snapped into the unit's span if needed.
    """
    cover = tuple(cover)
    res = verify_cover(out.polygon, cover)
    if not res.covered:
        raise NotACover(f"cell {res.witness_rect} is seen by no camera")
    corner_seers = {s for s in cover if segment_sees_point(s, out.corner_vertex, out.polygon)}
    assert corner_seers, "corner cell is covered, so some camera sees its vertex"
    lines: set[Line] = set()
    for i, p in sorted(out.visibility_vertices.items()):
        seers = sorted(s for s in cover if segment_sees_point(s, p, out.polygon))
        assert seers, "p(s) cell is covered, so some camera sees it"
        sigma = seers[0]
        assert sigma not in corner_seers, "room cameras cannot reach any p(s)"
        span = out.unit_segments[i]
        if sigma.is_horizontal:
            lines.add(("h", span.fixed))
        elif span.lo <= sigma.fixed <= span.hi:
            lines.add(("v", sigma.fixed))
        else:
            nearest = span.lo if abs(sigma.fixed - span.lo) <= abs(sigma.fixed - span.hi) else span.hi
            lines.add(("v", nearest))
    return tuple(sorted(lines))
