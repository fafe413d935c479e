"""Reflex-chord partition of a rectilinear polygon into rectangles.

Both edges incident to a reflex vertex are extended inward, through the
vertex, until they first meet the boundary.  The extended edges cut the
polygon into rectangular cells.  Boundary edges whose interior side is
west (vertical) or north (horizontal) are the guarded edges; splitting
them at chord endpoints yields the pieces that serve as candidate camera
trajectories everywhere else in the package.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonRectangularCell
from .geometry import (
    HORIZONTAL,
    VERTICAL,
    OrthoPolygon,
    OrthoSegment,
    Point,
    Rect,
    column_inside_intervals,
    ring_edges,
)

ORIGIN_REFLEX = "reflex-extension"
ORIGIN_EDGE = "original-edge"


@dataclass(frozen=True, order=True)
class Chord:
    segment: OrthoSegment
    origin: str


@dataclass(frozen=True, order=True)
class BoundaryPiece:
    """One guarded-boundary fragment; the interior of the polygon lies to the
    west of vertical pieces and to the north of horizontal ones."""

    id: int
    segment: OrthoSegment

    @property
    def orientation(self) -> str:
        return self.segment.orientation

    @property
    def length(self) -> int:
        return self.segment.length


@dataclass(frozen=True)
class RectPartition:
    chords: tuple[Chord, ...]
    rects: tuple[Rect, ...]
    pieces: tuple[BoundaryPiece, ...]

    def piece(self, pid: int) -> BoundaryPiece:
        return self.pieces[pid]


def reflex_vertices(P: OrthoPolygon) -> list[Point]:
    """All vertices with interior angle 3*pi/2, hole vertices included."""
    out = []
    for _, ring in P.rings():
        n = len(ring)
        for i in range(n):
            prev, cur, nxt = ring[i - 1], ring[i], ring[(i + 1) % n]
            d1x, d1y = cur[0] - prev[0], cur[1] - prev[1]
            d2x, d2y = nxt[0] - cur[0], nxt[1] - cur[1]
            # interior is on the left, so a right turn marks a reflex vertex
            if d1x * d2y - d1y * d2x < 0:
                out.append(cur)
    return sorted(out)


def _ray_first_hit(P: OrthoPolygon, v: Point, d: tuple[int, int]) -> Point:
    """First boundary point strictly beyond v along the axis direction d."""
    vx, vy = v
    best = None
    for p, q, _ in P.directed_edges():
        if p[0] == q[0]:  # vertical edge
            ex, (elo, ehi) = p[0], sorted((p[1], q[1]))
            if d[0] == -1 and ex < vx and elo <= vy <= ehi:
                cand = ex
            elif d[0] == 1 and ex > vx and elo <= vy <= ehi:
                cand = ex
            elif d[0] == 0:
                continue
            else:
                continue
            if best is None or abs(cand - vx) < abs(best - vx):
                best = cand
        else:  # horizontal edge
            ey, (elo, ehi) = p[1], sorted((p[0], q[0]))
            if d[1] == -1 and ey < vy and elo <= vx <= ehi:
                cand = ey
            elif d[1] == 1 and ey > vy and elo <= vx <= ehi:
                cand = ey
            elif d[1] == 0:
                # collinear horizontal edge ahead of a horizontal ray
                if ey != vy:
                    continue
                if d[0] == -1 and ehi < vx:
                    cand_x = ehi
                elif d[0] == 1 and elo > vx:
                    cand_x = elo
                else:
                    continue
                if best is None or abs(cand_x - vx) < abs(best - vx):
                    best = cand_x
                continue
            else:
                continue
            if best is None or abs(cand - vy) < abs(best - vy):
                best = cand
    assert best is not None, "extension ray escaped the polygon"
    if d[0] != 0:
        return (best, vy)
    return (vx, best)


def compute_chords(P: OrthoPolygon) -> list[Chord]:
    """Extended reflex edges plus original edges with two non-reflex endpoints.

    A reflex vertex contributes one chord per incident edge: the union of
    the edge and its inward extension up to the first boundary contact.
    Chords that share a positive-length stretch (an edge extended from
    both of its reflex endpoints) are merged into one.
    """
    reflex = set(reflex_vertices(P))
    intervals: dict[tuple[str, int], list[tuple[int, int]]] = {}

    def add_interval(orient: str, fixed: int, lo: int, hi: int) -> None:
        intervals.setdefault((orient, fixed), []).append((lo, hi))

    for _, ring in P.rings():
        n = len(ring)
        for i in range(n):
            v = ring[i]
            if v not in reflex:
                continue
            for far in (ring[i - 1], ring[(i + 1) % n]):
                dx = v[0] - far[0]
                dy = v[1] - far[1]
                d = (
                    0 if dx == 0 else (1 if dx > 0 else -1),
                    0 if dy == 0 else (1 if dy > 0 else -1),
                )
                stop = _ray_first_hit(P, v, d)
                if d[0] != 0:
                    lo, hi = sorted((far[0], stop[0]))
                    add_interval(HORIZONTAL, v[1], lo, hi)
                else:
                    lo, hi = sorted((far[1], stop[1]))
                    add_interval(VERTICAL, v[0], lo, hi)

    chords: list[Chord] = []
    for (orient, fixed), ivals in intervals.items():
        ivals.sort()
        merged = [list(ivals[0])]
        for lo, hi in ivals[1:]:
            if lo < merged[-1][1]:  # positive overlap only; touching stays split
                merged[-1][1] = max(merged[-1][1], hi)
            else:
                merged.append([lo, hi])
        for lo, hi in merged:
            if orient == VERTICAL:
                seg = OrthoSegment((fixed, lo), (fixed, hi))
            else:
                seg = OrthoSegment((lo, fixed), (hi, fixed))
            chords.append(Chord(seg, ORIGIN_REFLEX))

    for _, ring in P.rings():
        n = len(ring)
        for i in range(n):
            p, q = ring[i], ring[(i + 1) % n]
            if p not in reflex and q not in reflex:
                chords.append(Chord(OrthoSegment(p, q), ORIGIN_EDGE))
    return sorted(chords)


def _merged_walls(segments: list[OrthoSegment], vertical: bool) -> dict[int, list[tuple[int, int]]]:
    """Merge collinear wall segments (touching included) into maximal intervals."""
    by_line: dict[int, list[tuple[int, int]]] = {}
    for s in segments:
        if s.is_vertical != vertical:
            continue
        by_line.setdefault(s.fixed, []).append((s.lo, s.hi))
    for line, ivals in by_line.items():
        ivals.sort()
        merged = [list(ivals[0])]
        for lo, hi in ivals[1:]:
            if lo <= merged[-1][1]:
                merged[-1][1] = max(merged[-1][1], hi)
            else:
                merged.append([lo, hi])
        by_line[line] = [(lo, hi) for lo, hi in merged]
    return by_line


def compute_rectangles(P: OrthoPolygon, chords: list[Chord]) -> list[Rect]:
    """Cells of the subdivision of P induced by the chords, via a slab sweep.

    Walls are the boundary edges together with the reflex-extension chords.
    The sweep moves left to right over wall x-coordinates; cells of equal
    vertical extent merge across a slab boundary unless a vertical wall
    separates them.
    """
    walls = [c.segment for c in chords if c.origin == ORIGIN_REFLEX]
    walls += P.edge_segments()
    v_walls = _merged_walls(walls, vertical=True)
    h_walls = _merged_walls(walls, vertical=False)

    xs = sorted(v_walls)
    rects: list[Rect] = []
    active: dict[tuple[int, int], int] = {}  # (ylo, yhi) -> slab x where the cell opened
    for i, x in enumerate(xs):
        if i + 1 < len(xs):
            nxt = xs[i + 1]
            cells = []
            for ilo, ihi in column_inside_intervals(P, x, nxt):
                cut = [ilo]
                for wy, spans in h_walls.items():
                    if ilo < wy < ihi and any(lo <= x and hi >= nxt for lo, hi in spans):
                        cut.append(wy)
                cut.append(ihi)
                cut.sort()
                cells.extend(zip(cut, cut[1:]))
            new_cells = set(cells)
        else:
            new_cells = set()

        barriers = v_walls.get(x, [])
        for cell in sorted(active):
            ylo, yhi = cell
            blocked = False
            for blo, bhi in barriers:
                if blo <= ylo and bhi >= yhi:
                    blocked = True
                elif min(bhi, yhi) > max(blo, ylo):
                    raise NonRectangularCell(
                        f"wall at x={x} spans [{blo},{bhi}] across cell y=[{ylo},{yhi}]"
                    )
            if cell in new_cells and not blocked:
                continue  # cell continues through this slab boundary
            rects.append(Rect(active.pop(cell), ylo, x, yhi))
        for cell in new_cells:
            if cell not in active:
                active[cell] = x
    assert not active, "sweep finished with open cells"
    return sorted(rects)


def boundary_pieces(P: OrthoPolygon, chords: list[Chord]) -> list[BoundaryPiece]:
    """Guarded boundary edges split at chord endpoints.

    A vertical edge traversed northward (interior to the west) or a
    horizontal edge traversed eastward (interior to the north) is guarded;
    every chord endpoint strictly inside such an edge splits it.
    """
    split_pts = set()
    for c in chords:
        split_pts.add(c.segment.a)
        split_pts.add(c.segment.b)

    pieces: list[OrthoSegment] = []
    for p, q, _ in P.directed_edges():
        if p[0] == q[0] and q[1] > p[1]:  # northward vertical edge
            x, lo, hi = p[0], p[1], q[1]
            cuts = sorted({lo, hi} | {sy for (sx, sy) in split_pts if sx == x and lo < sy < hi})
            pieces += [OrthoSegment((x, a), (x, b)) for a, b in zip(cuts, cuts[1:])]
        elif p[1] == q[1] and q[0] > p[0]:  # eastward horizontal edge
            y, lo, hi = p[1], p[0], q[0]
            cuts = sorted({lo, hi} | {sx for (sx, sy) in split_pts if sy == y and lo < sx < hi})
            pieces += [OrthoSegment((a, y), (b, y)) for a, b in zip(cuts, cuts[1:])]
    pieces.sort(key=lambda s: (s.orientation, s.fixed, s.lo))
    return [BoundaryPiece(i, s) for i, s in enumerate(pieces)]


def compute_partition(P: OrthoPolygon) -> RectPartition:
    chords = compute_chords(P)
    rects = compute_rectangles(P, chords)
    pieces = boundary_pieces(P, chords)
    return RectPartition(tuple(chords), tuple(rects), tuple(pieces))
