"""Exact integer rectilinear geometry: polygons with holes and membership tests.

All coordinates are integers and every predicate is exact; there is no
floating point anywhere.  A polygon is a closed point set: its boundary,
including hole boundaries, belongs to it.

Rings are stored in a canonical orientation with the interior always on
the left of the traversal direction: the outer ring runs counter-clockwise
and hole rings run clockwise.  Several modules rely on this to classify
boundary edges by which side the interior is on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    HoleOutsideOuter,
    NonRectilinear,
    SelfIntersecting,
    TooFewVertices,
    TouchingRings,
)

Point = tuple[int, int]

HORIZONTAL = "h"
VERTICAL = "v"

INTERIOR = "interior"
BOUNDARY = "boundary"
EXTERIOR = "exterior"


@dataclass(frozen=True, order=True)
class OrthoSegment:
    """Axis-parallel segment with integer endpoints, normalized so a <= b."""

    a: Point
    b: Point

    def __post_init__(self) -> None:
        ax, ay = self.a
        bx, by = self.b
        if (ax == bx) == (ay == by):
            raise ValueError(f"degenerate or skew segment {self.a}-{self.b}")
        if self.a > self.b:
            object.__setattr__(self, "a", (bx, by))
            object.__setattr__(self, "b", (ax, ay))

    @property
    def is_vertical(self) -> bool:
        return self.a[0] == self.b[0]

    @property
    def is_horizontal(self) -> bool:
        return self.a[1] == self.b[1]

    @property
    def orientation(self) -> str:
        return VERTICAL if self.is_vertical else HORIZONTAL

    @property
    def fixed(self) -> int:
        """The coordinate both endpoints share: x for vertical, y for horizontal."""
        return self.a[0] if self.is_vertical else self.a[1]

    @property
    def lo(self) -> int:
        """Smaller value of the varying coordinate."""
        return self.a[1] if self.is_vertical else self.a[0]

    @property
    def hi(self) -> int:
        """Larger value of the varying coordinate."""
        return self.b[1] if self.is_vertical else self.b[0]

    @property
    def length(self) -> int:
        return self.hi - self.lo

    def contains_point(self, p: Point) -> bool:
        if self.is_vertical:
            return p[0] == self.fixed and self.lo <= p[1] <= self.hi
        return p[1] == self.fixed and self.lo <= p[0] <= self.hi

    def intersects(self, other: "OrthoSegment") -> bool:
        """Closed intersection test between two axis-parallel segments."""
        if self.orientation == other.orientation:
            if self.fixed != other.fixed:
                return False
            return self.lo <= other.hi and other.lo <= self.hi
        v, h = (self, other) if self.is_vertical else (other, self)
        return h.lo <= v.fixed <= h.hi and v.lo <= h.fixed <= v.hi

    def translate(self, dx: int, dy: int) -> "OrthoSegment":
        return OrthoSegment(
            (self.a[0] + dx, self.a[1] + dy), (self.b[0] + dx, self.b[1] + dy)
        )

    def scale(self, c: int) -> "OrthoSegment":
        if c <= 0:
            raise ValueError("scale factor must be positive")
        return OrthoSegment(
            (self.a[0] * c, self.a[1] * c), (self.b[0] * c, self.b[1] * c)
        )


@dataclass(frozen=True, order=True)
class Rect:
    """Closed axis-aligned rectangle with positive width and height."""

    x0: int
    y0: int
    x1: int
    y1: int

    def __post_init__(self) -> None:
        if self.x0 >= self.x1 or self.y0 >= self.y1:
            raise ValueError(f"empty rectangle [{self.x0},{self.x1}]x[{self.y0},{self.y1}]")

    @property
    def width(self) -> int:
        return self.x1 - self.x0

    @property
    def height(self) -> int:
        return self.y1 - self.y0

    @property
    def area(self) -> int:
        return self.width * self.height


def ring_edges(ring: Sequence[Point]) -> Iterator[tuple[Point, Point]]:
    """Consecutive vertex pairs of a ring, including the closing edge."""
    n = len(ring)
    for i in range(n):
        yield ring[i], ring[(i + 1) % n]


def signed_area2(ring: Sequence[Point]) -> int:
    """Twice the signed shoelace area; positive for counter-clockwise rings."""
    total = 0
    for (x0, y0), (x1, y1) in ring_edges(ring):
        total += x0 * y1 - x1 * y0
    return total


@dataclass(frozen=True)
class OrthoPolygon:
    """Validated rectilinear polygon with holes.

    Construct through validate_polygon, which normalizes orientation and
    merges collinear vertices.  Instances are immutable and hashable.
    """

    outer: tuple[Point, ...]
    holes: tuple[tuple[Point, ...], ...] = ()

    def rings(self) -> Iterator[tuple[int, tuple[Point, ...]]]:
        yield 0, self.outer
        for i, h in enumerate(self.holes, start=1):
            yield i, h

    def directed_edges(self) -> Iterator[tuple[Point, Point, int]]:
        """All edges in storage order; the interior is on the left of p -> q."""
        for ri, ring in self.rings():
            for p, q in ring_edges(ring):
                yield p, q, ri

    def edge_segments(self) -> list[OrthoSegment]:
        return [OrthoSegment(p, q) for p, q, _ in self.directed_edges()]

    def vertices(self) -> Iterator[Point]:
        for _, ring in self.rings():
            yield from ring

    @property
    def n_vertices(self) -> int:
        return len(self.outer) + sum(len(h) for h in self.holes)

    def bbox(self) -> Rect:
        xs = [p[0] for p in self.outer]
        ys = [p[1] for p in self.outer]
        return Rect(min(xs), min(ys), max(xs), max(ys))

    def area(self) -> int:
        total2 = sum(signed_area2(ring) for _, ring in self.rings())
        assert total2 > 0 and total2 % 2 == 0
        return total2 // 2

    def translate(self, dx: int, dy: int) -> "OrthoPolygon":
        move = lambda ring: tuple((x + dx, y + dy) for x, y in ring)
        return OrthoPolygon(move(self.outer), tuple(move(h) for h in self.holes))

    def scale(self, c: int) -> "OrthoPolygon":
        if c <= 0:
            raise ValueError("scale factor must be positive")
        grow = lambda ring: tuple((x * c, y * c) for x, y in ring)
        return OrthoPolygon(grow(self.outer), tuple(grow(h) for h in self.holes))


def _step_dir(p: Point, q: Point) -> tuple[int, int]:
    dx, dy = q[0] - p[0], q[1] - p[1]
    return (0 if dx == 0 else (1 if dx > 0 else -1), 0 if dy == 0 else (1 if dy > 0 else -1))


def _normalize_ring(raw: Sequence[Sequence[int]], idx: int) -> list[Point]:
    pts: list[Point] = [(int(x), int(y)) for x, y in raw]
    out: list[Point] = []
    for p in pts:
        if not out or p != out[-1]:
            out.append(p)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    if len(out) < 3:
        raise TooFewVertices(f"ring {idx} has only {len(out)} distinct vertices")
    for p, q in ring_edges(out):
        if p[0] != q[0] and p[1] != q[1]:
            raise NonRectilinear(f"ring {idx}: edge {p} -> {q} is not axis-parallel")
    # Merge straight-through vertices; reject zero-width spikes.
    changed = True
    while changed:
        changed = False
        n = len(out)
        for i in range(n):
            prev, cur, nxt = out[i - 1], out[i], out[(i + 1) % n]
            d1, d2 = _step_dir(prev, cur), _step_dir(cur, nxt)
            if d1 == d2:
                out.pop(i)
                changed = True
                break
            if d1 == (-d2[0], -d2[1]):
                raise SelfIntersecting(f"ring {idx}: zero-width spike at {cur}")
    if len(out) < 4:
        raise TooFewVertices(f"ring {idx} has only {len(out)} vertices after merging")
    return out


def _segment_intersection_kind(p1: Point, q1: Point, p2: Point, q2: Point):
    """Classify the closed intersection of two axis-parallel segments.

    Returns None, ("point", pt), or ("overlap", None).
    """
    v1, v2 = p1[0] == q1[0], p2[0] == q2[0]
    if v1 == v2:
        axis = 0 if v1 else 1
        other = 1 - axis
        if p1[axis] != p2[axis]:
            return None
        lo1, hi1 = sorted((p1[other], q1[other]))
        lo2, hi2 = sorted((p2[other], q2[other]))
        lo, hi = max(lo1, lo2), min(hi1, hi2)
        if lo > hi:
            return None
        if lo == hi:
            pt = (p1[axis], lo) if v1 else (lo, p1[axis])
            return ("point", pt)
        return ("overlap", None)
    if v1:
        vx, (vlo, vhi) = p1[0], sorted((p1[1], q1[1]))
        hy, (hlo, hhi) = p2[1], sorted((p2[0], q2[0]))
    else:
        vx, (vlo, vhi) = p2[0], sorted((p2[1], q2[1]))
        hy, (hlo, hhi) = p1[1], sorted((p1[0], q1[0]))
    if hlo <= vx <= hhi and vlo <= hy <= vhi:
        return ("point", (vx, hy))
    return None


def _check_ring_simple(ring: Sequence[Point], idx: int) -> None:
    if len(set(ring)) != len(ring):
        raise SelfIntersecting(f"ring {idx} repeats a vertex")
    n = len(ring)
    edges = [(ring[i], ring[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue  # adjacent edges meet only at their shared vertex
            if _segment_intersection_kind(*edges[i], *edges[j]) is not None:
                raise SelfIntersecting(
                    f"ring {idx}: edges {edges[i]} and {edges[j]} intersect"
                )


def _on_ring(p, ring: Sequence[Point]) -> bool:
    x, y = p
    for (x0, y0), (x1, y1) in ring_edges(ring):
        if x0 == x1:
            lo, hi = sorted((y0, y1))
            if x == x0 and lo <= y <= hi:
                return True
        else:
            lo, hi = sorted((x0, x1))
            if y == y0 and lo <= x <= hi:
                return True
    return False


def _strictly_inside_ring(p, ring: Sequence[Point]) -> bool:
    """Even-odd test for a point known not to lie on the ring boundary.

    Counts vertical edges crossed by the eastward ray with a half-open
    rule in y, which handles rays through vertices exactly.
    """
    x, y = p
    crossings = 0
    for (x0, y0), (x1, y1) in ring_edges(ring):
        if x0 != x1:
            continue
        lo, hi = sorted((y0, y1))
        if lo <= y < hi and x < x0:
            crossings += 1
    return crossings % 2 == 1


def validate_polygon(rings: Sequence[Sequence[Sequence[int]]]) -> OrthoPolygon:
    """Normalize and validate raw vertex rings; first ring is the outer one.

    Fixes orientation (outer counter-clockwise, holes clockwise), merges
    collinear vertices, and checks rectilinearity, simplicity, and the
    containment and disjointness requirements between rings.
    """
    if not rings:
        raise TooFewVertices("no rings given")
    normalized = [_normalize_ring(r, i) for i, r in enumerate(rings)]
    for i, ring in enumerate(normalized):
        _check_ring_simple(ring, i)
    # Orientation: interior on the left everywhere.
    outer = normalized[0]
    if signed_area2(outer) < 0:
        outer = outer[::-1]
    holes = []
    for h in normalized[1:]:
        holes.append(h[::-1] if signed_area2(h) > 0 else h)
    all_rings = [outer] + holes
    for i in range(len(all_rings)):
        for j in range(i + 1, len(all_rings)):
            for e1 in ring_edges(all_rings[i]):
                for e2 in ring_edges(all_rings[j]):
                    if _segment_intersection_kind(*e1, *e2) is not None:
                        raise TouchingRings(f"rings {i} and {j} touch")
    for hi_, h in enumerate(holes, start=1):
        if not _strictly_inside_ring(h[0], outer):
            raise HoleOutsideOuter(f"ring {hi_} is not inside the outer ring")
    for i in range(len(holes)):
        for j in range(len(holes)):
            if i != j and _strictly_inside_ring(holes[i][0], holes[j]):
                raise HoleOutsideOuter(f"ring {i + 1} is nested inside ring {j + 1}")
    return OrthoPolygon(tuple(outer), tuple(tuple(h) for h in holes))


def point_location(p, poly: OrthoPolygon) -> str:
    """Classify a point as interior, boundary, or exterior.

    Accepts fractional coordinates as well; comparisons against integer
    vertex coordinates stay exact for dyadic values such as cell midpoints.
    """
    for _, ring in poly.rings():
        if _on_ring(p, ring):
            return BOUNDARY
    if not _strictly_inside_ring(p, poly.outer):
        return EXTERIOR
    for h in poly.holes:
        if _strictly_inside_ring(p, h):
            return EXTERIOR
    return INTERIOR


def contains_point(p, poly: OrthoPolygon) -> bool:
    return point_location(p, poly) != EXTERIOR


def slab_inside_intervals(poly: OrthoPolygon, lo: int, hi: int) -> list[tuple[int, int]]:
    """Closed x-intervals of the polygon across the horizontal slab lo < y < hi.

    Requires that no vertex y-coordinate lies strictly between lo and hi,
    so membership is constant across the slab.
    """
    xs = []
    for p, q, _ in poly.directed_edges():
        if p[0] == q[0]:
            elo, ehi = sorted((p[1], q[1]))
            if elo <= lo and ehi >= hi:
                xs.append(p[0])
    xs.sort()
    assert len(xs) % 2 == 0, "slab crossing parity broken"
    return [(xs[i], xs[i + 1]) for i in range(0, len(xs), 2)]


def column_inside_intervals(poly: OrthoPolygon, lo: int, hi: int) -> list[tuple[int, int]]:
    """Closed y-intervals of the polygon across the vertical slab lo < x < hi."""
    ys = []
    for p, q, _ in poly.directed_edges():
        if p[1] == q[1]:
            elo, ehi = sorted((p[0], q[0]))
            if elo <= lo and ehi >= hi:
                ys.append(p[1])
    ys.sort()
    assert len(ys) % 2 == 0, "slab crossing parity broken"
    return [(ys[i], ys[i + 1]) for i in range(0, len(ys), 2)]


def _cuts_between(values, lo: int, hi: int) -> list[int]:
    inner = sorted({v for v in values if lo < v < hi})
    return [lo] + inner + [hi]


def rect_in_polygon(r: Rect, poly: OrthoPolygon) -> bool:
    """True iff every point of the closed rectangle lies in the closed polygon."""
    ys = _cuts_between((p[1] for p in poly.vertices()), r.y0, r.y1)
    for ylo, yhi in zip(ys, ys[1:]):
        if not any(
            ilo <= r.x0 and ihi >= r.x1
            for ilo, ihi in slab_inside_intervals(poly, ylo, yhi)
        ):
            return False
    return True


def segment_in_polygon(seg: OrthoSegment, poly: OrthoPolygon) -> bool:
    """True iff the closed segment lies in the closed polygon."""
    if seg.is_vertical:
        cuts = _cuts_between((p[1] for p in poly.vertices()), seg.lo, seg.hi)
        intervals = slab_inside_intervals
    else:
        cuts = _cuts_between((p[0] for p in poly.vertices()), seg.lo, seg.hi)
        intervals = column_inside_intervals
    c = seg.fixed
    for lo, hi in zip(cuts, cuts[1:]):
        if not any(ilo <= c <= ihi for ilo, ihi in intervals(poly, lo, hi)):
            return False
    return True


def line_inside_runs(poly: OrthoPolygon, orientation: str, fixed: int) -> tuple[OrthoSegment, ...]:
    """Maximal positive-length sub-segments of a full axis line inside the polygon.

    Runs are unions of grid bands, so a line meeting the polygon only at an
    isolated vertex contributes nothing.
    """
    if orientation == VERTICAL:
        cuts = sorted({y for _, y in poly.vertices()})
        intervals = slab_inside_intervals
    else:
        cuts = sorted({x for x, _ in poly.vertices()})
        intervals = column_inside_intervals
    runs: list[tuple[int, int]] = []
    for lo, hi in zip(cuts, cuts[1:]):
        if any(ilo <= fixed <= ihi for ilo, ihi in intervals(poly, lo, hi)):
            if runs and runs[-1][1] == lo:
                runs[-1] = (runs[-1][0], hi)
            else:
                runs.append((lo, hi))
    if orientation == VERTICAL:
        return tuple(OrthoSegment((fixed, lo), (fixed, hi)) for lo, hi in runs)
    return tuple(OrthoSegment((lo, fixed), (hi, fixed)) for lo, hi in runs)
