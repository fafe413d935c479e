#!/usr/bin/env python3
"""Adversarial audit of the hardness-reduction gadget geometry.

Generates reduction polygons for a graded family of hitting-set instances
and checks the geometric facts the size argument leans on.  Hole layouts
are pluggable so alternative tables can be screened mechanically; every
failed check is reported with a concrete witness.

Checks, cheapest first:

structure   generation succeeds (rings disjoint and inside the outer
            ring), no hole strictly straddles an anchored grid line
            (x congruent to 0 mod 6, y congruent to 0 mod 12, relative
            to the enclosure offset), and odd-column holes keep vertical
            distance >= 3 from their unit row.

span-rule   for every maximal inside run R on the half-unit grid, a
            vertical R seeing two or more designated vertices must have
            its column inside the span of every unit it sees.  Any
            camera is a subrun of some R and sees a subset of what R
            sees, so this bounds all cameras: a camera seeing p(s) for
            two units either yields one vertical line hitting both
            spans, or can be moved to either one freely.

row-rule    a horizontal R never sees designated vertices of units from
            two different rows (one aligned row line serves a same-row
            group, so only cross-row sightings break the relabeling).

blindness   no R of either orientation sees the room corner and any
            designated vertex; the corner camera therefore never doubles
            as a unit witness.

coverage    every minimal hitting subset of the anchored lines induces,
            via lines_to_cover, a camera set that covers the polygon.
            Supersets follow by monotonicity: adding a line only adds a
            camera while the extra segment C stays fixed within a class
            (C = seg_e with any vertical, seg_e_prime for all-rows).
            The cross-class minimal cases are all-rows plus one
            vertical with no private unit; those are checked too.

Runs on the half-unit grid are complete for camera placement: visibility
is combinatorially constant between consecutive cuts of the doubled
arrangement, and integer columns of the doubled polygon cover both the
cuts and the open intervals between them.
"""

from __future__ import annotations

import argparse
import itertools
import sys
import time
from contextlib import contextmanager
from dataclasses import dataclass

from slidecam import hardness
from slidecam.errors import SlidecamError
from slidecam.geometry import OrthoSegment, line_inside_runs
from slidecam.hardness import HittingInstance, gen_hardness_polygon, lines_to_cover
from slidecam.verifier import verify_cover

Point = tuple[int, int]
Hole = tuple[Point, int]
Interval = tuple[int, int]


@dataclass(frozen=True)
class Layout:
    """A candidate hole table: four (anchor, quarter) pairs per parity."""

    name: str
    even_holes: tuple[Hole, ...]
    even_carrier: int
    odd_holes: tuple[Hole, ...]
    odd_carrier: int


def current_layout() -> Layout:
    return Layout(
        "current",
        hardness.EVEN_HOLES,
        hardness.EVEN_CARRIER,
        hardness.ODD_HOLES,
        hardness.ODD_CARRIER,
    )


@contextmanager
def use_layout(lay: Layout):
    saved = (
        hardness.EVEN_HOLES,
        hardness.EVEN_CARRIER,
        hardness.ODD_HOLES,
        hardness.ODD_CARRIER,
    )
    hardness.EVEN_HOLES = lay.even_holes
    hardness.EVEN_CARRIER = lay.even_carrier
    hardness.ODD_HOLES = lay.odd_holes
    hardness.ODD_CARRIER = lay.odd_carrier
    try:
        yield
    finally:
        (
            hardness.EVEN_HOLES,
            hardness.EVEN_CARRIER,
            hardness.ODD_HOLES,
            hardness.ODD_CARRIER,
        ) = saved


@dataclass(frozen=True)
class Failure:
    instance: str
    check: str
    detail: str

    def __str__(self) -> str:
        return f"[{self.instance}] {self.check}: {self.detail}"


INSTANCES: tuple[tuple[int, str, tuple[Point, ...]], ...] = (
    (1, "even single", ((0, 0),)),
    (1, "odd single", ((1, 0),)),
    (1, "pair e-o", ((0, 0), (1, 0))),
    (1, "pair o-e", ((1, 0), (2, 0))),
    (2, "stack even", ((0, 0), (0, 1))),
    (2, "stack odd", ((1, 0), (1, 1))),
    (2, "diag e-o", ((0, 0), (1, 1))),
    (2, "diag o-e", ((1, 0), (2, 1))),
    (2, "anti-diag e-o", ((0, 1), (1, 0))),
    (2, "anti-diag o-e", ((1, 1), (2, 0))),
    (2, "skip e-e", ((0, 0), (2, 0))),
    (2, "skip o-o", ((1, 0), (3, 0))),
    (3, "row triple eoe", ((0, 0), (1, 0), (2, 0))),
    (3, "row triple oeo", ((1, 0), (2, 0), (3, 0))),
    (3, "L right-up eo", ((0, 0), (1, 0), (1, 1))),
    (3, "L right-up oe", ((1, 0), (2, 0), (2, 1))),
    (3, "L left-up eo", ((0, 0), (1, 0), (0, 1))),
    (3, "L left-up oe", ((1, 0), (2, 0), (1, 1))),
    (3, "col L eo", ((0, 0), (0, 1), (1, 1))),
    (3, "col L oe", ((1, 0), (1, 1), (2, 1))),
    (4, "quad eo", ((0, 0), (1, 0), (0, 1), (1, 1))),
    (4, "quad oe", ((1, 0), (2, 0), (1, 1), (2, 1))),
)


def iter_instances(level: int):
    for lvl, name, units in INSTANCES:
        if lvl <= level:
            yield name, units


# ---------------------------------------------------------------- structure


def _ring_bbox(ring) -> tuple[int, int, int, int]:
    xs = [x for x, _ in ring]
    ys = [y for _, y in ring]
    return min(xs), min(ys), max(xs), max(ys)


def check_structure(out, name: str) -> list[Failure]:
    fails: list[Failure] = []
    ox, oy = out.offset
    units = out.instance.units
    holes = out.polygon.holes
    if len(holes) != 4 * len(units):
        fails.append(Failure(name, "structure", f"{len(holes)} holes for {len(units)} units"))
    for h, ring in enumerate(holes):
        x0, y0, x1, y1 = _ring_bbox(ring)
        # every column of an L hole contains interior, so a grid line
        # strictly inside the bbox always crosses hole interior
        for gx in range(x0 + 1, x1):
            if (gx - ox) % 6 == 0:
                fails.append(Failure(name, "structure", f"hole {h} straddles column x={gx}"))
        for gy in range(y0 + 1, y1):
            if (gy - oy) % 12 == 0:
                fails.append(Failure(name, "structure", f"hole {h} straddles row y={gy}"))
    for i, (a, b) in enumerate(units):
        if a % 2 == 0:
            continue
        base = oy + hardness.SCALE * b
        for j in range(4):
            ring = holes[4 * i + j]
            _, y0, _, y1 = _ring_bbox(ring)
            if not (y0 - base >= 3 or base - y1 >= 3):
                rel = (y0 - base, y1 - base)
                fails.append(
                    Failure(name, "structure", f"odd unit ({a},{b}) hole {j} rows {rel} too close to its row")
                )
    return fails


# ------------------------------------------------------------------- runs


def _containing_run(P2, orient: str, fixed: int, coord: int) -> Interval:
    for run in line_inside_runs(P2, orient, fixed):
        if run.lo <= coord <= run.hi:
            return run.lo, run.hi
    raise AssertionError(f"point not inside along {orient}={fixed}")


def check_runs(out, name: str, stop_early: bool) -> list[Failure]:
    fails: list[Failure] = []
    P2 = out.polygon.scale(2)
    units = out.instance.units
    vvs = {i: (2 * px, 2 * py) for i, (px, py) in out.visibility_vertices.items()}
    cx, cy = (2 * out.corner_vertex[0], 2 * out.corner_vertex[1])
    spans = {i: (2 * s.lo, 2 * s.hi) for i, s in out.unit_segments.items()}

    # From a fixed point, the set of aligned feet that reach it is exactly
    # the maximal inside run through it on the perpendicular line.
    h_feet = {i: _containing_run(P2, "h", py, px) for i, (px, py) in vvs.items()}
    v_feet = {i: _containing_run(P2, "v", px, py) for i, (px, py) in vvs.items()}
    h_feet_c = _containing_run(P2, "h", cy, cx)
    v_feet_c = _containing_run(P2, "v", cx, cy)

    xs = [x for x, _ in P2.outer]
    ys = [y for _, y in P2.outer]
    for x in range(min(xs), max(xs) + 1):
        for run in line_inside_runs(P2, "v", x):
            seen = [
                i
                for i, (px, py) in vvs.items()
                if h_feet[i][0] <= x <= h_feet[i][1] and run.lo <= py <= run.hi
            ]
            corner = h_feet_c[0] <= x <= h_feet_c[1] and run.lo <= cy <= run.hi
            if corner and seen:
                ps = [units[i] for i in seen]
                fails.append(
                    Failure(name, "blindness", f"v-run x={x / 2} rows [{run.lo / 2},{run.hi / 2}] sees corner and p of {ps}")
                )
            if len(seen) > 1:
                outside = [units[i] for i in seen if not spans[i][0] <= x <= spans[i][1]]
                if outside:
                    ps = [units[i] for i in seen]
                    fails.append(
                        Failure(
                            name,
                            "span-rule",
                            f"v-run x={x / 2} rows [{run.lo / 2},{run.hi / 2}] sees p of {ps} but column misses spans of {outside}",
                        )
                    )
            if fails and stop_early:
                return fails
    for y in range(min(ys), max(ys) + 1):
        for run in line_inside_runs(P2, "h", y):
            seen = [
                i
                for i, (px, py) in vvs.items()
                if v_feet[i][0] <= y <= v_feet[i][1] and run.lo <= px <= run.hi
            ]
            corner = v_feet_c[0] <= y <= v_feet_c[1] and run.lo <= cx <= run.hi
            if corner and seen:
                ps = [units[i] for i in seen]
                fails.append(
                    Failure(name, "blindness", f"h-run y={y / 2} cols [{run.lo / 2},{run.hi / 2}] sees corner and p of {ps}")
                )
            rows = {units[i][1] for i in seen}
            if len(rows) > 1:
                ps = [units[i] for i in seen]
                fails.append(
                    Failure(name, "row-rule", f"h-run y={y / 2} cols [{run.lo / 2},{run.hi / 2}] sees p of mixed rows {ps}")
                )
            if fails and stop_early:
                return fails
    return fails


# --------------------------------------------------------------- coverage


def anchored_lines(out) -> list[tuple[str, int]]:
    ox, oy = out.offset
    s = hardness.SCALE
    vs = sorted({ox + s * a + d for a, _ in out.instance.units for d in (0, s // 2, s)})
    hs = sorted({oy + s * b for _, b in out.instance.units})
    return [("v", x) for x in vs] + [("h", y) for y in hs]


def _hits(line, out) -> frozenset[int]:
    orient, c = line
    got = set()
    for i, span in out.unit_segments.items():
        if orient == "v" and span.lo <= c <= span.hi:
            got.add(i)
        elif orient == "h" and c == span.fixed:
            got.add(i)
    return frozenset(got)


def minimal_hitting_subsets(out):
    lines = anchored_lines(out)
    hits = [_hits(line, out) for line in lines]
    all_units = frozenset(out.unit_segments)
    found = []
    for r in range(1, len(lines) + 1):
        for combo in itertools.combinations(range(len(lines)), r):
            union = frozenset().union(*(hits[i] for i in combo))
            if union != all_units:
                continue
            if any(
                frozenset().union(*(hits[i] for i in combo if i != j), frozenset()) == all_units
                for j in combo
            ):
                continue
            found.append(tuple(lines[i] for i in combo))
    return found


def check_coverage(out, name: str, stop_early: bool) -> list[Failure]:
    fails: list[Failure] = []
    subsets = [(sub, False) for sub in minimal_hitting_subsets(out)]
    # A hitting set with a redundant vertical can have only all-horizontal
    # minimal subsets; its cover keeps C = seg_e.  Class-minimal examples
    # are all-rows plus one vertical with no private unit.
    rows = tuple(line for line in anchored_lines(out) if line[0] == "h")
    by_row: dict[int, list[int]] = {}
    for i, (a, b) in enumerate(out.instance.units):
        by_row.setdefault(b, []).append(i)
    for line in anchored_lines(out):
        if line[0] != "v":
            continue
        hit = _hits(line, out)
        if all(any(i not in hit for i in ids) for ids in by_row.values()):
            subsets.append((rows + (line,), False))
    for sub, _ in subsets:
        try:
            cover = lines_to_cover(sub, out)
        except SlidecamError as exc:
            fails.append(Failure(name, "coverage", f"{sub}: {exc}"))
            if stop_early:
                return fails
            continue
        res = verify_cover(out.polygon, cover)
        if not res.covered:
            fails.append(Failure(name, "coverage", f"{sub}: cell {res.witness_rect} unseen"))
            if stop_early:
                return fails
    return fails


# ------------------------------------------------------------------ driver


def audit_layout(lay: Layout, level: int, stop_early: bool, verbose: bool, instances=None) -> list[Failure]:
    fails: list[Failure] = []
    todo = list(iter_instances(level)) if instances is None else list(instances)
    with use_layout(lay):
        for name, units in todo:
            t0 = time.monotonic()
            try:
                out = gen_hardness_polygon(HittingInstance(units=units, k=1))
            except SlidecamError as exc:
                fails.append(Failure(name, "structure", f"generation failed: {exc}"))
                if stop_early:
                    return fails
                continue
            got = check_structure(out, name)
            if not got:
                got = check_runs(out, name, stop_early)
            if not got:
                got = check_coverage(out, name, stop_early)
            fails.extend(got)
            if verbose:
                dt = time.monotonic() - t0
                status = "FAIL" if got else "ok"
                print(f"  {name:<18} {status}  ({dt:.2f}s)", flush=True)
            if got and stop_early:
                return fails
    return fails


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--level", type=int, default=3, help="instance family depth 1-4 (default 3)")
    ap.add_argument("--all", action="store_true", help="collect every failure instead of stopping at the first")
    ap.add_argument("--quiet", action="store_true", help="suppress per-instance progress")
    ap.add_argument("--units", help="audit one manual instance, e.g. '0,0;1,0'")
    args = ap.parse_args(argv)

    lay = current_layout()
    level = args.level
    global INSTANCES
    if args.units:
        units = tuple(tuple(int(v) for v in u.split(",")) for u in args.units.split(";"))
        INSTANCES = ((1, "manual", units),)
        level = 1
    print(f"layout {lay.name}: even={lay.even_holes} carrier={lay.even_carrier}")
    print(f"{'':<7} odd ={lay.odd_holes} carrier={lay.odd_carrier}")
    fails = audit_layout(lay, level, stop_early=not args.all, verbose=not args.quiet)
    if fails:
        print(f"\n{len(fails)} failure(s):")
        for f in fails:
            print(f"  {f}")
        return 1
    print("\nall checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
