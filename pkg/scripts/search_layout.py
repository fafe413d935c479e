#!/usr/bin/env python3
"""Staged search over candidate hole tables for the hardness gadget.

The even and odd tables interact only through mixed instances, so the
search goes in stages: screen even-side candidates on all-even
instances, screen odd-side candidates on all-odd instances, then run
the surviving cross products through the mixed families.  Each stage
uses the audit checks from audit_hardness with fail-fast witnesses.
"""

from __future__ import annotations

import argparse
import itertools
import os
import sys
import time

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from audit_hardness import Layout, audit_layout

EVEN_INSTANCES = [
    ("even single", ((0, 0),)),
    ("stack even", ((0, 0), (0, 1))),
    ("skip e-e", ((0, 0), (2, 0))),
]
ODD_INSTANCES = [
    ("odd single", ((1, 0),)),
    ("stack odd", ((1, 0), (1, 1))),
    ("skip o-o", ((1, 0), (3, 0))),
]
MIXED_INSTANCES = [
    ("pair e-o", ((0, 0), (1, 0))),
    ("pair o-e", ((1, 0), (2, 0))),
    ("diag e-o", ((0, 0), (1, 1))),
    ("diag o-e", ((1, 0), (2, 1))),
    ("anti-diag e-o", ((0, 1), (1, 0))),
    ("anti-diag o-e", ((1, 1), (2, 0))),
    ("row triple eoe", ((0, 0), (1, 0), (2, 0))),
    ("row triple oeo", ((1, 0), (2, 0), (3, 0))),
    ("L right-up eo", ((0, 0), (1, 0), (1, 1))),
    ("L right-up oe", ((1, 0), (2, 0), (2, 1))),
    ("L left-up eo", ((0, 0), (1, 0), (0, 1))),
    ("L left-up oe", ((1, 0), (2, 0), (1, 1))),
    ("col L eo", ((0, 0), (0, 1), (1, 1))),
    ("col L oe", ((1, 0), (1, 1), (2, 1))),
]
FINAL_INSTANCES = [
    ("quad eo", ((0, 0), (1, 0), (0, 1), (1, 1))),
    ("quad oe", ((1, 0), (2, 0), (1, 1), (2, 1))),
]

# carrier q0 at (-2,-11): p at (-1,-10), blind to the lid along x=-1;
# q0 at (-2,-2) caps x=-1 runs below the stacked neighbour's carrier
# band [1,3]; q1 at (12,-11) bounds the sight interval at rel 13; the
# fourth hole guards the rel column 12/13 band above the row.
EVEN_BASE = (((-2, -11), 0), ((-2, -2), 0), ((12, -11), 1))
E4_MENU = [((12, 4), q) for q in (0, 1, 2, 3)] + [((12, 1), q) for q in (0, 1, 2, 3)]

# carrier q2 at (12,4): p at (13,5) looks west and south; a left-column
# hole at (-2,4) stops the west ray at rel -1; q1 at (12,-5) blinds the
# p column to the lid; the fourth hole splits rel columns (0,2) above
# the row for stacked neighbours.
ODD_W_MENU = [((-2, 4), q) for q in (0, 3)]
ODD_CARRIER_HOLE = ((12, 4), 2)
ODD_SUB = ((12, -5), 1)
ODD_T_MENU = [
    ((tx, ty), q)
    for (tx, ty) in ((0, 6), (0, 7), (2, 6), (-2, 7), (12, 7), (-6, 4), (-6, 5))
    for q in (0, 1, 2, 3)
]


def even_candidates():
    for e4 in E4_MENU:
        yield f"E4={e4}", EVEN_BASE + (e4,)


def odd_candidates():
    for w, t in itertools.product(ODD_W_MENU, ODD_T_MENU):
        yield f"W={w} T={t}", (w, ODD_CARRIER_HOLE, ODD_SUB, t)


def screen(tag, cands, mk_layout, instances, verbose):
    good = []
    for label, holes in cands:
        lay = mk_layout(holes)
        t0 = time.monotonic()
        fails = audit_layout(lay, 0, stop_early=True, verbose=False, instances=instances)
        dt = time.monotonic() - t0
        if fails:
            if verbose:
                print(f"  {tag} {label}: {fails[0]} ({dt:.1f}s)", flush=True)
        else:
            print(f"  {tag} {label}: PASS ({dt:.1f}s)", flush=True)
            good.append((label, holes))
    return good


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--verbose", action="store_true", help="print the first witness for every rejected candidate")
    ap.add_argument("--final", action="store_true", help="also run the quad instances on full survivors")
    args = ap.parse_args(argv)

    dummy_odd = (((-2, 4), 0), ((12, 4), 2), ((12, -5), 1), ((0, 7), 2))
    dummy_even = EVEN_BASE + (((12, 4), 0),)

    print("stage 1: even side")
    evens = screen(
        "even",
        even_candidates(),
        lambda h: Layout("cand", h, 0, dummy_odd, 1),
        EVEN_INSTANCES,
        args.verbose,
    )
    print(f"  -> {len(evens)} even survivor(s)")
    if not evens:
        return 1

    print("stage 2: odd side")
    odds = screen(
        "odd",
        odd_candidates(),
        lambda h: Layout("cand", dummy_even, 0, h, 1),
        ODD_INSTANCES,
        args.verbose,
    )
    print(f"  -> {len(odds)} odd survivor(s)")
    if not odds:
        return 1

    print("stage 3: mixed instances on cross products")
    winners = []
    for (el, eh), (ol, oh) in itertools.product(evens, odds):
        lay = Layout("cand", eh, 0, oh, 1)
        t0 = time.monotonic()
        fails = audit_layout(lay, 0, stop_early=True, verbose=False, instances=MIXED_INSTANCES)
        dt = time.monotonic() - t0
        if fails:
            if args.verbose:
                print(f"  {el} x {ol}: {fails[0]} ({dt:.1f}s)", flush=True)
        else:
            print(f"  {el} x {ol}: PASS ({dt:.1f}s)", flush=True)
            winners.append((el, ol, lay))
    print(f"  -> {len(winners)} full survivor(s)")

    if args.final and winners:
        print("stage 4: quads on full survivors")
        for el, ol, lay in winners:
            fails = audit_layout(lay, 0, stop_early=True, verbose=False, instances=FINAL_INSTANCES)
            tag = "PASS" if not fails else str(fails[0])
            print(f"  {el} x {ol}: {tag}", flush=True)

    for el, ol, lay in winners:
        print(f"\nwinner even={lay.even_holes}")
        print(f"       odd ={lay.odd_holes}")
    return 0 if winners else 1


if __name__ == "__main__":
    sys.exit(main())
