"""Quick manual exercise of the hardness generator on small instances."""

import sys

sys.path.insert(0, "src")

from slidecam.hardness import HittingInstance, gen_hardness_polygon, lines_to_cover, cover_to_lines
from slidecam.verifier import verify_cover


def show(label, units, lines):
    I = HittingInstance(units=tuple(units), k=len(lines))
    out = gen_hardness_polygon(I)
    print(f"--- {label}: units={units} holes={len(out.polygon.holes)} "
          f"vis={dict(out.visibility_vertices)}")
    cov = lines_to_cover(lines, out)
    res = verify_cover(out.polygon, cov)
    print(f"    lines={lines} cover={len(cov)} covered={res.covered} witness={res.witness}")
    if res.covered:
        back = cover_to_lines(cov, out)
        print(f"    roundtrip={back}")
    return res.covered


ok = True

I0 = HittingInstance(units=(), k=0)
out0 = gen_hardness_polygon(I0)
cov0 = lines_to_cover([], out0)
res0 = verify_cover(out0.polygon, cov0)
print(f"--- empty: cover={cov0} covered={res0.covered} roundtrip={cover_to_lines(cov0, out0)}")
ok &= res0.covered

ok &= show("single even", [(0, 0)], [("v", 36 + 6)])
ok &= show("single even at endpoint", [(0, 0)], [("v", 36)])
ok &= show("single even right endpoint", [(0, 0)], [("v", 48)])
ok &= show("single even row", [(0, 0)], [("h", 36)])
ok &= show("single odd", [(1, 0)], [("v", 36 + 6)])
ok &= show("single odd row", [(1, 0)], [("h", 36)])
ok &= show("shared endpoint, shared column", [(0, 0), (1, 0)], [("v", 48)])
ok &= show("shared endpoint, two columns", [(0, 0), (1, 0)], [("v", 42), ("v", 54)])
ok &= show("shared endpoint, all horizontal", [(0, 0), (1, 0)], [("h", 36)])
ok &= show("odd then even shared", [(1, 0), (2, 0)], [("v", 48)])
ok &= show("stacked evens", [(0, 0), (0, 1)], [("v", 42)])
ok &= show("stacked evens rows", [(0, 0), (0, 1)], [("h", 36), ("h", 48)])
ok &= show("diagonal", [(0, 0), (1, 1)], [("v", 42), ("h", 48)])

print("ALL COVERED" if ok else "SOME UNCOVERED")
