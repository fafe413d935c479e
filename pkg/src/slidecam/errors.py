"""Error types shared across the package.

Every error carries a short machine-readable code (the class name) so the
command line front end can emit one-line diagnostics of the form
"ERROR <code>: <detail>".
"""


class SlidecamError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def code(self) -> str:
        return type(self).__name__


class ParseError(SlidecamError):
    """Malformed input file."""


class NonRectilinear(SlidecamError):
    """A ring edge is not axis-parallel."""


class SelfIntersecting(SlidecamError):
    """A ring touches or crosses itself."""


class HoleOutsideOuter(SlidecamError):
    """A hole ring is not strictly inside the region bounded by the outer ring."""


class TouchingRings(SlidecamError):
    """Two rings share at least one point."""


class TooFewVertices(SlidecamError):
    """A ring has fewer than four vertices after normalization."""


class NonRectangularCell(SlidecamError):
    """Internal consistency failure: a partition cell is not a rectangle."""


class SeerNotUnique(SlidecamError):
    """Internal consistency failure: a cell does not have exactly one guard piece per orientation."""


class OddCycle(SlidecamError):
    """The graph is not bipartite."""


class SegmentOutsidePolygon(SlidecamError):
    """A camera trajectory segment is not contained in the polygon."""


class OverlappingUnits(SlidecamError):
    """Two unit segments of a hitting instance overlap in more than a point."""


class NotAHittingSet(SlidecamError):
    """The given lines leave some unit segment unhit."""


class NotACover(SlidecamError):
    """The given segments do not guard the polygon."""


class InstanceTooLarge(SlidecamError):
    """Input exceeds a brute-force oracle's size cap."""
