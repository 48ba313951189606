"""Classification and coarse geometry of big mapping class groups for surfaces
with tame end spaces."""

from .endspace import canonicalize, cb_rank, clopen_embeds, is_homeomorphic
from .exprs import (
    GENUS,
    INF,
    PLANAR,
    Cantor,
    ExprError,
    MarkingError,
    Omega,
    Ord,
    Pt,
    SegmentSpec,
    Sum,
    SurfaceSpec,
)
from .grammar import ParseError, parse
from .ordinals import Ordinal, parse_ordinal

__version__ = "0.1.0"
