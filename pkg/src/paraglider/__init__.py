"""Certified colouring and structure analysis of (P5, paraglider)-free graphs."""

from .errors import (
    BoundExceeded,
    CapacityError,
    CertificateError,
    Graph6Error,
    GenerationError,
    InputError,
    ParagliderError,
    StructureViolation,
)
from .graph import Graph, from_graph6, read_graph6_stream, to_graph6
from .oracle import Coloring, chromatic_number, clique_number, verify_coloring
from .patterns import is_p5_paraglider_free
from .coloring import CertifiedColoring, characterize_excess, color_master, validate_trace
from .structure import structure_outcome

__version__ = "0.1.0"
