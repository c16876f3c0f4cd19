"""Two-layer grid drawings for graphs of maximum degree four."""

from .decompose import LayerPartition, euler_partition, linear_forests_deg3
from .drawing import Drawing, DrawnEdge
from .embed_cycles import embed_degree4
from .embed_ortho import embed_degree4_ortho
from .embed_paths import embed_degree3
from .graph import DegreeError, Graph, GraphError, build_graph
from .io_formats import ParseError, parse_any, read_layout, render_svg, write_layout
from .pipeline import embed, verify_for_mode
from .verify import VerificationReport, brute_force_thickness2_exists, segments_cross, verify_drawing

__all__ = [
    "DegreeError",
    "Drawing",
    "DrawnEdge",
    "Graph",
    "GraphError",
    "LayerPartition",
    "ParseError",
    "VerificationReport",
    "brute_force_thickness2_exists",
    "build_graph",
    "embed",
    "embed_degree3",
    "embed_degree4",
    "embed_degree4_ortho",
    "euler_partition",
    "linear_forests_deg3",
    "parse_any",
    "read_layout",
    "render_svg",
    "segments_cross",
    "verify_drawing",
    "verify_for_mode",
    "write_layout",
]

__version__ = "0.1.0"
