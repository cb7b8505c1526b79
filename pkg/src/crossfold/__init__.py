"""Exact crossing counts for hypercube drawings and congestion bounds for folded hypercubes."""

from .arc_diagram import build_gamma, count_crossings, cover_profile
from .bounds import bound_report
from .folded_upper import d3_base_drawing, fq_upper_count, fq_upper_formula
from .hypercube import VertexLabel
from .routing import canonical_path, congestion_census

__all__ = [
    "VertexLabel", "build_gamma", "count_crossings", "cover_profile", "d3_base_drawing",
    "fq_upper_count", "fq_upper_formula", "canonical_path", "congestion_census", "bound_report",
]
