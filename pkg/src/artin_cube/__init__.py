"""Defining-graph analysis for Artin groups via the clique-cube complex."""

from .ball import build_ball, canonical_coset, fundamental_domain, normal_form_raag, verify_link_base
from .coxeter import cosine_matrix, is_fc_type, is_finite_type
from .defining_graph import (
    Clique,
    DefiningGraph,
    ParseError,
    classify,
    complement,
    emit,
    enumerate_cliques,
    link,
    parse,
)
from .flag_links import flag_complex, link_partition_at, spherical_vertex_distance
from .report import analyze
from .witness import acyl_witness, full_cover_word, loxodromic_word

__version__ = "0.1.0"

__all__ = [
    "Clique",
    "DefiningGraph",
    "ParseError",
    "acyl_witness",
    "analyze",
    "build_ball",
    "canonical_coset",
    "classify",
    "complement",
    "cosine_matrix",
    "emit",
    "enumerate_cliques",
    "flag_complex",
    "full_cover_word",
    "fundamental_domain",
    "is_fc_type",
    "is_finite_type",
    "link",
    "link_partition_at",
    "loxodromic_word",
    "normal_form_raag",
    "parse",
    "spherical_vertex_distance",
    "verify_link_base",
]
