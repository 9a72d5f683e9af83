"""Conductor ideals of monomial ideals via their Rees algebra presentations."""

from .conductor import ConductorReport, conductor, conductor_member_oracle, conductor_of
from .families import (
    Graph,
    VeroneseParams,
    bounded_veronese,
    edge_ideal,
    graph_conductor_formula,
    veronese_conductor_formula,
)
from .monomial_ideal import MonomialIdeal, parse_ideal, render_ideal
from .rees import ReesPresentation, is_fiber_type, is_linear_type

__all__ = [
    "ConductorReport",
    "Graph",
    "MonomialIdeal",
    "ReesPresentation",
    "VeroneseParams",
    "bounded_veronese",
    "conductor",
    "conductor_member_oracle",
    "conductor_of",
    "edge_ideal",
    "graph_conductor_formula",
    "is_fiber_type",
    "is_linear_type",
    "parse_ideal",
    "render_ideal",
    "veronese_conductor_formula",
]
