"""Curve neighborhoods and minimum quantum degrees for Gr(k,n), IG(k,2n), OG(k,2n+1)."""

from .models import Space, convert
from .curves import nbhd
from .mindeg import DegreeAnswer, min_degree_diagram, min_degree_oracle, cross_verify

__all__ = [
    "Space", "convert", "nbhd",
    "DegreeAnswer", "min_degree_diagram", "min_degree_oracle", "cross_verify",
]
