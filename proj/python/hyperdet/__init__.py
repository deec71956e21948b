"""Exact hyperdeterminants of multidimensional matrices."""

from ._hyperdet import (
    HyperdetError,
    calibrate,
    classify,
    closed_det,
    corank_22n,
    degree_boundary,
    det,
    diagonal_monomial,
    hyperplucker,
    make_degenerate,
    term_count,
)

__all__ = [
    "HyperdetError",
    "calibrate",
    "classify",
    "closed_det",
    "corank_22n",
    "degree_boundary",
    "det",
    "diagonal_monomial",
    "hyperplucker",
    "make_degenerate",
    "term_count",
]
