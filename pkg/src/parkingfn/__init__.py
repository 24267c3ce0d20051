"""Exact generating functions for deterministic and probabilistic parking."""

from .exactalg import Polynomial, TruncatedSeries
from .oracle import PF, PFU, PFmn, PPF, RK, UPF, DomainTooLarge, count_by, gf_over, gf_over_prob
from .parking import PrefVector, is_parking_function, park_deterministic
from .probabilistic import park_probabilistic, prob_pf, prob_rk, prob_u
from .trees import RootedTree, prufer_decode, prufer_encode

__version__ = "0.1.0"

__all__ = [
    "Polynomial",
    "TruncatedSeries",
    "PF",
    "PFU",
    "PFmn",
    "PPF",
    "RK",
    "UPF",
    "DomainTooLarge",
    "count_by",
    "gf_over",
    "gf_over_prob",
    "PrefVector",
    "is_parking_function",
    "park_deterministic",
    "park_probabilistic",
    "prob_pf",
    "prob_rk",
    "prob_u",
    "RootedTree",
    "prufer_decode",
    "prufer_encode",
]
