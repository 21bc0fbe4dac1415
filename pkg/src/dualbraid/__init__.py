"""Computational engine for the dual braid monoid.

Core pieces: band and Artin word carriers, greedy normal form over
non-crossing partitions, the rotating normal form with its splittings,
the recursive ShortLex rotating ordering, and an independent ordering
oracle based on handle reduction.
"""

from .garside import GreedyNF, equal, gnf, right_divides, right_quotient, tail
from .ncp import NonCrossingPartition, letter_ncp
from .oracle import SigmaClass, cmp_dehornoy, free_reduce, handle_reduce, sigma_class
from .ordering import OrderResult, cmp_rotating, is_initial_segment_member, min_of_breadth, successor
from .rotating import (
    Splitting,
    breadth,
    dangerous_braid,
    is_ladder,
    last_letter,
    rnf,
    separator,
    splitting,
    splitting_tree,
)
from .words import (
    ArtinWord,
    BandLetter,
    BandWord,
    band_to_artin,
    band_word,
    delta_word,
    phi,
)

__all__ = [
    "ArtinWord",
    "BandLetter",
    "BandWord",
    "GreedyNF",
    "NonCrossingPartition",
    "OrderResult",
    "SigmaClass",
    "Splitting",
    "band_to_artin",
    "band_word",
    "breadth",
    "cmp_dehornoy",
    "cmp_rotating",
    "dangerous_braid",
    "delta_word",
    "equal",
    "free_reduce",
    "gnf",
    "handle_reduce",
    "is_initial_segment_member",
    "is_ladder",
    "last_letter",
    "letter_ncp",
    "min_of_breadth",
    "phi",
    "rnf",
    "right_divides",
    "right_quotient",
    "separator",
    "sigma_class",
    "splitting",
    "splitting_tree",
    "successor",
    "tail",
]
