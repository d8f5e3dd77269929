"""Generalized minors on reduced double Bruhat cells of Sp(2r): exact Laurent
arithmetic, path and tableau formulas, factorization maps and exchange matrices."""

from .laurent import LaurentPoly, VarSpace, canonical_string, parse
from .weyl_word import CWord, locate, target_wedge, truncate_for
from .minors import frozen_minor, minor_G, minor_L_dp, minor_L_oracle
from .paths import enumerate_paths, minor_by_paths
from .closed_form import enumerate_tableaux, minor_closed

__all__ = [
    "CWord",
    "LaurentPoly",
    "VarSpace",
    "canonical_string",
    "enumerate_paths",
    "enumerate_tableaux",
    "frozen_minor",
    "locate",
    "minor_G",
    "minor_L_dp",
    "minor_L_oracle",
    "minor_by_paths",
    "minor_closed",
    "parse",
    "target_wedge",
    "truncate_for",
]
