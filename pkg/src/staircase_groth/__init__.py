"""Exact tableau combinatorics for skew Schur, stable Grothendieck, and
dual stable Grothendieck polynomials, with identity-verification suites
centered on staircase shapes."""

from .shapes import (
    EMPTY,
    Partition,
    SkewShape,
    classify_strip,
    conjugate,
    contains,
    staircase,
    star_join,
    subpartitions,
)
from .symfunc import BasisExpansion, SymFunc, TruncationProfile
from .grothendieck import (
    SignedCount,
    alpha,
    big_G,
    big_G_double,
    dual_g,
    expand_in_G,
    expand_in_g,
    lr_coeff,
    schur,
    skew_by,
    tau,
    tau_bar,
)

__all__ = [
    "EMPTY",
    "Partition",
    "SkewShape",
    "SignedCount",
    "SymFunc",
    "BasisExpansion",
    "TruncationProfile",
    "alpha",
    "big_G",
    "big_G_double",
    "classify_strip",
    "conjugate",
    "contains",
    "dual_g",
    "expand_in_G",
    "expand_in_g",
    "lr_coeff",
    "schur",
    "skew_by",
    "staircase",
    "star_join",
    "subpartitions",
    "tau",
    "tau_bar",
]

__version__ = "0.1.0"
