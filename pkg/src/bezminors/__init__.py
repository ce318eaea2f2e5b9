"""Exact Bezout and Newton divided-difference matrices, their trailing
principal minors, and root-interlacing verdicts."""
from .analysis import (
    InterlaceReport,
    MinorCheck,
    Pattern,
    SignPattern,
    Verdict,
    classify_pattern,
    confirm_interlacing,
    defect_check,
    interlace_verdict,
    minor_identity,
    rank_from_minors,
    subset_minor,
)
from .bezout import bezout, bezout_det_identity, bezout_via_bilinear, bezout_via_product
from .divdiff import (
    HermiteData,
    delta_matrix,
    divdiff_hermite,
    divdiff_poly,
    divdiff_recursive,
    newton_interp,
)
from .linalg import RationalMatrix, det, rank, trailing_minors
from .poly import Polynomial, RootForm, expand, gcd, squarefree_part, to_rational
from .sturm import count_real_roots, isolate_roots, sturm_chain

__version__ = "0.1.0"
