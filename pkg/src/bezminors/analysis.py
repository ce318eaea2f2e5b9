"""Minor identities, sign-pattern classification and interlacing verdicts."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .bezout import bezout
from .divdiff import Source, delta_matrix, newton_interp
from .linalg import rank, trailing_minors
from .poly import Number, Polynomial, RootForm, expand, gcd, squarefree_part, to_rational
from .sturm import count_real_roots, isolate_roots, sturm_chain

DEFAULT_WIDTH = Fraction(1, 2**32)


def subset_minor(rf: RootForm, Q: Polynomial, size: int) -> Fraction:
    """Trailing Bezout minor of the given size as a sum over root subsets.

    Valid only for simple roots of ``P``; each subset contributes the product
    of ``Q(x)/P'(x)`` over its roots times the squared Vandermonde of the subset.
    """
    n = rf.degree
    if not 1 <= size <= n:
        raise ValueError(f"size must lie in 1..{n}")
    if Q.degree > n:
        raise ValueError(f"degree order violated: deg Q = {Q.degree} > deg P = {n}")
    if len(set(rf.roots)) != n:
        raise ValueError("subset formula requires simple roots")
    dP = expand(rf).derivative()
    ratio = [Q(x) / dP(x) for x in rf.roots]
    total = Fraction(0)
    for subset in combinations(range(n), size):
        term = Fraction(1)
        for i in subset:
            term *= ratio[i]
        if not term:
            continue
        for i, j in combinations(subset, 2):
            term *= (rf.roots[i] - rf.roots[j]) ** 2
        total += term
    return rf.leading ** (2 * size) * total


@dataclass(frozen=True)
class MinorCheck:
    size: int
    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def minor_identity(rf: RootForm, Q: Polynomial) -> list[MinorCheck]:
    """Compare each trailing minor of ``B(P, Q)`` with ``p_n^s`` times that of ``Delta(Q)``.

    The nodes of ``Delta`` are the roots of ``P`` in the order given.
    """
    b_minors = trailing_minors(bezout(expand(rf), Q))
    d_minors = trailing_minors(delta_matrix(Q, rf.roots))
    return [
        MinorCheck(s, lhs, rf.leading**s * rhs)
        for s, (lhs, rhs) in enumerate(zip(b_minors, d_minors), start=1)
    ]


class Pattern(str, enum.Enum):
    ALL_POSITIVE = "AllPositive"
    ALTERNATING = "Alternating"
    DEGENERATE = "Degenerate"
    OTHER = "Other"


class Verdict(str, enum.Enum):
    INTERLACING = "RealDistinctInterlacing"
    NO_CLAIM = "NoClaim"


@dataclass(frozen=True)
class SignPattern:
    classification: Pattern
    minors: tuple[Fraction, ...]

    @property
    def claims_interlacing(self) -> bool:
        return self.classification in (Pattern.ALL_POSITIVE, Pattern.ALTERNATING)


def classify_pattern(minors: Sequence[Number]) -> SignPattern:
    """Classify minors scanned from size 1 upward.

    Alternating means the negative-definite pattern: size-1 minor negative,
    then strict sign flips. A flip sequence that starts positive describes an
    indefinite matrix and lands in ``Other``.
    """
    ms = tuple(to_rational(m) for m in minors)
    if any(m == 0 for m in ms):
        cls = Pattern.DEGENERATE
    elif all(m > 0 for m in ms):
        cls = Pattern.ALL_POSITIVE
    elif all((m < 0) == (s % 2 == 1) for s, m in enumerate(ms, start=1)):
        cls = Pattern.ALTERNATING
    else:
        cls = Pattern.OTHER
    return SignPattern(cls, ms)


@dataclass
class InterlaceReport:
    pattern: SignPattern
    verdict: Verdict
    delta: object
    interpolant: Polynomial
    isolated_roots: list[tuple[Fraction, Fraction]] = field(default_factory=list)
    sturm_confirmed: bool = False
    reason: str = ""


def confirm_interlacing(
    interp: Polynomial, nodes: Sequence[Number], width: Number = DEFAULT_WIDTH
) -> tuple[bool, list[tuple[Fraction, Fraction]], str]:
    """Sturm check that ``interp`` has real, distinct roots strictly between adjacent nodes.

    Returns ``(confirmed, isolating intervals, reason for failure)``.
    """
    sorted_nodes = sorted(set(to_rational(x) for x in nodes))
    gaps = len(sorted_nodes) - 1
    if interp.is_zero:
        return False, [], "interpolant is identically zero"
    core = squarefree_part(interp)
    intervals = isolate_roots(core, width)
    if core.degree != interp.degree:
        return False, intervals, "interpolant has repeated roots"
    if len(intervals) != interp.degree:
        return False, intervals, f"only {len(intervals)} of {interp.degree} roots are real"
    if interp.degree != gaps:
        return False, intervals, f"interpolant degree {interp.degree} differs from {gaps} node gaps"
    hits = [x for x in sorted_nodes if interp(x) == 0]
    if hits:
        return False, intervals, f"interpolant vanishes at node {hits[0]}"
    chain = sturm_chain(core)
    for a, b in zip(sorted_nodes, sorted_nodes[1:]):
        k = count_real_roots(chain, a, b)
        if k != 1:
            return False, intervals, f"{k} roots in ({a}, {b})"
    return True, intervals, ""


def interlace_verdict(
    source: Source, nodes: Sequence[Number], width: Number = DEFAULT_WIDTH
) -> InterlaceReport:
    delta = delta_matrix(source, nodes)
    pattern = classify_pattern(trailing_minors(delta))
    interp = newton_interp(source, nodes)
    if not pattern.claims_interlacing:
        return InterlaceReport(pattern, Verdict.NO_CLAIM, delta, interp)
    ok, intervals, reason = confirm_interlacing(interp, nodes, width)
    return InterlaceReport(pattern, Verdict.INTERLACING, delta, interp, intervals, ok, reason)


def defect_check(P: Polynomial, Q: Polynomial) -> tuple[int, int]:
    """``(n - rank B(P, Q), deg gcd(P, Q))``."""
    B = bezout(P, Q)
    return B.n - rank(B), gcd(P, Q).degree


def rank_from_minors(minors: Sequence[Fraction]) -> int:
    """Largest size whose trailing minor is nonzero (0 when none is)."""
    return max((s for s, m in enumerate(minors, start=1) if m != 0), default=0)
