"""Bezout matrix (Bezoutiant) of two polynomials.

Two unrelated constructions are provided. :func:`bezout_via_product` is the
production path (Hankel times Toeplitz products); :func:`bezout_via_bilinear`
divides the bivariate form ``P(x)Q(y) - P(y)Q(x)`` by ``x - y`` and is kept
as an oracle for it.
"""
from __future__ import annotations

from fractions import Fraction

from .linalg import RationalMatrix, det
from .poly import Polynomial, RootForm, expand


def _padded_pair(P: Polynomial, Q: Polynomial) -> tuple[int, list[Fraction], list[Fraction]]:
    n = P.degree
    if n < 1:
        raise ValueError("P must have degree >= 1")
    if Q.degree > n:
        raise ValueError(f"degree order violated: deg Q = {Q.degree} > deg P = {n}")
    return n, P.padded(n + 1), Q.padded(n + 1)


def _hankel(c: list[Fraction], n: int) -> list[list[Fraction]]:
    # rows (c1 .. cn), (c2 .. cn, 0), ..., (cn, 0 .. 0)
    return [[c[i + j + 1] if i + j + 1 <= n else Fraction(0) for j in range(n)] for i in range(n)]


def _toeplitz(c: list[Fraction], n: int) -> list[list[Fraction]]:
    # upper triangular, first row (c0 .. c_{n-1})
    return [[c[j - i] if j >= i else Fraction(0) for j in range(n)] for i in range(n)]


def bezout_via_product(P: Polynomial, Q: Polynomial) -> RationalMatrix:
    n, p, q = _padded_pair(P, Q)
    return (
        RationalMatrix(_hankel(p, n)) @ RationalMatrix(_toeplitz(q, n))
        - RationalMatrix(_hankel(q, n)) @ RationalMatrix(_toeplitz(p, n))
    )


def bezout_via_bilinear(P: Polynomial, Q: Polynomial) -> RationalMatrix:
    """Read ``b[i][j]`` off ``(P(x)Q(y) - P(y)Q(x)) / (x - y)``.

    With ``N`` the numerator's coefficient grid, ``N[r][s] = B[r-1][s] - B[r][s-1]``;
    it is solved from the top x-degree downwards and the leftover equations
    are checked, which confirms the division was exact.
    """
    n, p, q = _padded_pair(P, Q)
    num = [[p[a] * q[b] - p[b] * q[a] for b in range(n + 1)] for a in range(n + 1)]

    def at(B, r, s):
        return B[r][s] if 0 <= r < n and 0 <= s < n else Fraction(0)

    B = [[Fraction(0)] * n for _ in range(n)]
    for r in range(n, 0, -1):
        for s in range(n):
            B[r - 1][s] = num[r][s] + at(B, r, s - 1)
    for r in range(n + 1):
        for s in range(n + 1):
            if num[r][s] != at(B, r - 1, s) - at(B, r, s - 1):
                raise ArithmeticError("bivariate numerator not divisible by x - y")
    return RationalMatrix(B)


bezout = bezout_via_product


def bezout_det_identity(rf: RootForm, Q: Polynomial) -> tuple[Fraction, Fraction]:
    """``(det B(P, Q), (-1)^(n(n-1)/2) * p_n^n * prod Q(x_j))`` for ``P`` given by roots."""
    P = expand(rf)
    n = rf.degree
    lhs = det(bezout(P, Q))
    rhs = Fraction((-1) ** (n * (n - 1) // 2)) * rf.leading**n
    for x in rf.roots:
        rhs *= Q(x)
    return lhs, rhs
