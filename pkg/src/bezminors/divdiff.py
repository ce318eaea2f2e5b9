"""Generalized (confluent) divided differences and the Newton matrix.

Three engines compute ``g[x_1, ..., x_k]``:

* :func:`divdiff_poly` -- deflation chain for polynomial ``g``; any node order.
* :func:`divdiff_recursive` -- the two-branch recursive definition, where the
  equal-endpoint branch differentiates a divided difference carrying one
  symbolic node.
* :func:`divdiff_hermite` -- the classical confluent table fed with
  derivative samples; equal nodes must be adjacent.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence, Union

from .linalg import RationalMatrix
from .poly import Number, Polynomial, to_rational


@dataclass(frozen=True)
class HermiteData:
    """Derivative samples: ``groups[node][r]`` is the r-th derivative of g at node."""

    groups: tuple[tuple[Fraction, tuple[Fraction, ...]], ...]

    def __init__(self, groups):
        items = groups.items() if isinstance(groups, dict) else groups
        parsed = tuple(
            (to_rational(node), tuple(to_rational(v) for v in values)) for node, values in items
        )
        nodes = [node for node, _ in parsed]
        if len(set(nodes)) != len(nodes):
            raise ValueError("Hermite data nodes must be distinct")
        if any(not values for _, values in parsed):
            raise ValueError("each Hermite node needs at least its value")
        object.__setattr__(self, "groups", parsed)

    @classmethod
    def sample(cls, g: Polynomial, nodes: Sequence[Number]) -> "HermiteData":
        """Values and derivatives of ``g`` up to each node's multiplicity minus one."""
        nodes = [to_rational(x) for x in nodes]
        out = {}
        for x in dict.fromkeys(nodes):
            values, d = [], g
            for _ in range(nodes.count(x)):
                values.append(d(x))
                d = d.derivative()
            out[x] = values
        return cls(out)

    def lookup(self) -> dict[Fraction, tuple[Fraction, ...]]:
        return dict(self.groups)

    def expanded_nodes(self) -> list[Fraction]:
        """Grouped node sequence with each node repeated by its data multiplicity."""
        return [node for node, values in self.groups for _ in values]


Source = Union[Polynomial, HermiteData]


def _nodes(nodes: Sequence[Number]) -> list[Fraction]:
    out = [to_rational(x) for x in nodes]
    if not out:
        raise ValueError("need at least one node")
    return out


def check_grouped(nodes: Sequence[Fraction]) -> None:
    seen = set()
    for i, x in enumerate(nodes):
        if i and x == nodes[i - 1]:
            continue
        if x in seen:
            raise ValueError(f"nodes must be grouped: {x} reappears at position {i + 1}")
        seen.add(x)


def _deflation_row(Q: Polynomial, nodes: Sequence[Fraction]) -> list[Fraction]:
    # Q[x_1], Q[x_1, x_2], ..., Q[x_1, ..., x_k] from one deflation chain
    out, q = [], Q
    for x in nodes:
        out.append(q(x))
        q = q.divide_linear(x)
    return out


def divdiff_poly(Q: Polynomial, nodes: Sequence[Number]) -> Fraction:
    return _deflation_row(Q, _nodes(nodes))[-1]


def divdiff_recursive(Q: Polynomial, nodes: Sequence[Number]) -> Fraction:
    nodes = tuple(_nodes(nodes))

    @lru_cache(maxsize=None)
    def numeric(ns: tuple[Fraction, ...]) -> Fraction:
        if len(ns) == 1:
            return Q(ns[0])
        if ns[0] != ns[-1]:
            return (numeric(ns[1:]) - numeric(ns[:-1])) / (ns[-1] - ns[0])
        return symbolic(ns[1:-1]).derivative()(ns[0])

    @lru_cache(maxsize=None)
    def symbolic(rest: tuple[Fraction, ...]) -> Polynomial:
        # g[x, rest...] as a polynomial in the free node x
        if not rest:
            return Q
        # (g[rest] - g[x, rest[:-1]]) / (rest[-1] - x); generic x never equals rest[-1]
        head = symbolic(rest[:-1])
        num = head - Polynomial.constant(numeric(rest))
        quot, rem = num.divmod(Polynomial((-rest[-1], 1)))
        if not rem.is_zero:
            raise ArithmeticError("symbolic divided difference did not divide exactly")
        return quot

    return numeric(nodes)


def divdiff_hermite(data: HermiteData, nodes: Sequence[Number]) -> Fraction:
    return _hermite_row(data, _nodes(nodes))[-1]


def _hermite_row(data: HermiteData, z: list[Fraction]) -> list[Fraction]:
    # top edge of the confluent table: g[z_1], g[z_1, z_2], ..., g[z_1 .. z_k]
    check_grouped(z)
    table = data.lookup()
    for x in dict.fromkeys(z):
        need = z.count(x)
        if x not in table or len(table[x]) < need:
            raise ValueError(f"insufficient Hermite data at node {x}: need {need} derivative orders")
    col = [table[x][0] for x in z]
    row = [col[0]]
    for j in range(1, len(z)):
        col = [
            table[z[i]][j] / factorial(j)
            if z[i] == z[i + j]
            else (col[i + 1] - col[i]) / (z[i + j] - z[i])
            for i in range(len(z) - j)
        ]
        row.append(col[0])
    return row


def _difference_rows(source: Source, nodes: list[Fraction]) -> list[list[Fraction]]:
    # rows[a][b - a] = g[x_a, ..., x_b] (0-based a <= b)
    if isinstance(source, HermiteData):
        check_grouped(nodes)
        return [_hermite_row(source, nodes[a:]) for a in range(len(nodes))]
    if isinstance(source, Polynomial):
        return [_deflation_row(source, nodes[a:]) for a in range(len(nodes))]
    raise TypeError(f"unsupported source {type(source).__name__}")


def delta_matrix(source: Source, nodes: Sequence[Number]) -> RationalMatrix:
    """Anti-triangular Newton matrix.

    Row ``i`` (1-based) holds ``g[x_{n-i+1}, ..., x_j]`` in column ``j`` for
    ``j >= n-i+1`` and zeros before it, so the bottom row carries the Newton
    coefficients and the top-right corner is ``g(x_n)``.
    """
    nodes = _nodes(nodes)
    n = len(nodes)
    diffs = _difference_rows(source, nodes)
    rows = []
    for i in range(1, n + 1):
        a = n - i
        rows.append([Fraction(0)] * a + diffs[a])
    return RationalMatrix(rows)


def newton_interp(source: Source, nodes: Sequence[Number]) -> Polynomial:
    """Newton-Hermite interpolant in the monomial basis, degree <= n - 1."""
    nodes = _nodes(nodes)
    coeffs = _difference_rows(source, nodes)[0]
    result = Polynomial()
    basis = Polynomial.constant(1)
    for c, x in zip(coeffs, nodes):
        result = result + basis.scale(c)
        basis = basis * Polynomial((-x, 1))
    return result
