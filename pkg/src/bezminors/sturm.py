"""Sturm chains, real-root counting and exact root isolation."""
from __future__ import annotations

from fractions import Fraction

from .poly import Number, Polynomial, gcd, to_rational


def sturm_chain(p: Polynomial) -> list[Polynomial]:
    if p.is_zero:
        raise ValueError("Sturm chain of the zero polynomial")
    chain = [p]
    if p.degree == 0:
        return chain
    chain.append(p.derivative())
    while True:
        r = -(chain[-2] % chain[-1])
        if r.is_zero:
            return chain
        chain.append(r)


def sign_variations(chain: list[Polynomial], x: Number) -> int:
    signs = [v > 0 for v in (q(x) for q in chain) if v != 0]
    return sum(a != b for a, b in zip(signs, signs[1:]))


def count_real_roots(chain: list[Polynomial], a: Number, b: Number) -> int:
    """Distinct real roots of ``chain[0]`` in the half-open interval ``(a, b]``."""
    a, b = to_rational(a), to_rational(b)
    if a >= b:
        raise ValueError("empty interval")
    return sign_variations(chain, a) - sign_variations(chain, b)


def cauchy_bound(p: Polynomial) -> Fraction:
    """Every real root lies strictly inside ``(-bound, bound)``."""
    lead = p.leading
    return 1 + max((abs(c / lead) for c in p.coeffs[:-1]), default=Fraction(0))


def is_squarefree(p: Polynomial) -> bool:
    return p.degree <= 0 or gcd(p, p.derivative()).degree == 0


def isolate_roots(p: Polynomial, width: Number) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals ``(a, b]``, one per real root, each narrower than ``width``.

    Bisection driven by Sturm counts; ``p`` must be squarefree.
    """
    width = to_rational(width)
    if width <= 0:
        raise ValueError("isolation width must be positive")
    if p.is_zero:
        raise ValueError("cannot isolate roots of the zero polynomial")
    if not is_squarefree(p):
        raise ValueError("deflate first: polynomial has repeated roots")
    chain = sturm_chain(p)
    m = cauchy_bound(p)
    out = []
    stack = [(-m, m)]
    while stack:
        a, b = stack.pop()
        k = count_real_roots(chain, a, b)
        if k == 0:
            continue
        if k == 1 and b - a < width:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        stack.append((mid, b))
        stack.append((a, mid))
    return sorted(out)
