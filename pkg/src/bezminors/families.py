"""Seeded random instance generators for the property suites and ``verify``.

Every generator takes a :class:`random.Random`; identical seeds give
identical instances on every platform.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .poly import Polynomial, RootForm, expand, gcd

FAMILIES = ("distinct", "shared-roots", "multiple-roots")


def rational(rng: random.Random, span: int = 6, dens: tuple[int, ...] = (1, 1, 2, 3)) -> Fraction:
    return Fraction(rng.randint(-span * 2, span * 2), rng.choice(dens))


def nonzero_rational(rng: random.Random, span: int = 3) -> Fraction:
    while True:
        q = rational(rng, span)
        if q:
            return q


def distinct_rationals(rng: random.Random, k: int, exclude=()) -> list[Fraction]:
    out: list[Fraction] = []
    banned = set(exclude)
    while len(out) < k:
        x = rational(rng)
        if x not in banned:
            banned.add(x)
            out.append(x)
    return out


def random_poly(rng: random.Random, degree: int, span: int = 4) -> Polynomial:
    """Random polynomial of exactly the given degree (``-1`` gives zero)."""
    if degree < 0:
        return Polynomial()
    coeffs = [rational(rng, span) for _ in range(degree)]
    return Polynomial(coeffs + [nonzero_rational(rng)])


def distinct_instance(rng: random.Random, n: int) -> tuple[RootForm, Polynomial]:
    rf = RootForm(nonzero_rational(rng), distinct_rationals(rng, n))
    return rf, random_poly(rng, rng.randint(0, n))


def shared_instance(rng: random.Random, n: int) -> tuple[RootForm, Polynomial]:
    """P with distinct roots; Q vanishes at exactly 1 or 2 of them."""
    n = max(n, 2)
    roots = distinct_rationals(rng, n)
    rf = RootForm(nonzero_rational(rng), roots)
    r = rng.randint(1, 2)
    shared = roots[:r]
    m = rng.randint(r, n)
    while True:
        cofactor = random_poly(rng, m - r)
        if all(cofactor(x) != 0 for x in roots[r:]):
            break
    Q = expand(RootForm(1, shared)) * cofactor
    rng.shuffle(roots)
    return RootForm(rf.leading, roots), Q


def multiple_instance(rng: random.Random, n: int) -> tuple[RootForm, Polynomial]:
    """P with at least one root of multiplicity 2 or 3, none above 3."""
    n = max(n, 2)
    roots: list[Fraction] = []
    top = rng.randint(2, min(3, n))
    distinct = distinct_rationals(rng, n)
    roots += [distinct[0]] * top
    i = 1
    while len(roots) < n:
        mult = min(rng.randint(1, 3), n - len(roots))
        roots += [distinct[i]] * mult
        i += 1
    if rng.random() < 0.5:
        rng.shuffle(roots)
    rf = RootForm(nonzero_rational(rng), roots)
    if rng.random() < 0.3:
        # also share the repeated root with Q
        Q = random_poly(rng, rng.randint(0, n - 1)) * Polynomial((-distinct[0], 1))
    else:
        Q = random_poly(rng, rng.randint(0, n))
    return rf, Q


_BUILDERS = {
    "distinct": distinct_instance,
    "shared-roots": shared_instance,
    "multiple-roots": multiple_instance,
}


def instance(family: str, rng: random.Random, n: int) -> tuple[RootForm, Polynomial]:
    try:
        builder = _BUILDERS[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}") from None
    return builder(rng, n)


def batch(family: str, count: int, seed: int, n_max: int = 7, n: int | None = None):
    """``count`` instances; instance ``i`` is drawn from its own seeded stream."""
    for i in range(count):
        rng = random.Random(f"{seed}:{family}:{i}")
        yield instance(family, rng, n if n is not None else rng.randint(1, n_max))


def planted_gcd_pair(rng: random.Random, gcd_degree: int, n_max: int = 7) -> tuple[Polynomial, Polynomial]:
    """(P, Q) with deg Q <= deg P and deg gcd(P, Q) exactly ``gcd_degree``."""
    common = expand(RootForm(1, distinct_rationals(rng, gcd_degree)))
    while True:
        n = rng.randint(max(gcd_degree, 1), n_max)
        A = random_poly(rng, n - gcd_degree)
        B = random_poly(rng, rng.randint(-1 if gcd_degree == n else 0, n - gcd_degree))
        if B.is_zero:
            B = Polynomial.constant(nonzero_rational(rng))
        if gcd(A, B).degree == 0:
            return common * A, common * B


def interlacing_pair(rng: random.Random, n: int) -> tuple[list[Fraction], Polynomial]:
    """Distinct nodes and a degree n-1 polynomial whose roots strictly interlace them."""
    nodes = sorted(distinct_rationals(rng, n))
    roots = []
    for a, b in zip(nodes, nodes[1:]):
        t = Fraction(rng.randint(1, 9), 10)
        roots.append(a + t * (b - a))
    Q = expand(RootForm(nonzero_rational(rng), roots))
    rng.shuffle(nodes)
    return nodes, Q
