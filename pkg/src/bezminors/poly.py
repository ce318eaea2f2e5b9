"""Exact univariate polynomials over the rationals.

Coefficients are stored ascending: ``coeffs[j]`` multiplies ``x**j``.
All scalars are :class:`fractions.Fraction`; nothing here ever rounds.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction, str]


def to_rational(value: Number) -> Fraction:
    """Parse ``"a"``, ``"a/b"`` (b > 0), an int or a Fraction.

    Floats are refused: they would smuggle binary rounding into exact code.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational")
        num, slash, den = text.partition("/")
        try:
            if slash:
                d = int(den)
                if d <= 0:
                    raise ValueError(f"denominator must be positive in {value!r}")
                return Fraction(int(num), d)
            return Fraction(int(num))
        except ValueError as exc:
            if "denominator" in str(exc):
                raise
            raise ValueError(f"malformed rational {value!r}") from None
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _strip(coeffs: Iterable[Number]) -> tuple[Fraction, ...]:
    cs = [to_rational(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True, init=False)
class Polynomial:
    """Immutable polynomial; the zero polynomial has ``coeffs == ()`` and degree -1."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Number] = ()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    @classmethod
    def constant(cls, c: Number) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Number = 1) -> "Polynomial":
        return cls([0] * degree + [to_rational(c)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, j: int) -> Fraction:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else Fraction(0)

    def padded(self, length: int) -> list[Fraction]:
        """Coefficient list zero-padded to ``length`` entries."""
        if length < len(self.coeffs):
            raise ValueError("cannot pad to a shorter length")
        return list(self.coeffs) + [Fraction(0)] * (length - len(self.coeffs))

    def __call__(self, x: Number) -> Fraction:
        x = to_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coeff(j) + other.coeff(j) for j in range(n))

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    def scale(self, a: Number) -> "Polynomial":
        a = to_rational(a)
        return Polynomial(a * c for c in self.coeffs)

    def derivative(self) -> "Polynomial":
        return Polynomial(j * c for j, c in enumerate(self.coeffs) if j)

    def divide_linear(self, a: Number) -> "Polynomial":
        """Deflate: return ``(p(x) - p(a)) / (x - a)`` by synthetic division."""
        a = to_rational(a)
        n = len(self.coeffs)
        if n <= 1:
            return Polynomial()
        out = [Fraction(0)] * (n - 1)
        acc = Fraction(0)
        for j in range(n - 1, 0, -1):
            acc = acc * a + self.coeffs[j]
            out[j - 1] = acc
        return Polynomial(out)

    def divmod(self, divisor: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Euclidean division by a nonzero divisor."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.leading
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k] / lead
            if c:
                quot[k - dd] = c
                for j, d in enumerate(divisor.coeffs):
                    rem[k - dd + j] -= c * d
        return Polynomial(quot), Polynomial(rem[:dd])

    def __mod__(self, divisor: "Polynomial") -> "Polynomial":
        return self.divmod(divisor)[1]

    def __floordiv__(self, divisor: "Polynomial") -> "Polynomial":
        return self.divmod(divisor)[0]

    def monic(self) -> "Polynomial":
        if self.is_zero:
            raise ValueError("zero polynomial has no monic form")
        return self.scale(1 / self.leading)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for j in range(self.degree, -1, -1):
            c = self.coeffs[j]
            if not c:
                continue
            mag = abs(c)
            body = format_rational(mag)
            if j and mag == 1:
                body = ""
            elif j:
                body += "*"
            if j == 1:
                body += "x"
            elif j > 1:
                body += f"x^{j}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


@dataclass(frozen=True)
class RootForm:
    """``leading * prod(x - r for r in roots)``; roots may repeat."""

    leading: Fraction
    roots: tuple[Fraction, ...]

    def __init__(self, leading: Number, roots: Sequence[Number]):
        lead = to_rational(leading)
        if lead == 0:
            raise ValueError("root form needs a nonzero leading coefficient")
        object.__setattr__(self, "leading", lead)
        object.__setattr__(self, "roots", tuple(to_rational(r) for r in roots))

    @property
    def degree(self) -> int:
        return len(self.roots)


def expand(rf: RootForm) -> Polynomial:
    p = Polynomial.constant(rf.leading)
    for r in rf.roots:
        p = p * Polynomial((-r, 1))
    return p


def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean remainder sequence."""
    if p.is_zero and q.is_zero:
        raise ValueError("undefined gcd")
    a, b = p, q
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def squarefree_part(p: Polynomial) -> Polynomial:
    """``p / gcd(p, p')``, made monic; same distinct roots, all simple."""
    if p.is_zero:
        raise ValueError("zero polynomial has no squarefree part")
    if p.degree == 0:
        return Polynomial.constant(1)
    g = gcd(p, p.derivative())
    quot, rem = p.divmod(g)
    assert rem.is_zero
    return quot.monic()
