"""Exact rationals, real quadratic numbers a + b*sqrt(d), and univariate polynomials.

Rationals are ``fractions.Fraction``; they are already kept in lowest terms
with a positive denominator, which is all the canonical-form guarantee the
rest of the package relies on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Sequence, Union

from .errors import MixedRadicandError

Rational = Fraction
RationalLike = Union[int, Fraction]

_SMALL_PRIMES: list[int] = []


def _small_primes(limit: int = 2000) -> list[int]:
    if not _SMALL_PRIMES:
        sieve = bytearray([1]) * (limit + 1)
        sieve[0:2] = b"\x00\x00"
        for p in range(2, math.isqrt(limit) + 1):
            if sieve[p]:
                sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
        _SMALL_PRIMES.extend(i for i, flag in enumerate(sieve) if flag)
    return _SMALL_PRIMES


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse "p/q", "p", or a decimal literal such as "1.06" or "1e-9" exactly."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_rational(x: RationalLike) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_float(x) -> str:
    """15-significant-digit rendering for reports; never fed back into decisions."""
    return f"{float(x):.15g}"


def squarefree_split(n: int) -> tuple[int, int]:
    """Return (s, d) with n = s**2 * d, stripping square factors found by trial division.

    Only small prime squares and a perfect-square cofactor are removed, so ``d``
    may retain a large square factor; equal inputs always give equal outputs,
    which is what keeps radicands consistent.
    """
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0, 0
    s = 1
    for p in _small_primes():
        pp = p * p
        if pp > n:
            break
        while n % pp == 0:
            n //= pp
            s *= p
    r = math.isqrt(n)
    if r * r == n:
        return s * r, 1
    return s, n


@total_ordering
@dataclass(frozen=True)
class QuadraticNumber:
    """Exact real number a + b*sqrt(d) with rational a, b and integer d >= 0."""

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 0

    def __post_init__(self):
        a, b, d = Fraction(self.a), Fraction(self.b), int(self.d)
        if d < 0:
            raise ValueError("radicand must be nonnegative")
        if b and d:
            s, core = squarefree_split(d)
            b *= s
            d = core
            if d == 1:
                a, b, d = a + b, Fraction(0), 0
        if not b or not d:
            b, d = Fraction(0), 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    @classmethod
    def sqrt_of(cls, r: RationalLike) -> QuadraticNumber:
        """sqrt(r) for rational r >= 0, written as (s/q)*sqrt(d)."""
        r = Fraction(r)
        if r < 0:
            raise ValueError("square root of a negative rational")
        # sqrt(p/q) = sqrt(p*q)/q
        s, d = squarefree_split(r.numerator * r.denominator)
        coeff = Fraction(s, r.denominator)
        if d <= 1:
            return cls(coeff * d)
        return cls(Fraction(0), coeff, d)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def _coerce(self, other) -> QuadraticNumber | None:
        if isinstance(other, QuadraticNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(Fraction(other))
        return None

    def _radicand(self, other: QuadraticNumber) -> int:
        if self.d and other.d and self.d != other.d:
            raise MixedRadicandError(f"sqrt({self.d}) and sqrt({other.d}) do not combine")
        return self.d or other.d

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = self._radicand(other)
        return QuadraticNumber(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = self._radicand(other)
        return QuadraticNumber(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadraticNumber:
        return QuadraticNumber(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        return self * other.conjugate() * QuadraticNumber(1 / n)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return QuadraticNumber(1) / (self ** (-k))
        result, base = QuadraticNumber(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def sign(self) -> int:
        return quad_sign(self)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() == 0

    def __lt__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __str__(self):
        if self.b == 0:
            return format_rational(self.a)
        return f"{format_rational(self.a)} + {format_rational(self.b)}*sqrt({self.d})"

    def __repr__(self):
        return f"QuadraticNumber({self})"


def _sgn(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def quad_sign(x: QuadraticNumber) -> int:
    """Exact sign of a + b*sqrt(d), comparing a**2 with b**2*d; no floats."""
    sa = _sgn(x.a)
    sb = _sgn(x.b) if x.d else 0
    if sb == 0:
        return sa
    if sa == 0:
        return sb
    if sa == sb:
        return sa
    lhs, rhs = x.a * x.a, x.b * x.b * x.d
    if lhs > rhs:
        return sa
    if lhs < rhs:
        return sb
    return 0


def parse_quadratic(text: str) -> QuadraticNumber:
    """Inverse of ``str(QuadraticNumber)``: "a", or "a + b*sqrt(d)"."""
    text = text.strip()
    if "sqrt(" not in text:
        return QuadraticNumber(parse_rational(text))
    head, _, tail = text.partition(" + ")
    coeff, _, rad = tail.partition("*sqrt(")
    return QuadraticNumber(parse_rational(head), parse_rational(coeff), int(rad.rstrip(")")))


class UniPolynomial:
    """Polynomial in t with exact rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def monomial(cls, coeff: RationalLike, degree: int) -> UniPolynomial:
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other: UniPolynomial) -> UniPolynomial:
        if not isinstance(other, UniPolynomial):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPolynomial(self.coeff(i) + other.coeff(i) for i in range(n))

    def __neg__(self) -> UniPolynomial:
        return UniPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: UniPolynomial) -> UniPolynomial:
        return self + (-other)

    def __mul__(self, other) -> UniPolynomial:
        if isinstance(other, (int, Fraction)):
            return UniPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, UniPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, UniPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, t):
        return poly_eval(self, t)

    def __repr__(self):
        return f"UniPolynomial([{', '.join(format_rational(c) for c in self.coeffs)}])"


def poly_eval(p: UniPolynomial | Sequence[RationalLike], t):
    """Horner evaluation; works for rational or QuadraticNumber arguments."""
    coeffs = p.coeffs if isinstance(p, UniPolynomial) else p
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc
