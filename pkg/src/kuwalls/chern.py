"""Chern-character ring and Riemann-Roch pairing on a degree-d Fano threefold.

The threefolds in question have Picard group generated by an ample class H
with -K = 2H and degree d = H^3 in {1..5}.  A cohomology class is stored as
its coefficients with respect to the basis (1, H, H^2, H^3), so all degrees
share one code path and every value is an exact ``fractions.Fraction``.

The Euler characteristic is computed by multiplying with the Todd class and
integrating the top coefficient against H^3 = d.  With H.c2 = 12 (forced by
chi(O) = 1 and c1 = 2H) this collapses to the closed form

    chi(E) = ch0 + ch1 * (d + 3) / 3 + (ch2 + ch3) * d.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]

DEGREES = (1, 2, 3, 4, 5)


def _frac(value: Rational) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True)
class ChernVector:
    """Exact rational coefficients (ch0, ch1, ch2, ch3) of a class in H^*(Y, Q)."""

    r: Fraction
    c1: Fraction
    c2: Fraction
    c3: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", _frac(self.r))
        object.__setattr__(self, "c1", _frac(self.c1))
        object.__setattr__(self, "c2", _frac(self.c2))
        object.__setattr__(self, "c3", _frac(self.c3))

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.r, self.c1, self.c2, self.c3)

    def truncated(self) -> tuple[Fraction, Fraction, Fraction]:
        """The (ch0, ch1, ch2) part that tilt stability sees."""
        return (self.r, self.c1, self.c2)

    def __add__(self, other: "ChernVector") -> "ChernVector":
        return ChernVector(self.r + other.r, self.c1 + other.c1, self.c2 + other.c2, self.c3 + other.c3)

    def __sub__(self, other: "ChernVector") -> "ChernVector":
        return ChernVector(self.r - other.r, self.c1 - other.c1, self.c2 - other.c2, self.c3 - other.c3)

    def __neg__(self) -> "ChernVector":
        return ChernVector(-self.r, -self.c1, -self.c2, -self.c3)

    def scale(self, factor: Rational) -> "ChernVector":
        f = _frac(factor)
        return ChernVector(f * self.r, f * self.c1, f * self.c2, f * self.c3)

    def __rmul__(self, factor: Rational) -> "ChernVector":
        return self.scale(factor)


UNIT = ChernVector(1, 0, 0, 0)
ZERO = ChernVector(0, 0, 0, 0)


@dataclass(frozen=True)
class FanoContext:
    """Degree d = H^3 together with the intersection data driving Riemann-Roch.

    ``h_c2`` is H.c2; the value 12 follows from chi(O) = 1 via td3 = c1 c2 / 24
    and is kept as a field so that any degree-specific correction would have a
    single home.  ``todd_vector`` is the Todd class in (1, H, H^2, H^3)
    coefficients.
    """

    degree: int
    h_c2: int = 12

    def __post_init__(self) -> None:
        if self.degree not in DEGREES:
            raise ValueError(f"degree must be one of {DEGREES}, got {self.degree}")

    @functools.cached_property
    def todd_vector(self) -> ChernVector:
        d = self.degree
        return ChernVector(1, 1, Fraction(4 * d + self.h_c2, 12 * d), Fraction(self.h_c2, 12 * d))

    @functools.cached_property
    def chi_weights(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """Per-coefficient integration weights: chi(x) = sum of x_k * weight_k.

        weight_k is the integral of H^k against the complementary Todd part;
        with h_c2 = 12 they are (1, (d+3)/3, d, d).
        """
        d = self.degree
        return (Fraction(self.h_c2, 12), Fraction(4 * d + self.h_c2, 12), Fraction(d), Fraction(d))

    def integrate(self, x: ChernVector) -> Fraction:
        """Integrate a class over Y: the H^3 coefficient times H^3 = d."""
        return x.c3 * self.degree


def ring_multiply(x: ChernVector, y: ChernVector) -> ChernVector:
    """Graded product with H^k . H^l = H^(k+l); terms above H^3 vanish."""
    a = x.coefficients()
    b = y.coefficients()
    out = [Fraction(0)] * 4
    for i in range(4):
        for j in range(4 - i):
            out[i + j] += a[i] * b[j]
    return ChernVector(*out)


def exp_h(t: Rational) -> ChernVector:
    """The truncated exponential exp(tH) = (1, t, t^2/2, t^3/6)."""
    t = _frac(t)
    return ChernVector(1, t, t * t / 2, t ** 3 / 6)


def twist(x: ChernVector, beta: Rational) -> ChernVector:
    """Twisted character ch^beta = ch . exp(-beta H)."""
    return ring_multiply(x, exp_h(-_frac(beta)))


def dual(x: ChernVector) -> ChernVector:
    """Chern character of the (derived) dual: odd coefficients flip sign."""
    return ChernVector(x.r, -x.c1, x.c2, -x.c3)


def line_bundle(n: Rational) -> ChernVector:
    """ch(O(nH)) = exp(nH)."""
    return exp_h(n)


def canonical_class() -> ChernVector:
    """ch(K) = exp(-2H); the index-2 condition -K = 2H."""
    return exp_h(-2)


def hrr_chi(ctx: FanoContext, x: ChernVector) -> Fraction:
    """Euler characteristic of any object with character ``x``, by Riemann-Roch.

    Equal to integrating x . td(Y); written with the cached weights so the
    hot path stays cheap.
    """
    w0, w1, w2, w3 = ctx.chi_weights
    return x.r * w0 + x.c1 * w1 + x.c2 * w2 + x.c3 * w3


def chi_pair(ctx: FanoContext, x: ChernVector, y: ChernVector) -> Fraction:
    """Euler pairing chi(E, F) = chi(E^v . F), with the product expanded in place."""
    w0, w1, w2, w3 = ctx.chi_weights
    a0, a1, a2, a3 = x.coefficients()
    b0, b1, b2, b3 = y.coefficients()
    return (
        w0 * (a0 * b0)
        + w1 * (a0 * b1 - a1 * b0)
        + w2 * (a0 * b2 - a1 * b1 + a2 * b0)
        + w3 * (a0 * b3 - a1 * b2 + a2 * b1 - a3 * b0)
    )


def lattice_denominators(ctx: FanoContext) -> tuple[int, int, int]:
    """Default denominators (for ch1, ch2, ch3) of classes of genuine objects."""
    d = ctx.degree
    return (1, math.lcm(2, d), math.lcm(6, d))


def on_integral_lattice(ctx: FanoContext, x: ChernVector, denominators: tuple[int, int, int] | None = None) -> bool:
    """Whether ch0 is an integer and ch1..ch3 lie on the configured lattice."""
    d1, d2, d3 = denominators if denominators is not None else lattice_denominators(ctx)
    return (
        x.r.denominator == 1
        and (x.c1 * d1).denominator == 1
        and (x.c2 * d2).denominator == 1
        and (x.c3 * d3).denominator == 1
    )
