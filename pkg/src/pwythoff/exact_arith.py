"""Exact floors of integer multiples of quadratic irrationals.

Every sequence value in this package goes through :func:`floor_scale`, which
never touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def isqrt(n: int) -> int:
    """Largest ``r`` with ``r * r <= n``."""
    if n < 0:
        raise ValueError("isqrt of a negative number")
    return math.isqrt(n)


def _squarefree_split(d: int) -> tuple[int, int]:
    """Write ``d = k*k * s`` with ``s`` squarefree; returns ``(k, s)``."""
    k, s, f = 1, d, 2
    while f * f <= s:
        while s % (f * f) == 0:
            s //= f * f
            k *= f
        f += 1
    return k, s


def _sign_surd(a: Fraction, b: Fraction, d: int) -> int:
    # sign of a + b*sqrt(d), d squarefree (or 1)
    if b == 0 or d == 0:
        return (a > 0) - (a < 0)
    if d == 1:
        x = a + b
        return (x > 0) - (x < 0)
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    if sa == 0:
        return sb
    if sa == sb:
        return sa
    # opposite signs: the larger magnitude wins, and they never tie
    return sa if a * a > b * b * d else sb


@dataclass(frozen=True, eq=False)
class SurdRatio:
    """The positive real number ``(u + t*sqrt(D)) / v``.

    ``t == 0`` gives a rational value; otherwise ``D`` must not be a perfect
    square. Equality and ordering compare values, not fields.
    """

    u: int
    t: int
    D: int
    v: int

    def __post_init__(self):
        for name in ("u", "t", "D", "v"):
            if not isinstance(getattr(self, name), int):
                raise TypeError(f"{name} must be an int")
        if self.t < 0 or self.D < 0:
            raise ValueError("t and D must be non-negative")
        if self.v <= 0:
            raise ValueError("v must be positive")
        if self.t > 0 and isqrt(self.D) ** 2 == self.D:
            raise ValueError(f"D={self.D} is a perfect square; use t=0 for rationals")
        if self.sign() <= 0:
            raise ValueError(f"{self!r} does not represent a positive number")

    @property
    def is_irrational(self) -> bool:
        return self.t > 0

    def canonical(self) -> tuple[Fraction, Fraction, int]:
        """``(a, b, s)`` with value ``a + b*sqrt(s)`` and ``s`` squarefree (``b = 0`` if rational)."""
        if self.t == 0:
            return Fraction(self.u, self.v), Fraction(0), 1
        k, s = _squarefree_split(self.D)
        return Fraction(self.u, self.v), Fraction(self.t * k, self.v), s

    def sign(self) -> int:
        if self.t == 0:
            return (self.u > 0) - (self.u < 0)
        if self.u >= 0:
            return 1
        return 1 if self.t * self.t * self.D > self.u * self.u else (
            0 if self.t * self.t * self.D == self.u * self.u else -1)

    def __float__(self) -> float:
        return (self.u + self.t * math.sqrt(self.D)) / self.v

    def __eq__(self, other):
        if not isinstance(other, SurdRatio):
            return NotImplemented
        return _compare(self, other) == 0

    def __hash__(self):
        return hash(self.canonical())

    def __lt__(self, other):
        if not isinstance(other, SurdRatio):
            return NotImplemented
        return _compare(self, other) < 0

    def __le__(self, other):
        if not isinstance(other, SurdRatio):
            return NotImplemented
        return _compare(self, other) <= 0

    def __gt__(self, other):
        if not isinstance(other, SurdRatio):
            return NotImplemented
        return _compare(self, other) > 0

    def __ge__(self, other):
        if not isinstance(other, SurdRatio):
            return NotImplemented
        return _compare(self, other) >= 0

    def __str__(self):
        if self.t == 0:
            return f"{self.u}/{self.v}"
        surd = f"sqrt({self.D})" if self.t == 1 else f"{self.t}*sqrt({self.D})"
        return f"({self.u} + {surd})/{self.v}"


def _compare(x: SurdRatio, y: SurdRatio) -> int:
    a1, b1, s1 = x.canonical()
    a2, b2, s2 = y.canonical()
    if b1 == 0 or b2 == 0 or s1 == s2:
        s = s1 if b1 != 0 else s2
        return _sign_surd(a1 - a2, b1 - b2, s)
    # Distinct squarefree radicands: 1, sqrt(s1), sqrt(s2) are linearly
    # independent over Q, so the difference is never zero. Refine dyadic
    # brackets until the sign is decided.
    bits = 32
    while True:
        lo1, hi1 = _bracket(x, bits)
        lo2, hi2 = _bracket(y, bits)
        if hi1 < lo2:
            return -1
        if hi2 < lo1:
            return 1
        bits *= 2


def _bracket(s: SurdRatio, bits: int) -> tuple[Fraction, Fraction]:
    scale = 1 << bits
    r = isqrt(s.t * s.t * s.D * scale * scale)
    lo = Fraction(s.u * scale + r, s.v * scale)
    hi = Fraction(s.u * scale + r + 1, s.v * scale)
    return lo, hi


def floor_scale(s: SurdRatio, n: int) -> int:
    """``floor(n * s)`` computed in integers.

    ``floor((n*u + n*t*sqrt(D)) / v) == (n*u + isqrt(n*n*t*t*D)) // v`` since
    ``n*t*sqrt(D)`` is never an integer for ``n, t > 0`` and ``v > 0``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return (n * s.u + isqrt(n * n * s.t * s.t * s.D)) // s.v


def floor_recip(s: SurdRatio) -> int:
    """``floor(1 / s)``: the largest ``k >= 0`` with ``floor(k * s) == 0``."""
    if floor_scale(s, 1) >= 1:
        return 0
    hi = 2
    while floor_scale(s, hi) == 0:
        hi *= 2
    lo = hi // 2  # floor_scale(s, lo) == 0 < floor_scale(s, hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if floor_scale(s, mid) == 0:
            lo = mid
        else:
            hi = mid
    return lo


def reciprocal_sum_equals(alpha: SurdRatio, beta: SurdRatio, p: int) -> bool:
    """Decide ``1/alpha + 1/beta == p`` exactly (``alpha + beta == p*alpha*beta``)."""
    a1, b1, s1 = alpha.canonical()
    a2, b2, s2 = beta.canonical()
    if b1 != 0 and b2 != 0 and s1 != s2:
        return False
    s = s1 if b1 != 0 else s2
    # (a1 + b1 r)(a2 + b2 r) with r*r == s
    prod_rat = a1 * a2 + b1 * b2 * s
    prod_irr = a1 * b2 + a2 * b1
    return a1 + a2 == p * prod_rat and b1 + b2 == p * prod_irr
