"""The p-complementary Beatty pair ``a^{m,p}``, ``b^{m,p}`` and its identities.

``a_n = floor(n * phi_{mp} / p)`` and ``b_n = floor(n * (phi_{mp} + mp) / p)``
with ``phi_k = (2 - k + sqrt(k^2 + 4)) / 2``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

from .exact_arith import (
    SurdRatio,
    floor_recip,
    floor_scale,
    isqrt,
    reciprocal_sum_equals,
)


def phi(k: int) -> SurdRatio:
    """Positive root of ``x^2 + (k - 2) x - 1 = 0``; ``phi(1)`` is the golden ratio."""
    if k < 1:
        raise ValueError("phi is defined for k >= 1")
    return SurdRatio(2 - k, 1, k * k + 4, 2)


@dataclass(frozen=True)
class BeattyPair:
    """Generator of ``a_n`` and ``b_n`` for fixed ``m`` and ``p``."""

    m: int
    p: int

    def __post_init__(self):
        if self.m < 1 or self.p < 1:
            raise ValueError("m and p must be positive")

    @property
    def D(self) -> int:
        return (self.m * self.p) ** 2 + 4

    @cached_property
    def alpha(self) -> SurdRatio:
        k = self.m * self.p
        return SurdRatio(2 - k, 1, self.D, 2 * self.p)

    @cached_property
    def beta(self) -> SurdRatio:
        k = self.m * self.p
        return SurdRatio(2 + k, 1, self.D, 2 * self.p)

    def a(self, n: int) -> int:
        return floor_scale(self.alpha, n)

    def b(self, n: int) -> int:
        return floor_scale(self.beta, n)

    def a_seq(self, count: int) -> list[int]:
        """``[a_0, ..., a_{count-1}]``."""
        u, D, v = 2 - self.m * self.p, self.D, 2 * self.p
        return [(n * u + isqrt(n * n * D)) // v for n in range(count)]

    def b_seq(self, count: int) -> list[int]:
        m = self.m
        return [x + m * n for n, x in enumerate(self.a_seq(count))]


def a(m: int, p: int, n: int) -> int:
    return BeattyPair(m, p).a(n)


def b(m: int, p: int, n: int) -> int:
    return BeattyPair(m, p).b(n)


@dataclass
class CensusWindow:
    """Multiplicities of every value in ``[lo, hi]``."""

    lo: int
    hi: int
    counts: dict[int, int] = field(default_factory=dict)

    def uniform(self, p: int) -> bool:
        return all(self.counts[v] == p for v in range(self.lo, self.hi + 1))

    def violations(self, p: int) -> list[int]:
        return [v for v in range(self.lo, self.hi + 1) if self.counts[v] != p]


def census(xs, ys, hi: int, lo: int = 0) -> CensusWindow:
    """Count the values of ``xs`` and ``ys`` together on ``[lo, hi]``."""
    c = Counter(v for v in xs if lo <= v <= hi)
    c.update(v for v in ys if lo <= v <= hi)
    return CensusWindow(lo, hi, {v: c.get(v, 0) for v in range(lo, hi + 1)})


def p_complementarity_census(pair: BeattyPair, index_bound: int) -> CensusWindow:
    """Census of ``a_0..a_I`` and ``b_1..b_I`` over the window that ``I`` fully determines.

    ``b_0`` is left out: with it the value 0 would be counted ``p + 1`` times.
    """
    if index_bound < 1:
        raise ValueError("index_bound must be >= 1")
    xs = pair.a_seq(index_bound + 1)
    ys = pair.b_seq(index_bound + 1)[1:]
    hi = min(xs[-1], ys[-1]) - 1
    return census(xs, ys, hi)


def partition_subsequences(pair: BeattyPair, l: int, count: int) -> tuple[list[int], list[int]]:
    """``(a_{p*i+l})_{0 <= i < count}`` and ``(b_{p*i-l})_{1 <= i <= count}``.

    Each such pair of subsequences is complementary (multiplicity one).
    """
    p = pair.p
    if not 0 <= l < p:
        raise ValueError(f"l must satisfy 0 <= l < {p}")
    if count < 1:
        raise ValueError("count must be positive")
    xs = [pair.a(p * i + l) for i in range(count)]
    ys = [pair.b(p * i - l) for i in range(1, count + 1)]
    return xs, ys


def partition_census(pair: BeattyPair, l: int, count: int) -> CensusWindow:
    xs, ys = partition_subsequences(pair, l, count)
    return census(xs, ys, min(xs[-1], ys[-1]) - 1)


def phi_index(pair: BeattyPair, n: int) -> int:
    """Index ``p*b_n - n``, cross-checked against ``(a_n + (mp-1) b_n) / m``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    m, p = pair.m, pair.p
    an, bn = pair.a(n), pair.b(n)
    num = an + (m * p - 1) * bn
    q, r = divmod(num, m)
    idx = p * bn - n
    if r != 0 or q != idx:
        raise AssertionError(f"phi_index formulas disagree at n={n}: {num}/{m} vs {idx}")
    return idx


def check_complementary_equation(pair: BeattyPair, n: int) -> bool:
    """``a_{phi_n} == b_n - 1`` with ``phi_n`` the greatest such index.

    For ``p > 1`` the next term is ``b_n`` itself; for ``p = 1`` the sequences
    are disjoint and it only has to exceed ``b_n - 1``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    k = phi_index(pair, n)
    bn = pair.b(n)
    nxt = pair.a(k + 1)
    if pair.a(k) != bn - 1:
        return False
    return nxt == bn if pair.p > 1 else nxt > bn - 1


def kimberling_checks(m: int, n: int) -> bool:
    """For ``p = 1``: ``a_{b_n} == a_n + b_n`` and ``b_n - 1 == a_{b_n - n}``."""
    pair = BeattyPair(m, 1)
    an, bn = pair.a(n), pair.b(n)
    return pair.a(bn) == an + bn and bn - 1 == pair.a(bn - n)


def _check_appendix_inputs(alpha: SurdRatio, beta: SurdRatio, p: int) -> None:
    if p < 1:
        raise ValueError("p must be positive")
    if not (alpha.is_irrational and beta.is_irrational):
        raise ValueError("alpha and beta must be irrational")
    if not alpha < beta:
        raise ValueError("alpha must be smaller than beta")
    if not reciprocal_sum_equals(alpha, beta, p):
        raise ValueError(f"1/alpha + 1/beta != {p}")


def appendix_offsets(alpha: SurdRatio, beta: SurdRatio, p: int) -> tuple[int, int]:
    """``M = floor(1/alpha) + 1`` and ``N = floor(1/beta) + 1``; always ``M + N == p + 1``."""
    _check_appendix_inputs(alpha, beta, p)
    M = floor_recip(alpha) + 1
    N = floor_recip(beta) + 1
    if M + N != p + 1:
        raise AssertionError(f"M + N = {M + N}, expected {p + 1}")
    if N > M:
        raise AssertionError(f"N = {N} exceeds M = {M}")
    return M, N


def appendix_pfold_check(alpha: SurdRatio, beta: SurdRatio, p: int, K: int) -> bool:
    """Do ``{floor(n alpha)}_{n >= M}`` and ``{floor(n beta)}_{n >= N}`` cover ``1..K`` exactly ``p`` times?

    Also checks that the couples ``(floor(n alpha), floor(n beta))``, ``0 <= n < M``,
    hold exactly ``p + 1`` zeros between them.
    """
    M, N = appendix_offsets(alpha, beta, p)
    counts = Counter()
    for s, start in ((alpha, M), (beta, N)):
        n = start
        while True:
            v = floor_scale(s, n)
            if v > K:
                break
            counts[v] += 1
            n += 1
    if counts.get(0, 0):
        return False
    if any(counts.get(k, 0) != p for k in range(1, K + 1)):
        return False
    zeros = sum((floor_scale(alpha, n) == 0) + (floor_scale(beta, n) == 0) for n in range(M))
    return zeros == p + 1
