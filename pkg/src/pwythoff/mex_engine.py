"""Minimal-exclusive generators for the pair ``(a^{m,p}, b^{m,p})``.

Each generator builds ``x`` by a mex-type recurrence and sets
``y_n = x_n + m*n``; none of them looks at the closed form, so they serve as
independent oracles for :mod:`pwythoff.beatty`.

Note on the multiset recurrence: counting both ``x_0`` and ``y_0`` makes the
value 0 reach multiplicity ``p`` one step early (for ``(m, p) = (2, 3)`` it
yields ``x_2 = 1`` instead of 0). :func:`generate_multiset` therefore counts
``y_j`` only for ``j >= 1``, pairing ``x`` with ``y_{>0}``. This is the only
reading under which the recurrence reproduces the closed form.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

ALGORITHMS = ("fraenkel", "multiset", "congruence", "residue")


def mex(values) -> int:
    """Least non-negative integer not in ``values``."""
    s = set(values)
    i = 0
    while i in s:
        i += 1
    return i


class CountTable:
    """Multiplicity table ``value -> count`` with a ``mex_p`` query."""

    def __init__(self, counts=None):
        self.counts = Counter()
        if counts:
            for k, c in dict(counts).items():
                if c < 0:
                    raise ValueError("multiplicities must be non-negative")
                self.counts[k] = c

    def add(self, value: int, times: int = 1) -> None:
        self.counts[value] += times

    def __getitem__(self, value: int) -> int:
        return self.counts.get(value, 0)


def mex_p(xi: CountTable, p: int) -> int:
    """Least ``i >= 0`` whose multiplicity in ``xi`` is below ``p``."""
    if p < 1:
        raise ValueError("p must be positive")
    i = 0
    while xi[i] >= p:
        i += 1
    return i


@dataclass(frozen=True)
class GeneratedPair:
    m: int
    p: int
    x: tuple[int, ...]
    y: tuple[int, ...]
    algorithm: str

    def __post_init__(self):
        if any(yn != xn + self.m * n for n, (xn, yn) in enumerate(zip(self.x, self.y))):
            raise AssertionError("y_n != x_n + m*n")


class _IncrementalMex:
    """A growing set whose mex only moves forward."""

    __slots__ = ("seen", "low")

    def __init__(self):
        self.seen = set()
        self.low = 0

    def add(self, v: int) -> None:
        self.seen.add(v)

    def mex(self) -> int:
        while self.low in self.seen:
            self.low += 1
        return self.low


def _check(m, p, N):
    if m < 1 or p < 1:
        raise ValueError("m and p must be positive")
    if N < 0:
        raise ValueError("N must be non-negative")


def generate_fraenkel(m: int, N: int) -> GeneratedPair:
    """``x_n = mex{x_i, y_i : i < n}`` (the case ``p = 1``)."""
    _check(m, 1, N)
    seen = _IncrementalMex()
    x, y = [], []
    for n in range(N + 1):
        xn = seen.mex()
        yn = xn + m * n
        x.append(xn)
        y.append(yn)
        seen.add(xn)
        seen.add(yn)
    return GeneratedPair(m, 1, tuple(x), tuple(y), "fraenkel")


def generate_multiset(m: int, p: int, N: int) -> GeneratedPair:
    """``x_n = mex^p`` of the multiset ``{x_j : j < n} + {y_j : 1 <= j < n}``."""
    _check(m, p, N)
    xi = CountTable()
    low = 0
    x, y = [], []
    for n in range(N + 1):
        while xi[low] >= p:
            low += 1
        xn = low
        yn = xn + m * n
        x.append(xn)
        y.append(yn)
        xi.add(xn)
        if n > 0:
            xi.add(yn)
    return GeneratedPair(m, p, tuple(x), tuple(y), "multiset")


def generate_congruence(m: int, p: int, N: int) -> GeneratedPair:
    """``x_n = mex({x_i : i < n, i = n mod p} | {y_i : i < n, i = -n mod p})``.

    The excluded (infinite) entries are simply left out of the set.
    """
    _check(m, p, N)
    # pools[r] collects everything seen by indices n = r (mod p)
    pools = [_IncrementalMex() for _ in range(p)]
    x, y = [], []
    for n in range(N + 1):
        xn = pools[n % p].mex()
        yn = xn + m * n
        x.append(xn)
        y.append(yn)
        pools[n % p].add(xn)
        pools[(-n) % p].add(yn)
    return GeneratedPair(m, p, tuple(x), tuple(y), "congruence")


def generate_residue(m: int, p: int, N: int) -> GeneratedPair:
    """``p`` interleaved chains, chain ``l`` holding the indices ``p*n + l``.

    ``x_{pn} = mex{x_{pi}, y_{pi} : i < n}`` and, for ``0 < l < p``,
    ``x_{pn+l} = mex{x_{pi+l}, y_{p(i+1)-l} : i < n}``.
    """
    _check(m, p, N)
    chains = [_IncrementalMex() for _ in range(p)]
    x = [0] * (N + 1)
    rounds = N // p + 1
    for n in range(rounds):
        fresh = {}
        for l in range(p):
            k = p * n + l
            fresh[l] = chains[l].mex()
            if k <= N:
                x[k] = fresh[l]
        # round n contributes x_{pn+l} to chain l and y_{pn+l} to chain p-l
        for l in range(p):
            k = p * n + l
            chains[l].add(fresh[l])
            chains[(-l) % p].add(fresh[l] + m * k)
    y = [xn + m * n for n, xn in enumerate(x)]
    return GeneratedPair(m, p, tuple(x), tuple(y), "residue")


def generate(algorithm: str, m: int, p: int, N: int) -> GeneratedPair:
    if algorithm == "fraenkel":
        if p != 1:
            raise ValueError("the fraenkel recurrence only covers p = 1")
        return generate_fraenkel(m, N)
    if algorithm == "multiset":
        return generate_multiset(m, p, N)
    if algorithm == "congruence":
        return generate_congruence(m, p, N)
    if algorithm == "residue":
        return generate_residue(m, p, N)
    raise ValueError(f"unknown algorithm {algorithm!r}")
