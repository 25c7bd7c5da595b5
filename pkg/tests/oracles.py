"""Slow reference implementations written straight from the definitions.

They share no code with the package and serve as independent oracles.
"""

from decimal import Decimal, getcontext
from functools import lru_cache

getcontext().prec = 80


def beatty_decimal(m, p, n):
    """``(a_n, b_n)`` from 80-digit decimal arithmetic."""
    k = m * p
    root = Decimal(k * k + 4).sqrt()
    alpha = (Decimal(2 - k) + root) / (2 * p)
    beta = (Decimal(2 + k) + root) / (2 * p)
    return int(n * alpha), int(n * beta)


def naive_mex_pairs(m, p, count):
    """Greedy ``x_n = mex^p`` over the multiset of earlier ``x`` and ``y_{>0}``."""
    xs, ys = [0], [0]
    for n in range(1, count):
        seen = xs + ys[1:]
        v = 0
        while seen.count(v) >= p:
            v += 1
        xs.append(v)
        ys.append(v + m * n)
    return xs, ys


def _cut(rule, x, y):
    c = rule.get("cut")
    return c is not None and x < c[0] and y < c[1]


def raw_moves(rule, x, y):
    """List of ``(target, blockable)``; a target may appear twice with both flags."""
    w = rule["bishop"]
    out = []
    for s in range(x + 1):
        for t in range(y + 1):
            if s + t == 0 or _cut(rule, x - s, y - t):
                continue
            single = s == 0 or t == 0
            length = s + t
            if abs(s - t) < w and not (single and rule.get("block_from") is not None
                                       and length >= rule["block_from"]):
                out.append(((x - s, y - t), False))
            elif single and rule["rook"](length):
                out.append(((x - s, y - t), rule.get("block_from") is not None
                            and length >= rule["block_from"]))
    return out


def brute_p(rule, x, y):
    budget = rule.get("budget", 0)

    @lru_cache(maxsize=None)
    def p(x, y):
        moves = raw_moves(rule, x, y)
        if any(not b and p(*t) for t, b in moves):
            return False
        return sum(1 for t, b in moves if b and p(*t)) <= budget

    return p(x, y)


def rule_blocking(m, p):
    return {"bishop": m, "rook": lambda k: True, "block_from": m, "budget": p - 1}


def rule_blocking_l(m, p, l):
    return {"bishop": m, "rook": lambda k: True, "block_from": l, "budget": p - 1}


def rule_modulo(m, l, p):
    if l == 0:
        return {"bishop": m, "rook": lambda k: k % p == 0}
    return {"bishop": m, "rook": lambda k: k % p < l}


def rule_shifted(m, p, l):
    return {"bishop": m * p, "rook": lambda k: True,
            "cut": (m * (p - l), m * l) if l else None}


def rule_rect(m, p, u, v):
    return {"bishop": m * p, "rook": lambda k: True, "cut": (u, v)}
