"""Theorem-level cross-checks between closed forms, mex generators and the solver."""

from __future__ import annotations

import json
import math
import time
from dataclasses import asdict, dataclass, field

from . import mex_engine
from .beatty import (
    BeattyPair,
    appendix_offsets,
    appendix_pfold_check,
    census,
    check_complementary_equation,
    kimberling_checks,
    p_complementarity_census,
    partition_census,
)
from .game_rules import Blocking, Modulo, ShiftedChoice, Variant, describe
from .solver import extract_sequences, solve

MAX_WITNESSES = 5


@dataclass
class CheckResult:
    name: str
    passed: bool
    witnesses: list = field(default_factory=list)
    detail: str = ""


@dataclass
class VerificationReport:
    suite: str
    params: dict
    checks: list[CheckResult] = field(default_factory=list)
    timing: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    @property
    def witnesses(self) -> list:
        return [w for c in self.checks if not c.passed for w in c.witnesses]

    def add(self, name, passed, witnesses=(), detail=""):
        ws = sorted(witnesses)[:MAX_WITNESSES]
        if not passed and not ws:
            raise AssertionError(f"failing check {name!r} carries no witness")
        self.checks.append(CheckResult(name, bool(passed), [_plain(w) for w in ws], detail))

    def to_lines(self, timing: bool = False) -> str:
        head = " ".join(f"{k}={v}" for k, v in self.params.items())
        out = []
        for c in self.checks:
            ws = ";".join(_fmt(w) for w in c.witnesses)
            line = f"suite={self.suite} {head} check={c.name} verdict={'pass' if c.passed else 'fail'} witnesses={ws}"
            if c.detail:
                line += f" detail={c.detail.replace(' ', '_')}"
            out.append(line)
        summary = f"suite={self.suite} {head} check=summary verdict={self.verdict} checks={len(self.checks)}"
        if timing:
            summary += f" seconds={self.timing:.3f}"
        out.append(summary)
        return "\n".join(out) + "\n"

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "suite": self.suite,
            "params": self.params,
            "verdict": self.verdict,
            "checks": [asdict(c) for c in self.checks],
        }
        if timing:
            d["seconds"] = round(self.timing, 3)
        return d

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True)


def _plain(w):
    if isinstance(w, tuple):
        return [int(v) for v in w]
    return w


def _fmt(w):
    if isinstance(w, list):
        return "(" + ",".join(map(str, w)) + ")"
    return str(w)


class _timed:
    def __init__(self, report):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.timing = time.perf_counter() - self.t0
        return False


def beatty_positions(pair: BeattyPair, bound: int) -> set[tuple[int, int]]:
    """Ordered positions ``(a_i, b_i)`` and ``(b_i, a_i)`` inside ``[0, bound]^2``."""
    out = set()
    i = 0
    while True:
        ai, bi = pair.a(i), pair.b(i)
        if ai > bound:
            return out
        if bi <= bound:
            out.add((ai, bi))
            out.add((bi, ai))
        i += 1


def shifted_positions(pair: BeattyPair, l: int, bound: int) -> set[tuple[int, int]]:
    """``(a_{ip+l}, b_{ip+l})`` for ``i >= 0`` and ``(b_{ip-l}, a_{ip-l})`` for ``i >= 1``."""
    p = pair.p
    out = set()
    i = 0
    while pair.a(p * i + l) <= bound:
        k = p * i + l
        if pair.b(k) <= bound:
            out.add((pair.a(k), pair.b(k)))
        i += 1
    i = 1
    while pair.a(p * i - l) <= bound:
        k = p * i - l
        if pair.b(k) <= bound:
            out.add((pair.b(k), pair.a(k)))
        i += 1
    return out


def _diff(got, want):
    return sorted(set(got) ^ set(want))


def verify_main_theorem(m: int, p: int, bound: int) -> VerificationReport:
    pair = BeattyPair(m, p)
    rep = VerificationReport("main-theorem", {"m": m, "p": p, "bound": bound})
    with _timed(rep):
        if bound < pair.b(3):
            raise ValueError(f"bound must be at least b_3 = {pair.b(3)}")
        want = beatty_positions(pair, bound)

        got = solve(Blocking(m, p), bound).pset()
        rep.add("i", got == want, _diff(got, want), "blocking game")

        g = math.gcd(m, p)
        got = solve(Modulo(m, 0, p), bound).pset()
        if g == 1:
            rep.add("ii-a", got == want, _diff(got, want), "gcd=1, sets equal")
        else:
            pp = p // g
            w = (0, m * pp)
            ok = (
                w[1] <= bound
                and w not in got
                and pair.a(pp) == 0 and pair.b(pp) == m * pp
                and got != want
            )
            rep.add("ii-a", ok, [w], f"gcd={g}, expected mismatch at (0,{m * pp})")

        got = solve(Modulo(m, m, m * p), bound).pset()
        rep.add("ii-b", got == want, _diff(got, want), f"modulo(l={m},p={m * p})")

        choice = solve(ShiftedChoice(m, p), bound)
        for l, layer in sorted(choice.layers.items()):
            got = layer.pset()
            exp = shifted_positions(pair, l, bound)
            rep.add(f"iii-a[l={l}]", got == exp, _diff(got, exp), "shifted game")
        got = choice.pset()
        rep.add("iii-b", got == want, _diff(got, want), "second player picks the shift")
    return rep


def verify_sequence_lemmas(m: int, p: int, N: int) -> VerificationReport:
    pair = BeattyPair(m, p)
    rep = VerificationReport("lemmas", {"m": m, "p": p, "N": N})
    with _timed(rep):
        if N < p:
            raise ValueError("N must be at least p")
        A = pair.a_seq(N + 1)
        B = pair.b_seq(N + 1)
        direct_b = [pair.b(n) for n in range(N + 1)]
        bad = [n for n in range(N + 1) if direct_b[n] - A[n] != m * n]
        rep.add("difference", not bad, bad, "b_n - a_n = m n")

        steps = {(1, m + 1), (2, m + 2)} if p == 1 else {(0, m), (1, m + 1)}
        bad = [n for n in range(N) if (A[n + 1] - A[n], direct_b[n + 1] - direct_b[n]) not in steps]
        rep.add("gaps", not bad, bad)

        cw = p_complementarity_census(pair, N)
        rep.add("census", cw.uniform(p), cw.violations(p), f"values 0..{cw.hi}")

        bad = []
        for l in range(p):
            pc = partition_census(pair, l, max(1, N // p))
            if not pc.uniform(1):
                bad.append((l, pc.violations(1)[0]))
        rep.add("partition", not bad, bad)

        bad = [n for n in range(1, N + 1) if not check_complementary_equation(pair, n)]
        rep.add("complementary-equation", not bad, bad, "a_(p b_n - n) = b_n - 1")

        big = BeattyPair(m * p, 1)
        Abig, Bbig = big.a_seq(N + 1), big.b_seq(N + 1)
        Afine = pair.a_seq(p * N + 1)[::p]
        bad = [n for n in range(N + 1) if Abig[n] != Afine[n] or Bbig[n] != Afine[n] + m * p * n]
        rep.add("scaling", not bad, bad, "a^(mp,1)_n = a^(m,p)_(pn)")

        if p == 1:
            bad = [n for n in range(1, N + 1) if not kimberling_checks(m, n)]
            rep.add("kimberling", not bad, bad)
    return rep


def _first_mismatch(xs, ys):
    for i, (u, v) in enumerate(zip(xs, ys)):
        if u != v:
            return i
    return None


def uniqueness_witnesses(m: int, p: int, N: int = 200, margin: int = 50) -> list[int]:
    """Indices ``n`` where some single-value change ``x_n +- 1`` still passes.

    A change passes if ``x`` stays non-negative and non-decreasing and the
    census of ``x`` with ``y_{>0}`` (``y = x + m*n``) stays uniform. The census
    window is that of the unchanged sequence, and only indices up to
    ``N - margin`` are perturbed, so truncation cannot hide a violation.
    """
    g = mex_engine.generate_multiset(m, p, N)
    x = list(g.x)
    hi = min(x[-1], g.y[-1]) - 1
    escaped = []
    for n in range(N - margin + 1):
        for delta in (-1, 1):
            xs = x.copy()
            xs[n] += delta
            if xs[n] < 0 or any(u > v for u, v in zip(xs, xs[1:])):
                continue
            ys = [v + m * k for k, v in enumerate(xs)]
            if census(xs, ys[1:], hi).uniform(p):
                escaped.append(n)
    return escaped


def verify_mex_equivalence(m: int, p: int, N: int) -> VerificationReport:
    pair = BeattyPair(m, p)
    rep = VerificationReport("mex", {"m": m, "p": p, "N": N})
    with _timed(rep):
        A, B = pair.a_seq(N + 1), pair.b_seq(N + 1)
        for alg in mex_engine.ALGORITHMS:
            if alg == "fraenkel" and p != 1:
                continue
            gp = mex_engine.generate(alg, m, p, N)
            i = _first_mismatch(gp.x, A)
            j = _first_mismatch(gp.y, B)
            bad = [k for k in (i, j) if k is not None]
            rep.add(alg, not bad, bad)
        n_small = min(N, 200)
        if n_small >= 60:
            bad = uniqueness_witnesses(m, p, n_small)
            rep.add("uniqueness", not bad, bad, "every +-1 change breaks a defining property")
    return rep


def verify_appendix(m: int, p: int, K: int) -> VerificationReport:
    pair = BeattyPair(m, p)
    rep = VerificationReport("appendix", {"m": m, "p": p, "K": K})
    with _timed(rep):
        M, N = appendix_offsets(pair.alpha, pair.beta, p)
        rep.add("offsets", M == p - N + 1 and N <= M, [(M, N)], f"M={M} N={N}")
        ok = appendix_pfold_check(pair.alpha, pair.beta, p, K)
        rep.add("p-fold", ok, [K], f"values 1..{K} each {p} times")
    return rep


FIGURE_GAMES = (Modulo(2, 0, 3), Blocking(2, 3), Modulo(2, 2, 6), ShiftedChoice(2, 3))


def verify_figure_coincidences(bound: int) -> VerificationReport:
    rep = VerificationReport("figures", {"m": 2, "p": 3, "bound": bound})
    with _timed(rep):
        sets = [solve(v, bound).pset() for v in FIGURE_GAMES]
        unordered = [{(min(x, y), max(x, y)) for x, y in s} for s in sets]
        diff = set()
        for u in unordered[1:]:
            diff |= u ^ unordered[0]
        rep.add("coincide", not diff, diff, "four games share one P-set")

        shared = sets[0]
        pair = BeattyPair(2, 3)
        # rows whose P-positions all fit inside the board
        i = 0
        while pair.b(i) <= bound:
            i += 1
        last_a = pair.a(i)  # first index whose partner leaves the board
        safe = range(0, last_a)
        bad = []
        for x in safe:
            row = sum(1 for (px, _) in shared if px == x)
            col = sum(1 for (_, py) in shared if py == x)
            if row != 3 or col != 3:
                bad.append(x)
        rep.add("multiplicity", not bad, bad, f"rows/columns 0..{last_a - 1} hold 3 each")

        sol = sorted(unordered[0], key=lambda cd: cd[1])
        diffs = sorted(d - c for c, d in sol)
        want = [2 * n for n in range(len(sol))]
        bad = [n for n, (u, v) in enumerate(zip(diffs, want)) if u != v]
        if len(diffs) != len(want):
            bad.append(len(diffs))
        rep.add("diagonals", not bad, bad, "d - c runs through 0, 2, 4, ...")
    return rep


@dataclass
class Exploration:
    variant: Variant
    bound: int
    pairs: list[tuple[int, int]]
    differences: list[int]
    arithmetic: bool
    first_violation: int | None
    census_ok: bool
    census_violations: list[int]
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "game": describe(self.variant),
            "bound": self.bound,
            "pairs": [list(p) for p in self.pairs],
            "differences": self.differences,
            "arithmetic_progression": self.arithmetic,
            "first_violation": self.first_violation,
            "census_ok": self.census_ok,
            "census_violations": self.census_violations,
            "note": self.note,
        }


def first_ap_violation(seq) -> int | None:
    """Smallest ``n >= 2`` with ``seq[n] - seq[n-1] != seq[1] - seq[0]``."""
    if len(seq) < 3:
        return None
    step = seq[1] - seq[0]
    for n in range(2, len(seq)):
        if seq[n] - seq[n - 1] != step:
            return n
    return None


def explore(variant: Variant, bound: int) -> Exploration:
    """P-pairs of ``variant`` with difference and census diagnostics (no verdict)."""
    sol = extract_sequences(solve(variant, bound))
    diffs = sol.differences()
    v = first_ap_violation(diffs)
    c, d = sol.c, sol.d
    p = variant.p
    if len(sol.pairs) >= 2:
        hi = min(c[-1], d[-1]) - 1
        cw = census(c, d[1:], hi)
        bad = cw.violations(p)
    else:
        bad = []
    return Exploration(variant, bound, list(sol.pairs), diffs, v is None, v, not bad, bad, sol.note)


def explore_modulo(m: int, l: int, p: int, bound: int) -> Exploration:
    return explore(Modulo(m, l, p), bound)


# Reference rows (c_n, d_n), n = 0..16, for two exploration tables.
REFERENCE_TABLES = {
    "table-3": {
        "variant": Modulo(2, 0, 2),
        "bound": 50,
        "label": "2W^2 / d^(0,2,2)",
        "note": "caption names the blocking game; rows bound to modulo(m=2,l=0,p=2)",
        "c": [0, 0, 1, 1, 2, 2, 3, 4, 4, 5, 5, 6, 7, 7, 8, 8, 9],
        "d": [0, 3, 6, 9, 12, 15, 19, 22, 25, 28, 31, 34, 37, 40, 43, 46, 49],
        "diff": [0, 3, 5, 8, 10, 13, 16, 18, 21, 23, 26, 28, 30, 33, 35, 38, 40],
    },
    "table-4": {
        "variant": Modulo(2, 2, 3),
        "bound": 47,
        "label": "2W^(1,3) / d^(1,2,3)",
        "note": "label (1,2,3) read as residues {0,1} mod 3, i.e. modulo(m=2,l=2,p=3)",
        "c": [0, 0, 1, 1, 2, 3, 3, 4, 4, 5, 6, 6, 7, 8, 8, 9, 9],
        "d": [0, 2, 5, 7, 11, 14, 16, 19, 21, 26, 29, 31, 36, 39, 41, 44, 46],
        "diff": [0, 2, 4, 6, 9, 11, 13, 15, 17, 21, 23, 25, 29, 31, 33, 35, 37],
    },
}


def verify_reference_tables() -> VerificationReport:
    rep = VerificationReport("tables", {"tables": len(REFERENCE_TABLES)})
    with _timed(rep):
        for name, ref in REFERENCE_TABLES.items():
            ex = explore(ref["variant"], ref["bound"])
            got = ex.pairs[: len(ref["d"])]
            want = list(zip(ref["c"], ref["d"]))
            bad = [n for n in range(len(want)) if n >= len(got) or got[n] != want[n]]
            rep.add(f"{name}:rows", not bad, bad, ref["note"])
            got_diff = ex.differences[: len(ref["diff"])]
            bad = [n for n in range(len(ref["diff"])) if n >= len(got_diff) or got_diff[n] != ref["diff"][n]]
            rep.add(f"{name}:differences", not bad, bad)
            want_v = first_ap_violation(ref["diff"])
            ok = ex.first_violation == want_v and want_v is not None
            rep.add(f"{name}:not-arithmetic", ok, [ex.first_violation if ex.first_violation is not None else -1],
                    f"first violation at n={want_v}")
    return rep


SUITES = ("main-theorem", "lemmas", "mex", "figures", "appendix")


def run_suite(name: str, m: int, p: int, bound: int) -> list[VerificationReport]:
    if name == "main-theorem":
        return [verify_main_theorem(m, p, bound)]
    if name == "lemmas":
        return [verify_sequence_lemmas(m, p, bound)]
    if name == "mex":
        return [verify_mex_equivalence(m, p, bound)]
    if name == "figures":
        return [verify_figure_coincidences(bound)]
    if name == "appendix":
        return [verify_appendix(m, p, bound)]
    if name == "tables":
        return [verify_reference_tables()]
    if name == "all":
        return [r for s in SUITES for r in run_suite(s, m, p, bound)]
    raise ValueError(f"unknown suite {name!r}")

