"""Acceptance criteria 1-10, one test each, with pinned time limits.

Every test prints a single ``CRITERION <n> ... PASS|FAIL`` line.
"""

import io
import time
from contextlib import redirect_stdout
from math import gcd
from pathlib import Path

import pytest

from pwythoff.beatty import BeattyPair, partition_census
from pwythoff.cli import main
from pwythoff.game_rules import Blocking, Modulo, Shifted
from pwythoff.solver import solve
from pwythoff.verification import (
    REFERENCE_TABLES,
    verify_appendix,
    verify_figure_coincidences,
    verify_main_theorem,
    verify_mex_equivalence,
    verify_reference_tables,
    verify_sequence_lemmas,
)

DATA = Path(__file__).parent / "testdata"
GRID = [(m, p) for m in range(1, 5) for p in range(1, 5)]
LEMMA_PAIRS = [(1, 1), (2, 3), (3, 2), (4, 4)]

# time limits in seconds
LIMIT = {1: 1.0, 2: 60.0, 3: 1.0, 4: 10.0, 5: 30.0, 6: 5.0, 7: 10.0, 8: 5.0, 9: 5.0}


def report(capsys, n, ok, elapsed=None, detail=""):
    timing = "" if elapsed is None else f" {elapsed:.2f}s/{LIMIT[n]:.0f}s"
    with capsys.disabled():
        print(f"\nCRITERION {n:>2}{timing} {'PASS' if ok else 'FAIL'} {detail}".rstrip())


def test_criterion_01_table_reproduction(capsys):
    t0 = time.perf_counter()
    same = []
    for m, golden in ((1, "table1.tsv"), (2, "table2.tsv")):
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = main(["seq", "--m", str(m), "--p", "3", "--count", "16"])
        same.append(code == 0 and buf.getvalue().encode() == (DATA / golden).read_bytes())
    dt = time.perf_counter() - t0
    ok = all(same) and dt < LIMIT[1]
    report(capsys, 1, ok, dt)
    assert ok


def test_criterion_02_main_theorem(capsys):
    t0 = time.perf_counter()
    failed = []
    for m, p in GRID:
        rep = verify_main_theorem(m, p, 120)
        names = {c.name.split("[")[0] for c in rep.checks}
        if not rep.passed or names != {"i", "ii-a", "ii-b", "iii-a", "iii-b"}:
            failed.append((m, p))
        g = gcd(m, p)
        iia = next(c for c in rep.checks if c.name == "ii-a")
        if g > 1 and [0, m * p // g] not in iia.witnesses:
            failed.append((m, p, "gcd"))
    dt = time.perf_counter() - t0
    ok = not failed and dt < LIMIT[2]
    report(capsys, 2, ok, dt, f"failed={failed}" if failed else "")
    assert ok


def test_criterion_03_examples(capsys):
    t0 = time.perf_counter()
    m02 = solve(Modulo(2, 0, 2), 10)
    facts = [
        solve(Blocking(2, 2), 10).is_p((0, 2)),
        m02.is_p((0, 3)),
        not m02.is_p((0, 2)),
        solve(Modulo(2, 2, 4), 10).is_p((0, 2)),
        solve(Blocking(2, 3), 10).is_p((0, 4)),
        solve(Modulo(2, 0, 3), 10).is_p((0, 4)),
        solve(Shifted(2, 3, 1), 10).is_p((1, 9)),
        not solve(Shifted(2, 3, 2), 10).is_p((1, 9)),
    ]
    dt = time.perf_counter() - t0
    ok = all(facts) and dt < LIMIT[3]
    report(capsys, 3, ok, dt)
    assert ok


def test_criterion_04_oracle_equivalence(capsys):
    t0 = time.perf_counter()
    failed = [(m, p) for m, p in GRID if not verify_mex_equivalence(m, p, 5000).passed]
    dt = time.perf_counter() - t0
    ok = not failed and dt < LIMIT[4]
    report(capsys, 4, ok, dt, f"failed={failed}" if failed else "")
    assert ok


def test_criterion_05_sequence_lemmas(capsys):
    t0 = time.perf_counter()
    needed = {"difference", "gaps", "census", "scaling", "complementary-equation"}
    failed = []
    for m, p in LEMMA_PAIRS:
        rep = verify_sequence_lemmas(m, p, 10**5)
        names = {c.name for c in rep.checks}
        if not rep.passed or not needed <= names:
            failed.append((m, p))
    dt = time.perf_counter() - t0
    ok = not failed and dt < LIMIT[5]
    report(capsys, 5, ok, dt, f"failed={failed}" if failed else "")
    assert ok


def test_criterion_06_partition(capsys):
    t0 = time.perf_counter()
    pair = BeattyPair(2, 3)
    good = [partition_census(pair, l, 2000).uniform(1) for l in range(3)]
    dt = time.perf_counter() - t0
    ok = all(good) and dt < LIMIT[6]
    report(capsys, 6, ok, dt)
    assert ok


def test_criterion_07_appendix(capsys):
    t0 = time.perf_counter()
    failed = []
    for m, p in GRID:
        rep = verify_appendix(m, p, 10**4)
        M, N = rep.checks[0].witnesses[0]
        if not rep.passed or M != p - N + 1:
            failed.append((m, p))
    dt = time.perf_counter() - t0
    ok = not failed and dt < LIMIT[7]
    report(capsys, 7, ok, dt, f"failed={failed}" if failed else "")
    assert ok


def test_criterion_08_figure_coincidence(capsys):
    t0 = time.perf_counter()
    rep = verify_figure_coincidences(40)
    names = {c.name for c in rep.checks}
    dt = time.perf_counter() - t0
    ok = rep.passed and names >= {"coincide", "multiplicity", "diagonals"} and dt < LIMIT[8]
    report(capsys, 8, ok, dt)
    assert ok


def test_criterion_09_exploration_regression(capsys):
    t0 = time.perf_counter()
    rep = verify_reference_tables()
    dt = time.perf_counter() - t0
    ok = rep.passed and dt < LIMIT[9]
    bad = [f"{c.name}@{c.witnesses}" for c in rep.checks if not c.passed]
    report(capsys, 9, ok, dt, " ".join(bad))
    assert ok, "\n" + rep.to_lines()


def _listed(name):
    t = REFERENCE_TABLES[name]
    return {q for c, d in zip(t["c"], t["d"]) for q in ((c, d), (d, c))}


def _reaches(src, dst, width):
    """Is ``dst`` one move from ``src`` with bishop width ``width``? Returns the rook length or 0."""
    s, t = src[0] - dst[0], src[1] - dst[1]
    if s < 0 or t < 0 or s + t == 0:
        return None
    if abs(s - t) < width:
        return 0
    return s + t if s == 0 or t == 0 else None


def test_criterion_09_reference_data_contradicts_move_rules():
    # Witnesses for the failure above, stated with the game rules alone.
    t3 = _listed("table-3")
    # (9, 49) and (1, 9) are both listed, yet a rook move of 48 (a multiple
    # of 2) joins them; the solver has (9, 50) instead.
    assert {(9, 49), (1, 9)} <= t3 and _reaches((9, 49), (9, 1), 2) == 48
    sol3 = solve(Modulo(2, 0, 2), 50)
    assert not sol3.is_p((9, 49)) and sol3.is_p((9, 50))

    t4 = _listed("table-4")
    # Length 2 must be forbidden: (8, 41) -> (8, 39) joins two listed pairs.
    assert {(8, 41), (8, 39)} <= t4 and _reaches((8, 41), (8, 39), 2) == 2
    # Length 2 must be allowed: unlisted (9, 36) reaches a listed pair only
    # via (7, 36), a rook move of length 2.
    hits = [q for q in t4 if _reaches((9, 36), q, 2) is not None]
    assert (9, 36) not in t4 and hits == [(7, 36)]
    # (6, 25) is unlisted but has no move at all to a listed pair.
    assert (6, 25) not in t4 and not any(_reaches((6, 25), q, 2) is not None for q in t4)

    # The solver agrees with the tables up to the first such conflict.
    r3, r4 = REFERENCE_TABLES["table-3"], REFERENCE_TABLES["table-4"]
    sol4 = solve(Modulo(2, 2, 3), 47)
    assert all(sol3.is_p(cd) for cd in zip(r3["c"][:16], r3["d"][:16]))
    assert all(sol4.is_p(cd) for cd in zip(r4["c"][:9], r4["d"][:9]))


def _battery() -> str:
    parts = []
    for m, p in GRID:
        parts.append(verify_main_theorem(m, p, 120).to_lines())
        parts.append(verify_mex_equivalence(m, p, 5000).to_lines())
        parts.append(verify_appendix(m, p, 10**4).to_lines())
    for m, p in LEMMA_PAIRS:
        parts.append(verify_sequence_lemmas(m, p, 10**5).to_lines())
    parts.append(verify_figure_coincidences(40).to_lines())
    parts.append(verify_reference_tables().to_lines())
    return "".join(parts)


def test_criterion_10_determinism(capsys):
    first = _battery()
    second = _battery()
    ok = first == second and len(first) > 0
    report(capsys, 10, ok, None, f"{len(first.splitlines())} report lines")
    assert ok
