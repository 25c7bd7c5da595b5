import io

from pwythoff.game_rules import Blocking, Modulo, ShiftedChoice
from pwythoff.play import PlaySession, run


def test_blocking_example_session():
    s = PlaySession(Blocking(2, 2), (0, 2))
    out = s.start()
    assert "Engine blocks: (0,0)" in out
    assert "blocked" in s.handle("move 0 0")[0]
    out = s.handle("move 0 1")
    assert "Engine moves to (0, 0)." in out and s.winner == "engine"


def test_modulo_example_session():
    s = PlaySession(Modulo(2, 0, 2), (0, 3))
    s.start()
    assert "wrong residue" in s.handle("move 0 0")[0]
    out = s.handle("move 0 1")
    assert "Engine moves to (0, 0)." in out and s.winner == "engine"


def test_modulo_other_move_also_loses():
    s = PlaySession(Modulo(2, 0, 2), (0, 3))
    s.start()
    s.handle("move 0 2")
    assert s.winner is None or s.winner == "engine"
    while s.phase != "over":
        legal = sorted(s._legal())
        s.handle(f"move {legal[0][0]} {legal[0][1]}")
    assert s.winner == "engine"


def test_shifted_choice_engine_picks_one():
    s = PlaySession(ShiftedChoice(2, 3), (1, 9))
    out = s.start()
    assert "Engine (second player) chooses l = 1." in out
    while s.phase != "over":
        legal = sorted(s._legal())
        s.handle(f"move {legal[-1][0]} {legal[-1][1]}")
    assert s.winner == "engine"


def test_human_second_chooses_shift():
    s = PlaySession(ShiftedChoice(2, 3), (1, 9), engine_first=True)
    s.start()
    assert s.phase == "choose-l"
    assert "0 <= l < 3" in s.handle("choose-l 3")[0]
    out = s.handle("choose-l 2")
    assert out[0] == "You chose l = 2." and out[1].startswith("Engine moves to")


def test_illegal_reasons():
    s = PlaySession(Blocking(1, 1), (3, 3))
    s.start()
    assert "non-decreasing" in s.handle("move 4 3")[0]
    assert "illegal" in s.handle("move 1 2")[0]
    assert "Could not read" in s.handle("move a b")[0]


def test_human_block_phase():
    s = PlaySession(Blocking(2, 3), (5, 9))
    s.start()
    s.handle("move 5 5")
    assert s.phase == "human-block"
    assert "not a blockable" in s.handle("block 4 4")[0]
    assert s.handle("block 5 0") == ["Blocked (5, 0)."]
    s.handle("done")
    assert s.phase in ("human-move", "over")


def test_run_loop():
    out = io.StringIO()
    run(PlaySession(Modulo(2, 0, 2), (0, 3)), io.StringIO("move 0 1\n"), out)
    assert "Engine wins." in out.getvalue()
