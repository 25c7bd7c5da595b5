"""Line-based play against the optimal engine.

Commands: ``move x y``, ``block x y``, ``done`` (finish blocking),
``choose-l k``, ``board``, ``help``, ``quit``.
"""

from __future__ import annotations

import sys

from .game_rules import (
    Modulo,
    Position,
    Shifted,
    ShiftedChoice,
    Variant,
    block_budget,
    describe,
    is_blocking,
    on_board,
    options,
    rook_length_allowed,
)
from .solver import advise, solve

HELP = "commands: move x y | block x y | done | choose-l k | board | help | quit"


class PlaySession:
    """Human against engine; by default the human makes the first move."""

    def __init__(self, variant: Variant, start, engine_first: bool = False):
        self.variant = variant
        self.pos = Position(*start)
        self.engine_first = engine_first
        self.bound = max(self.pos)
        self.table = solve(variant, self.bound)
        self.game = None if isinstance(variant, ShiftedChoice) else variant
        self.blocked: set[Position] = set()  # blocks against the player to move
        self.phase = "start"
        self.winner = None

    # -- helpers ---------------------------------------------------------
    def _layer_table(self):
        if isinstance(self.variant, ShiftedChoice):
            return self.table.layers[self.game.l]
        return self.table

    def _legal(self) -> dict[Position, object]:
        return {mv.target: mv for mv in options(self.game, self.pos) if mv.target not in self.blocked}

    def _finish(self, winner: str, why: str) -> list[str]:
        self.phase = "over"
        self.winner = winner
        return [f"{why} {'You win' if winner == 'human' else 'Engine wins'}."]

    def _illegal_reason(self, target: Position) -> str:
        x, y = self.pos
        tx, ty = target
        if tx > x or ty > y or (tx, ty) == (x, y):
            return "non-decreasing: a move must lower at least one pile and raise none"
        if not on_board(self.game, target):
            return "off-board: that cell is cut from the board"
        if target in self.blocked:
            return "blocked: the engine has blocked that option"
        s, t = x - tx, y - ty
        if (s == 0 or t == 0) and isinstance(self.game, Modulo) \
                and not rook_length_allowed(self.game, s + t):
            return f"wrong residue: length {s + t} is not allowed modulo {self.game.p}"
        return "illegal: not a rook or bishop move of this game"

    # -- flow --------------------------------------------------------------
    def start(self) -> list[str]:
        out = [f"Game: {describe(self.variant)}; start at {tuple(self.pos)}.", HELP]
        if isinstance(self.variant, ShiftedChoice) and not self.engine_first:
            adv = advise(self.variant, self.pos, self.table)
            self.game = Shifted(self.variant.m, self.variant.p, adv.choose_l)
            out.append(f"Engine (second player) chooses l = {adv.choose_l}.")
        elif isinstance(self.variant, ShiftedChoice):
            self.phase = "choose-l"
            return out + ["You are the second player: pick the shift with 'choose-l k'."]
        if self.engine_first:
            return out + self._after_human_turn()
        return out + self._human_to_move()

    def _human_to_move(self) -> list[str]:
        out = []
        if not options(self.game, self.pos):
            return self._finish("engine", f"No moves from {tuple(self.pos)}.")
        if is_blocking(self.game):
            adv = advise(self.game, self.pos, self._layer_table())
            # from an N-position the engine is lost anyway; it still blocks what it can
            chosen = list(adv.block) if adv.outcome == "P" else list(adv.candidates)
            chosen = chosen[: block_budget(self.game)]
            self.blocked = set(chosen)
            if chosen:
                out.append("Engine blocks: " + " ".join(f"({x},{y})" for x, y in sorted(chosen)))
        if not self._legal():
            return out + self._finish("engine", "Every option is blocked.")
        self.phase = "human-move"
        out.append(f"Position {tuple(self.pos)}. Your move.")
        return out

    def _after_human_turn(self) -> list[str]:
        if is_blocking(self.game) and any(mv.blockable for mv in options(self.game, self.pos)):
            self.phase = "human-block"
            budget = block_budget(self.game)
            return [f"Position {tuple(self.pos)}. You may block up to {budget} blockable options "
                    "with 'block x y'; finish with 'done'."]
        self.blocked = set()
        return self._engine_move()

    def _engine_move(self) -> list[str]:
        legal = self._legal()
        if not legal:
            return self._finish("human", f"Engine has no move from {tuple(self.pos)}.")
        table = self._layer_table()
        winning = sorted(t for t in legal if table.is_p(t))
        target = winning[0] if winning else sorted(legal)[0]
        self.pos = target
        self.blocked = set()
        out = [f"Engine moves to {tuple(target)}."]
        return out + self._human_to_move()

    def handle(self, line: str) -> list[str]:
        words = line.split()
        if not words:
            return []
        cmd, args = words[0].lower(), words[1:]
        if cmd == "quit":
            self.phase = "over"
            return ["Bye."]
        if cmd == "help":
            return [HELP]
        if cmd == "board":
            return [f"Position {tuple(self.pos)}; phase {self.phase}."]
        if self.phase == "over":
            return ["The game is over."]
        try:
            nums = [int(a) for a in args]
        except ValueError:
            return [f"Could not read numbers in {line!r}. {HELP}"]

        if cmd == "choose-l":
            if self.phase != "choose-l" or len(nums) != 1:
                return ["choose-l is only available to the second player before the first move."]
            k = nums[0]
            if not 0 <= k < self.variant.p:
                return [f"l must satisfy 0 <= l < {self.variant.p}."]
            game = Shifted(self.variant.m, self.variant.p, k)
            if not on_board(game, self.pos):
                return [f"{tuple(self.pos)} is cut from the board for l = {k}."]
            self.game = game
            self.blocked = set()
            return [f"You chose l = {k}."] + self._engine_move()

        if cmd == "move":
            if self.phase != "human-move" or len(nums) != 2:
                return ["Not your move." if self.phase != "human-move" else "usage: move x y"]
            target = Position(*nums)
            if target not in self._legal():
                return [f"Illegal move to {tuple(target)}: {self._illegal_reason(target)}."]
            self.pos = target
            self.blocked = set()
            out = [f"You move to {tuple(target)}."]
            return out + self._after_human_turn()

        if cmd == "block":
            if self.phase != "human-block" or len(nums) != 2:
                return ["Blocking happens right after your move." if self.phase != "human-block"
                        else "usage: block x y"]
            target = Position(*nums)
            opts = {mv.target: mv for mv in options(self.game, self.pos)}
            if target not in opts or not opts[target].blockable:
                return [f"{tuple(target)} is not a blockable option of {tuple(self.pos)}."]
            if len(self.blocked | {target}) > block_budget(self.game):
                return [f"You may block at most {block_budget(self.game)} options."]
            self.blocked.add(target)
            return [f"Blocked {tuple(target)}."]

        if cmd == "done":
            if self.phase != "human-block":
                return ["Nothing to finish."]
            return self._engine_move()

        return [f"Unknown command {cmd!r}. {HELP}"]


def run(session: PlaySession, stdin=None, stdout=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout

    def emit(lines):
        for s in lines:
            stdout.write(s + "\n")
        stdout.flush()

    emit(session.start())
    while session.phase != "over":
        stdout.write("> ")
        stdout.flush()
        line = stdin.readline()
        if not line:
            break
        emit(session.handle(line))
    return 0
