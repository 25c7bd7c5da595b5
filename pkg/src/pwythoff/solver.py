"""Retrograde P/N classification on the bounded board ``[0, B]^2``.

Cells are visited by anti-diagonal ``x + y``; every move strictly lowers the
sum, so a diagonal only depends on earlier ones. Rules:

* ordinary variants: P iff no option is P;
* blocking variants with budget ``p - 1``: P iff no unblockable option is P
  and at most ``p - 1`` blockable options are P (the previous player blocks
  them all);
* ``ShiftedChoice``: P iff some ``l`` puts the cell on the board of
  ``Shifted(m, p, l)`` as a P-position.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .game_rules import (
    Blocking,
    BlockingL,
    Modulo,
    Position,
    Shifted,
    ShiftedChoice,
    Variant,
    bishop_width,
    block_budget,
    is_blocking,
    lp_length_allowed,
    on_board,
    options,
)

N_CELL, P_CELL, ABSENT = 0, 1, 2


@dataclass
class OutcomeTable:
    variant: Variant
    bound: int
    grid: bytearray
    layers: dict = field(default_factory=dict)  # ShiftedChoice: l -> OutcomeTable

    def _idx(self, x, y):
        return x * (self.bound + 1) + y

    def within(self, pos) -> bool:
        x, y = pos
        return 0 <= x <= self.bound and 0 <= y <= self.bound

    def outcome(self, pos) -> str | None:
        """``'P'``, ``'N'``, or ``None`` for cells removed from the board."""
        if not self.within(pos):
            raise ValueError(f"{tuple(pos)} is outside [0, {self.bound}]^2")
        c = self.grid[self._idx(*pos)]
        return None if c == ABSENT else "PN"[c == N_CELL]

    def is_p(self, pos) -> bool:
        return self.outcome(pos) == "P"

    def cells(self):
        for x in range(self.bound + 1):
            for y in range(self.bound + 1):
                yield Position(x, y)

    def pset(self) -> set[Position]:
        B1 = self.bound + 1
        return {Position(i // B1, i % B1) for i, c in enumerate(self.grid) if c == P_CELL}


def _rook_ok(variant: Variant):
    if isinstance(variant, Modulo):
        l, p = variant.l, variant.p
        return lambda k: lp_length_allowed(k, l, p)
    return None  # any length


def _solve_layer(variant: Variant, bound: int) -> OutcomeTable:
    B1 = bound + 1
    grid = bytearray([ABSENT]) * (B1 * B1)
    m = bishop_width(variant)
    budget = block_budget(variant)
    blocking = is_blocking(variant)
    if isinstance(variant, BlockingL):
        block_from = variant.l
    elif isinstance(variant, Blocking):
        block_from = variant.m
    else:
        block_from = None
    rook_ok = _rook_ok(variant)

    col_p = [[] for _ in range(B1)]  # col_p[x]: y's of P cells in column x
    row_p = [[] for _ in range(B1)]  # row_p[y]: x's of P cells in row y
    diag_p = {}  # y - x -> x's of P cells

    for total in range(2 * bound + 1):
        found = []
        for x in range(max(0, total - bound), min(total, bound) + 1):
            y = total - x
            if not on_board(variant, (x, y)):
                continue
            d = y - x
            unblockable = False
            for dd in range(d - m + 1, d + m):
                for xp in diag_p.get(dd, ()):
                    yp = xp + dd
                    if xp <= x and yp <= y:
                        if block_from is not None and (xp == x or yp == y) \
                                and (x - xp) + (y - yp) >= block_from:
                            continue  # single-pile move in the blockable class
                        unblockable = True
                        break
                if unblockable:
                    break
            if unblockable:
                grid[x * B1 + y] = N_CELL
                continue

            if blocking:
                hits = 0
                for k in [y - yp for yp in col_p[x]] + [x - xp for xp in row_p[y]]:
                    if k >= block_from:
                        hits += 1
                    else:  # short rook move outside the blockable class
                        unblockable = True
                is_p = not unblockable and hits <= budget
            else:
                if rook_ok is None:
                    hit = bool(col_p[x]) or bool(row_p[y])
                else:
                    hit = any(rook_ok(y - yp) for yp in col_p[x]) or \
                        any(rook_ok(x - xp) for xp in row_p[y])
                is_p = not hit
            grid[x * B1 + y] = P_CELL if is_p else N_CELL
            if is_p:
                found.append((x, y))
        # no cell on this diagonal can reach another, so publish afterwards
        for x, y in found:
            col_p[x].append(y)
            row_p[y].append(x)
            diag_p.setdefault(y - x, []).append(x)
    return OutcomeTable(variant, bound, grid)


def solve(variant: Variant, bound: int) -> OutcomeTable:
    """Classify every on-board cell of ``[0, bound]^2`` as P or N."""
    if bound < 0:
        raise ValueError("bound must be non-negative")
    if isinstance(variant, ShiftedChoice):
        layers = {s.l: _solve_layer(s, bound) for s in variant.layers()}
        B1 = bound + 1
        grid = bytearray(B1 * B1)
        for t in layers.values():
            for i, c in enumerate(t.grid):
                if c == P_CELL:
                    grid[i] = P_CELL
        return OutcomeTable(variant, bound, grid, layers)
    return _solve_layer(variant, bound)


def pset(variant: Variant, bound: int) -> set[Position]:
    return solve(variant, bound).pset()


def audit(table: OutcomeTable) -> list[Position]:
    """Cells whose label disagrees with the rule applied to explicit options.

    Independent of the indexing used by :func:`solve`; empty means consistent.
    """
    variant = table.variant
    if isinstance(variant, ShiftedChoice):
        bad = []
        for l, layer in table.layers.items():
            bad += audit(layer)
        for pos in table.cells():
            want = any(layer.is_p(pos) for layer in table.layers.values())
            if want != table.is_p(pos):
                bad.append(pos)
        return sorted(set(bad))
    budget = block_budget(variant)
    bad = []
    for pos in table.cells():
        if not on_board(variant, pos):
            if table.outcome(pos) is not None:
                bad.append(pos)
            continue
        opts = options(variant, pos)
        p_unblockable = any(table.is_p(mv.target) for mv in opts if not mv.blockable)
        p_blockable = sum(table.is_p(mv.target) for mv in opts if mv.blockable)
        want = not p_unblockable and p_blockable <= budget
        if want != table.is_p(pos):
            bad.append(pos)
    return bad


@dataclass(frozen=True)
class ExtractedSolution:
    pairs: tuple[tuple[int, int], ...]  # (c_n, d_n), c_n <= d_n, sorted by d_n
    strictly_increasing: bool
    note: str = ""

    @property
    def c(self) -> list[int]:
        return [c for c, _ in self.pairs]

    @property
    def d(self) -> list[int]:
        return [d for _, d in self.pairs]

    def differences(self) -> list[int]:
        return [d - c for c, d in self.pairs]


def extract_sequences(table: OutcomeTable) -> ExtractedSolution:
    """Unordered P-pairs ``{c, d}`` sorted by the larger coordinate."""
    pairs = sorted({(min(x, y), max(x, y)) for x, y in table.pset()}, key=lambda cd: (cd[1], cd[0]))
    ds = [d for _, d in pairs]
    inc = all(d1 < d2 for d1, d2 in zip(ds, ds[1:]))
    note = "" if inc else "larger coordinates are not strictly increasing"
    return ExtractedSolution(tuple(pairs), inc, note)


@dataclass(frozen=True)
class Advice:
    outcome: str  # 'P' or 'N' for the player to move
    move: Position | None = None
    block: tuple[Position, ...] = ()
    candidates: tuple[Position, ...] = ()
    choose_l: int | None = None
    note: str = ""


def _sorted(ps):
    return tuple(sorted(Position(*q) for q in ps))


def advise(variant: Variant, pos, table: OutcomeTable) -> Advice:
    """What optimal play does at ``pos``.

    For a P-position this is the block set the previous player should announce
    (blocking games); for an N-position a winning move, or in blocking games
    the full list of blockable P-options when there are more than ``p - 1``.
    For ``ShiftedChoice`` it gives the shift the second player should pick.
    """
    pos = Position(*pos)
    if not table.within(pos):
        raise ValueError(f"{tuple(pos)} is outside the solved bound {table.bound}")
    if isinstance(variant, ShiftedChoice):
        for l in range(variant.p):
            layer = table.layers[l]
            if layer.outcome(pos) == "P":
                return Advice("P", choose_l=l, note=f"second player picks l = {l}")
        return Advice("N", choose_l=0, note="every shift leaves a winning move")
    if table.outcome(pos) is None:
        raise ValueError(f"{tuple(pos)} is not on the board")
    opts = options(variant, pos)
    p_unblockable = _sorted(mv.target for mv in opts if not mv.blockable and table.is_p(mv.target))
    p_blockable = _sorted(mv.target for mv in opts if mv.blockable and table.is_p(mv.target))
    budget = block_budget(variant)
    if table.is_p(pos):
        return Advice("P", block=p_blockable, note="no winning move")
    if p_unblockable:
        return Advice("N", move=p_unblockable[0])
    return Advice(
        "N",
        move=p_blockable[0],
        candidates=p_blockable,
        note=f"{len(p_blockable)} blockable P-options exceed the budget of {budget}",
    )
