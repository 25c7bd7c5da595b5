"""Positions, variants and move generation on the quarter-plane board.

A position ``(x, y)`` is a queen at column ``x`` and row ``y``; every move
removes ``(s, t)`` from the two coordinates. Moves come in two classes:

* ``bishop``: the m-bishop, ``|s - t| < m`` (this includes single-pile moves
  shorter than ``m``);
* ``rook``: single-pile moves that are not m-bishop moves.

Some variants let the previous player block a subset of moves; those carry
``blockable=True``.

Cut rectangles of the shifted games are oriented so that the smallest
P-positions of ``Shifted(m, p, l)`` are ``(0, m*l)`` and ``(m*(p-l), 0)``:
the removed cells are ``x < m*(p-l)`` and ``y < m*l``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union


class Position(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class Move:
    target: Position
    kind: str  # "bishop" | "rook"
    blockable: bool
    removed: tuple[int, int]


def _positive(**kw):
    for k, v in kw.items():
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"{k} must be a positive integer, got {v!r}")


@dataclass(frozen=True)
class Blocking:
    """Previous player may block up to ``p - 1`` roob (rook minus m-bishop) options."""

    m: int
    p: int

    def __post_init__(self):
        _positive(m=self.m, p=self.p)


@dataclass(frozen=True)
class BlockingL:
    """As :class:`Blocking`, but the blockable class is rook moves of length ``>= l``."""

    m: int
    p: int
    l: int

    def __post_init__(self):
        _positive(m=self.m, p=self.p, l=self.l)


@dataclass(frozen=True)
class Modulo:
    """m-bishop plus a rook whose move lengths are ``0..l-1`` modulo ``p``."""

    m: int
    l: int
    p: int

    def __post_init__(self):
        _positive(m=self.m, p=self.p)
        if not isinstance(self.l, int) or not 0 <= self.l <= self.p:
            raise ValueError(f"l must satisfy 0 <= l <= p, got {self.l!r}")


@dataclass(frozen=True)
class Shifted:
    """(mp)-Wythoff Nim with a corner rectangle cut away (none for ``l = 0``)."""

    m: int
    p: int
    l: int

    def __post_init__(self):
        _positive(m=self.m, p=self.p)
        if not isinstance(self.l, int) or not 0 <= self.l < self.p:
            raise ValueError(f"l must satisfy 0 <= l < p, got {self.l!r}")


@dataclass(frozen=True)
class ShiftedChoice:
    """The second player picks ``l`` for :class:`Shifted` before the first move."""

    m: int
    p: int

    def __post_init__(self):
        _positive(m=self.m, p=self.p)

    def layers(self) -> list[Shifted]:
        return [Shifted(self.m, self.p, l) for l in range(self.p)]


@dataclass(frozen=True)
class ShiftedRect:
    """(mp)-Wythoff Nim with the cells ``x < u, y < v`` removed."""

    m: int
    p: int
    u: int
    v: int

    def __post_init__(self):
        _positive(m=self.m, p=self.p, u=self.u, v=self.v)


Variant = Union[Blocking, BlockingL, Modulo, Shifted, ShiftedChoice, ShiftedRect]


def bishop_width(variant: Variant) -> int:
    if isinstance(variant, (Shifted, ShiftedChoice, ShiftedRect)):
        return variant.m * variant.p
    return variant.m


def block_budget(variant: Variant) -> int:
    """How many options the previous player may block (0 for non-blocking games)."""
    if isinstance(variant, (Blocking, BlockingL)):
        return variant.p - 1
    return 0


def is_blocking(variant: Variant) -> bool:
    return isinstance(variant, (Blocking, BlockingL))


def cut_rectangle(variant: Variant) -> tuple[int, int] | None:
    """``(width, height)`` of the removed corner, or ``None``."""
    if isinstance(variant, Shifted) and variant.l > 0:
        return variant.m * (variant.p - variant.l), variant.m * variant.l
    if isinstance(variant, ShiftedRect):
        return variant.u, variant.v
    return None


def is_symmetric(variant: Variant) -> bool:
    cut = cut_rectangle(variant)
    return cut is None or cut[0] == cut[1]


def on_board(variant: Variant, pos) -> bool:
    x, y = pos
    if x < 0 or y < 0:
        return False
    cut = cut_rectangle(variant)
    return cut is None or not (x < cut[0] and y < cut[1])


def rook_length_allowed(variant: Variant, k: int) -> bool:
    """Is a single-pile move of length ``k > 0`` a legal rook move in ``variant``?"""
    if isinstance(variant, Modulo):
        return lp_length_allowed(k, variant.l, variant.p)
    return True


def lp_length_allowed(k: int, l: int, p: int) -> bool:
    if k <= 0:
        return False
    if l == 0:
        return k % p == 0
    return k % p < l


def bishop_options(pos, m: int) -> set[Move]:
    """All removals ``(s, t)`` with ``|s - t| < m`` that stay on the quarter plane."""
    if m < 1:
        raise ValueError("m must be positive")
    x, y = pos
    out = set()
    for d in range(-(m - 1), m):  # d = t - s
        s = max(0, -d)
        while s <= x and s + d <= y:
            t = s + d
            if s + t > 0:
                out.add(Move(Position(x - s, y - t), "bishop", False, (s, t)))
            s += 1
    return out


def _single_pile(pos, lengths_ok, kind, blockable) -> set[Move]:
    x, y = pos
    out = set()
    for k in range(1, x + 1):
        if lengths_ok(k):
            out.add(Move(Position(x - k, y), kind, blockable, (k, 0)))
    for k in range(1, y + 1):
        if lengths_ok(k):
            out.add(Move(Position(x, y - k), kind, blockable, (0, k)))
    return out


def roob_options(pos, m: int) -> set[Move]:
    """Single-pile removals of at least ``m`` tokens."""
    return _single_pile(pos, lambda k: k >= m, "rook", True)


def lp_rook_options(pos, l: int, p: int) -> set[Move]:
    """Single-pile removals whose length is ``0..l-1`` mod ``p`` (multiples of ``p`` for ``l = 0``)."""
    if not 0 <= l <= p:
        raise ValueError(f"l must satisfy 0 <= l <= p, got {l}")
    return _single_pile(pos, lambda k: lp_length_allowed(k, l, p), "rook", False)


def options(variant: Variant, pos) -> set[Move]:
    """Every legal move from ``pos``, one per target."""
    if not on_board(variant, pos):
        raise ValueError(f"{tuple(pos)} is not on the board of {variant}")
    pos = Position(*pos)
    m = bishop_width(variant)
    bishops = bishop_options(pos, m)
    by_target: dict[Position, Move] = {mv.target: mv for mv in bishops}

    if isinstance(variant, BlockingL):
        # the blockable class is every rook move of length >= l, even where it
        # coincides with an m-bishop move
        for mv in _single_pile(pos, lambda k: True, "rook", False):
            k = max(mv.removed)
            if k >= variant.l:
                by_target[mv.target] = Move(mv.target, "rook", True, mv.removed)
            elif mv.target not in by_target:
                by_target[mv.target] = mv
    else:
        blockable = isinstance(variant, Blocking)
        for mv in _single_pile(pos, lambda k: rook_length_allowed(variant, k), "rook", blockable):
            if mv.target not in by_target:  # bishop classification wins
                by_target[mv.target] = mv

    if cut_rectangle(variant) is not None:
        return {mv for mv in by_target.values() if on_board(variant, mv.target)}
    return set(by_target.values())


def describe(variant: Variant) -> str:
    if isinstance(variant, Blocking):
        return f"{variant.m}-Wythoff {variant.p}-Blocking Nim"
    if isinstance(variant, BlockingL):
        return f"{variant.m}-Wythoff {variant.p}-Blocking Nim, blockable rook moves of length >= {variant.l}"
    if isinstance(variant, Modulo):
        return f"{variant.m}-Wythoff Modulo-{variant.p} {variant.l}-Nim"
    if isinstance(variant, Shifted):
        return f"{variant.l}-Shifted {variant.m}x{variant.p}-Wythoff Nim"
    if isinstance(variant, ShiftedChoice):
        return f"{variant.m}x{variant.p}-Wythoff Nim (second player picks the shift)"
    return f"{variant.m}x{variant.p}-Wythoff Nim, {variant.u}x{variant.v} corner removed"
