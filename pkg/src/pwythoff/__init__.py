"""Wythoff-type games whose P-positions are p-complementary Beatty pairs."""

from .beatty import BeattyPair, a, b, phi
from .exact_arith import SurdRatio, floor_scale, isqrt
from .game_rules import Blocking, BlockingL, Modulo, Shifted, ShiftedChoice, ShiftedRect, options
from .mex_engine import generate, mex, mex_p
from .solver import advise, audit, extract_sequences, pset, solve
from .verification import run_suite

__version__ = "0.1.0"

__all__ = [
    "BeattyPair", "a", "b", "phi",
    "SurdRatio", "floor_scale", "isqrt",
    "Blocking", "BlockingL", "Modulo", "Shifted", "ShiftedChoice", "ShiftedRect", "options",
    "generate", "mex", "mex_p",
    "advise", "audit", "extract_sequences", "pset", "solve",
    "run_suite",
]
