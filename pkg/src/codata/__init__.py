"""Streams and infinite triangular matrices as lazy codata, with executable
relative-comonad, comodule and coalgebra laws."""

from .lazy import EQ, PairValue, Setoid, Thunk, eq_setoid, force, phi_inv, phi_pair, pr1, pr2
from .report import FAIL, PASS, VACUOUS, LawEntry, LawReport
from .stream import (
    Stream, nats, sredec, stail, stake, shead, stream_bisim_depth, stream_corec,
)
from .tri import (
    FiniteTriangle, Layer, Tri, TriCoalgSeed, cut, diag, extend, position_matrix, redec,
    thead, tri_bisim_depth, tri_corec, truncate, ttail,
)
from .harness import GenConfig, run_all_laws

__version__ = "0.1.0"
