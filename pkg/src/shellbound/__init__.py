"""Coefficient bounds for bi-univalent functions subordinate to the shell-like curve."""
from .bounds import BoundReport, Corollary, bound_a2, bound_a3, bound_fs
from .caratheodory import CaratheodoryPair, body_check, sample_pair, schwarz_to_caratheodory
from .classes import ClassSpec, class_operator, special_class, synthesize
from .errors import *  # noqa: F403
from .search import ProbeResult, grid_oracle, probe
from .series import TruncatedSeries, compose, power, revert
from .shell import BETA, R0, TAU, CurvePoint, curve_has_loop, curve_sample, ptilde_coeffs

__version__ = "0.1.0"
