"""Finite biframes, d-frames, bispaces and biframe assemblies.

Frames are finite distributive lattices encoded as downsets of their
join-irreducibles (bitmasks); biframes, d-frames and bispaces are built on
top, together with their dualities, the assembly, and an exhaustive theorem
checker (:mod:`bifrm.harness`).
"""

from .assembly import (
    alpha,
    assembly_free_presentation,
    bi_td_conditions,
    biframe_assembly,
    final_conditions,
    finitary_assembly,
)
from .biframe import Biframe, BiframeMap, biframe_map, bipoints, fin_coreflect, make_biframe, present, spatialization
from .bispace import b_omega, b_omega_fin, d_omega, sobriety, spectrum, unit_map
from .dframe import DFrame, delta_functor, dpoints, gamma_functor, validate_dframe
from .errors import BifrmError, InvalidInput, SizeCapExceeded
from .frame import Congruence, Frame, FrameMap, boolean_frame, chain_frame, coproduct, quotient
from .harness import TheoremSuite, default_suite, enumerate_bispaces, verify
from .poset import FiniteLattice, Poset, downset_lattice, validate_frame
from .spaces import Bispace, BispaceMap, separation

__all__ = [
    "Biframe",
    "BiframeMap",
    "BifrmError",
    "Bispace",
    "BispaceMap",
    "Congruence",
    "DFrame",
    "FiniteLattice",
    "Frame",
    "FrameMap",
    "InvalidInput",
    "Poset",
    "SizeCapExceeded",
    "TheoremSuite",
    "alpha",
    "assembly_free_presentation",
    "b_omega",
    "b_omega_fin",
    "bi_td_conditions",
    "biframe_assembly",
    "biframe_map",
    "bipoints",
    "boolean_frame",
    "chain_frame",
    "coproduct",
    "d_omega",
    "default_suite",
    "delta_functor",
    "downset_lattice",
    "dpoints",
    "enumerate_bispaces",
    "fin_coreflect",
    "final_conditions",
    "finitary_assembly",
    "gamma_functor",
    "make_biframe",
    "present",
    "quotient",
    "separation",
    "sobriety",
    "spatialization",
    "spectrum",
    "unit_map",
    "validate_dframe",
    "validate_frame",
]
