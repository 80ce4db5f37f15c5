"""Exact-arithmetic toolkit for norm-4 lattice frames and their symmetry.

Everything is integer or Fraction arithmetic: integral lattices and their
discriminant groups, binary and Z4 glue codes, frame classification and
stabilizer orders for the rank-8 even unimodular lattice, sign-cocycle
central extensions with lifted isometries and involution bookkeeping,
even unimodular overlattices glued from isotropic subgroups, and the
orbit classification of odd Lagrangians in split quadratic spaces over
GF(2).  The ``vftk`` command line emits the same results as JSON reports
with built-in cross-checks.
"""

from .abelian import type_string
from .budget import BudgetExceeded, deadline_from_env, deadline_in
from .f2codes import (
    BinaryCode,
    Marking,
    all_markings,
    classify_markings,
    dual_code,
    hamming_code,
    rm1_subcode,
)
from .f2quad import (
    enumerate_odd_lagrangians,
    hyperbolic_space,
    left_overlap,
    orbit_census,
    same_orbit_witness,
    sample_odd_lagrangians,
    stabilizer_structure,
    standard_odd_lagrangian,
)
from .frames import (
    FrameCensus,
    FrameInvariants,
    LatticeFrame,
    W_E8_ORDER,
    classify_e8_frames,
    e8_frame_representatives,
    frame_group_order,
    frame_invariants,
    order_sym_wr_agl,
)
from .hatgroup import (
    EpsilonCocycle,
    HatElement,
    all_lifts,
    lift_automorphism,
    lifted_frame_stabilizer,
    miyamoto_involutions,
    standard_cocycle,
)
from .lattices import (
    DiscriminantGroup,
    IntegralLattice,
    direct_sum,
    discriminant_group,
    e8_lattice,
    lattice_from_code,
    short_vectors,
)
from .unimodular import (
    definite_automorphisms,
    hyperbolic_unimodularize,
    isotropic_subgroup,
    overlattice_from_isotropic,
    prime_power_twist,
    strong_extension_check,
    sum_four_squares_mod,
    sum_two_squares_mod,
    unimodularize,
)

__version__ = "0.1.0"

__all__ = [
    "type_string",
    "BudgetExceeded",
    "deadline_from_env",
    "deadline_in",
    "BinaryCode",
    "Marking",
    "all_markings",
    "classify_markings",
    "dual_code",
    "hamming_code",
    "rm1_subcode",
    "enumerate_odd_lagrangians",
    "hyperbolic_space",
    "left_overlap",
    "orbit_census",
    "same_orbit_witness",
    "sample_odd_lagrangians",
    "stabilizer_structure",
    "standard_odd_lagrangian",
    "FrameCensus",
    "FrameInvariants",
    "LatticeFrame",
    "W_E8_ORDER",
    "classify_e8_frames",
    "e8_frame_representatives",
    "frame_group_order",
    "frame_invariants",
    "order_sym_wr_agl",
    "EpsilonCocycle",
    "HatElement",
    "all_lifts",
    "lift_automorphism",
    "lifted_frame_stabilizer",
    "miyamoto_involutions",
    "standard_cocycle",
    "DiscriminantGroup",
    "IntegralLattice",
    "direct_sum",
    "discriminant_group",
    "e8_lattice",
    "lattice_from_code",
    "short_vectors",
    "definite_automorphisms",
    "hyperbolic_unimodularize",
    "isotropic_subgroup",
    "overlattice_from_isotropic",
    "prime_power_twist",
    "strong_extension_check",
    "sum_four_squares_mod",
    "sum_two_squares_mod",
    "unimodularize",
]
