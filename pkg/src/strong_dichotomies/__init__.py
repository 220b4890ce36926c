"""Quasipolarities, strong dichotomies and strong antichains for finite groups acting on Z_n."""

from .affine_group import (
    AffineMap,
    QuasipolarityClass,
    apply,
    compose,
    conjugate,
    enumerate_group,
    enumerate_quasipolarities,
    invert,
    is_involution,
    is_quasipolarity_bruteforce,
    is_quasipolarity_characterized,
    quasipolarity_conjugacy,
)
from .antichain import BoundReport, CanonicalClass, bounds, canonicalize, orbit_traversal, strong_classes
from .dichotomy import Dichotomy, StrengthReport, act, base_set, complement, members_of_Mq, strength
from .perm_group import PermGroup, Permutation, builtin_group, centralizer_size, closure, quasipolarities_of
from .residue_ring import Modulus, Residue, UnitResidue, euler_phi, sigma_tau_u0, units_and_involutions

__version__ = "0.1.0"
