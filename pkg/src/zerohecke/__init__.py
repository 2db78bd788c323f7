"""
Multichain monomials of B_n as a 0-Hecke module.

Exact computations with the 0-Hecke action on multichain monomials, the
resulting quasisymmetric and noncommutative characteristics, multivariate
noncommutative Hall-Littlewood functions, and verifiers for the identities
they specialize to.
"""

from .combinat import (
    Composition,
    Multichain,
    Permutation,
    PWord,
    WeakComposition,
    compositions,
    min_coset_reps,
    multichains,
    permutations,
    weak_compositions,
)
from .chars import component_char, nc_char_quotient, theorem2_lhs, theorem2_mid, theorem2_rhs
from .hecke0 import HeckeElt, ModuleRep, cyclic_module, projective_module, simple_module
from .nsqsym import NSymElt, QSymElt, hall_littlewood, specialize
from .poly import Caps, Poly, Series
from .srring import SRElement, hecke_action, straighten

__version__ = "0.1.0"
