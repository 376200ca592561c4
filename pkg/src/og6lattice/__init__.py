"""Exact lattice computations for hyperkahler manifolds of OG6 type.

The second cohomology lattice U^3 + (-2)^2, its discriminant form, Eichler
transvections, orbits of primitive vectors, decomposition of monodromy
operators, wall divisors and chamber queries.
"""
from .errors import InternalError, LatticeError
from .lattice import (DiscriminantGroup, Lattice, LatticeVector, RationalVector,
                      discriminant_group, divisibility, is_primitive, make_lattice,
                      orthogonal_complement, overlattice_from_isotropic, standard_lattice)
from .isometry import (Isometry, IsometryWord, Opaque, Reflection, Transvection,
                       membership, reflection_in, transvection)
from .orbits import (o_plus_witness, orbit_invariants, same_orbit_O_plus_og6,
                     same_orbit_SOtilde_plus, transport)
from .mukai import MUKAI, OG6, MukaiVector, decompose_monodromy, is_monodromy, phi, varrho
from .cones import (PicardData, birational_kahler_closure_query, classify_divisor,
                    detect_lagrangian, enumerate_separating_walls, isotropic_div2_scan,
                    kahler_chamber_query)
from .claims import verify_claims
from .cli import run_command

__all__ = [
    "InternalError", "LatticeError", "DiscriminantGroup", "Lattice", "LatticeVector",
    "RationalVector", "discriminant_group", "divisibility", "is_primitive", "make_lattice",
    "orthogonal_complement", "overlattice_from_isotropic", "standard_lattice", "Isometry",
    "IsometryWord", "Opaque", "Reflection", "Transvection", "membership", "reflection_in",
    "transvection", "o_plus_witness", "orbit_invariants", "same_orbit_O_plus_og6",
    "same_orbit_SOtilde_plus", "transport", "MUKAI", "OG6", "MukaiVector",
    "decompose_monodromy", "is_monodromy", "phi", "varrho", "PicardData",
    "birational_kahler_closure_query", "classify_divisor", "detect_lagrangian",
    "enumerate_separating_walls", "isotropic_div2_scan", "kahler_chamber_query",
    "verify_claims", "run_command",
]
