"""Multivariate polynomials, symmetric reduction and resolvent generation."""

from .mpoly import MPoly, parse_mpoly
from .reduce import (elementary_symmetric, symmetric_reduce, reduce_monomial_basis,
                     NotSymmetricError)
from .resolvent import (ResolventSpec, Resolvent, orbit_resolvent, OrbitCollisionError,
                        ALTERNATING, PLUS)
from .specs import (f10_spec, f15_spec, psi_spec, theta_orbit_spec, alternating_spec,
                    phidef_alternating_spec, NAMED_SPECS)
from .sextic import sextic_resolvent, sextic_resolvent_of, symbolic_theta
from .general import (GeneralResolventParams, general_phi, separability_search,
                      CostCapError, SearchCapError)
from .store import load_resolvent, verify_cache, write_cache, generate

__all__ = [
    "MPoly", "parse_mpoly", "elementary_symmetric", "symmetric_reduce",
    "reduce_monomial_basis", "NotSymmetricError", "ResolventSpec", "Resolvent",
    "orbit_resolvent", "OrbitCollisionError", "ALTERNATING", "PLUS", "f10_spec",
    "f15_spec", "psi_spec", "theta_orbit_spec", "alternating_spec",
    "phidef_alternating_spec", "NAMED_SPECS", "sextic_resolvent", "sextic_resolvent_of",
    "symbolic_theta", "GeneralResolventParams", "general_phi", "separability_search",
    "CostCapError", "SearchCapError", "load_resolvent", "verify_cache", "write_cache",
    "generate",
]
