"""Exact multilinear algebra for trivectors on a 10-dimensional space."""
from .constructions import (CompanionInstance, Configuration, PhiResult,
                            beta_matrix, build_configuration, companion_instance,
                            phi_solve, phi_system, singular_trivector,
                            transpose_identity, z_intersect)
from .enumeration import (CompanionCount, count_companions, gaussian_binomial,
                          scan_brute_force, scan_singular_points)
from .fields import QQ, PrimeField, Rationals, make_field
from .linalg import Subspace, random_subspace
from .trivector import (Trivector, g27_test, in_F, in_Y, line_in_Y, random_trivector,
                        singular_at)

__all__ = [
    "CompanionCount", "CompanionInstance", "Configuration", "PhiResult", "PrimeField",
    "QQ", "Rationals", "Subspace", "Trivector", "beta_matrix", "build_configuration",
    "companion_instance", "count_companions", "g27_test", "gaussian_binomial", "in_F",
    "in_Y", "line_in_Y", "make_field", "phi_solve", "phi_system", "random_subspace",
    "random_trivector", "scan_brute_force", "scan_singular_points", "singular_at",
    "singular_trivector", "transpose_identity", "z_intersect",
]
