"""Exact computation with double theta polynomials of the symplectic Grassmannian.

The most used entry points are re-exported here; the submodules hold the rest.
"""

__version__ = "0.1.0"

from .partitions import KStrictPartition, NotKStrictError
from .ring import Polynomial, c, c_power, format_poly, parse_poly, t
from .theta import theta_double, theta_single
from .quotient import Expansion, equal_in_quotient, normal_form, structure_constants, theta_expansion
from .weyl import SignedPermutation, omega_poly, partition_to_w
from .chevalley import chevalley_covers, chevalley_t_coeff, verify_chevalley
from .divdiff import divided_diff, theta_from_top, verify_descent, weyl_act

__all__ = [
    "__version__",
    "KStrictPartition",
    "NotKStrictError",
    "Polynomial",
    "c",
    "t",
    "c_power",
    "format_poly",
    "parse_poly",
    "theta_double",
    "theta_single",
    "Expansion",
    "normal_form",
    "theta_expansion",
    "equal_in_quotient",
    "structure_constants",
    "SignedPermutation",
    "partition_to_w",
    "omega_poly",
    "chevalley_covers",
    "chevalley_t_coeff",
    "verify_chevalley",
    "weyl_act",
    "divided_diff",
    "verify_descent",
    "theta_from_top",
]
