"""Right-angled Artin groups: word lattice, conjugation, star length,
quasi-roots, quasi-stabilizers and extension-graph balls."""

__version__ = "0.1.0"

from ._kernels import BACKEND
from .conjugation import (
    are_conjugate, conjugate, conjugating_element, cyclic_reduce,
    decompose_conjugation, is_cyclically_reduced,
)
from .element import Element, Letter, ball
from .errors import (
    BudgetExceeded, GraphFormatError, GraphMismatchError, InvariantViolation,
    PreconditionError, RaagError, UnknownVertexError, WordSyntaxError,
)
from .graph import DefiningGraph, bundled, bundled_names
from .lattice import gcd_left, gcd_right, is_prefix, is_suffix, lcm_left, lcm_right
from .powers import check_star_growth, power_prefix_decompose, power_prefix_normalize, prefix_ladder
from .quasiroot import QuasiRootDecomposition, extract_quasi_root, is_primitive
from .stabilizer import acylindricity_constants, xi_brute_force, xi_structure
from .star import classify, is_loxodromic, star_decompose, star_length, translation_length_bounds

__all__ = [
    "BACKEND", "BudgetExceeded", "DefiningGraph", "Element", "GraphFormatError",
    "GraphMismatchError", "InvariantViolation", "Letter", "PreconditionError",
    "QuasiRootDecomposition", "RaagError", "UnknownVertexError", "WordSyntaxError",
    "acylindricity_constants", "are_conjugate", "ball", "bundled", "bundled_names",
    "check_star_growth", "classify", "conjugate", "conjugating_element", "cyclic_reduce",
    "decompose_conjugation", "extract_quasi_root", "gcd_left", "gcd_right",
    "is_cyclically_reduced", "is_loxodromic", "is_prefix", "is_primitive", "is_suffix",
    "lcm_left", "lcm_right", "power_prefix_decompose", "power_prefix_normalize",
    "prefix_ladder", "star_decompose", "star_length", "translation_length_bounds",
    "xi_brute_force", "xi_structure",
]
