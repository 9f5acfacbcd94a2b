"""Signed-graph products, prime s-decomposition, and exact chromatic numbers."""

from .core import SignedGraph, build, walk_sign
from .errors import SgwError
from .factor_ordinary import factorize, is_prime_ordinary
from .homomorphism import chromatic_number, find_homomorphism, validate
from .product import cartesian_product, product_many
from .s_factor import is_s_prime, s_decompose
from .switching import equivalent, is_balanced, switch

__all__ = [
    "SignedGraph",
    "SgwError",
    "build",
    "walk_sign",
    "switch",
    "is_balanced",
    "equivalent",
    "cartesian_product",
    "product_many",
    "factorize",
    "is_prime_ordinary",
    "s_decompose",
    "is_s_prime",
    "find_homomorphism",
    "validate",
    "chromatic_number",
]

__version__ = "0.1.0"
