"""Exact sheaf cohomology, block collections and splitting criteria on
products of projective spaces."""

from .beilinson import corner_summand, e1_page, kclass_check
from .blocks import dual_collection, standard_blocks, verify_block_axioms, verify_duality
from .bott import Factor, SupportSet, bott_chi, bott_h, support
from .criteria import acm_check, characterize, omega_bundle, split_check
from .errors import DomainError, InexpressibleProduct, SheafSyntaxError
from .expr import format_sheaf, parse_sheaf
from .sheaves import (
    Atom,
    CohTable,
    SheafSum,
    Space,
    chi,
    cohomology,
    dual,
    fingerprint,
    line,
    rank,
    tensor,
    tensor_line,
)

__version__ = "0.1.0"

__all__ = [
    "Atom", "CohTable", "DomainError", "Factor", "InexpressibleProduct", "SheafSum",
    "SheafSyntaxError", "Space", "SupportSet", "acm_check", "bott_chi", "bott_h",
    "characterize", "chi", "cohomology", "corner_summand", "dual", "dual_collection",
    "e1_page", "fingerprint", "format_sheaf", "kclass_check", "line", "omega_bundle",
    "parse_sheaf", "rank", "split_check", "standard_blocks", "support", "tensor",
    "tensor_line", "verify_block_axioms", "verify_duality",
]
