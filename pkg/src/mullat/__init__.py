"""Finite multiplicative lattices, S-relative primality, and S-primary decomposition."""
from .decomposition import (
    Decomposition,
    all_minimal_decompositions,
    enumerate_s_primary_above,
    find_minimal_decomposition,
    is_minimal,
    uniqueness_set,
)
from .lattice import FiniteLattice, build_from_leq, chain, join_all, meet_all, product_lattice
from .mult import (
    AxiomClass,
    MultiplicativeLattice,
    attach_mult,
    classify_lattice,
    meet_mult,
    product_mult,
    radical,
    residual,
)
from .reports import PropertyReport, VerdictBundle
from .ring_bridge import ideal_lattice_zn, lift_mult_set, verify_correspondence
from .s_theory import (
    NOT_IN_PREFIX,
    MClosedSet,
    check_s_stationary,
    is_s_compact,
    is_s_irreducible,
    is_s_primary,
    is_s_prime,
    saturation,
    s_maximal_elements,
    validate_mclosed,
)

__all__ = [name for name in dir() if not name.startswith("_")]
