"""Local equivalence classes of almost iota-complexes via immersed curves."""

from .invariants import (InvariantRecord, classify, locally_equivalent, multicurve_of,
                         p_invariant, p_omega, phi_all, phi_n, sh_standard, shift_class)
from .iota import (AlmostIotaComplex, InvalidComplex, ParamsSyntaxError, StandardParams,
                   build_standard, direct_sum, parse_params, product)
from .oracle import SearchBudget, bruteforce_local_equiv, search_local_map

__all__ = [
    "AlmostIotaComplex", "InvalidComplex", "InvariantRecord", "ParamsSyntaxError",
    "SearchBudget", "StandardParams", "bruteforce_local_equiv", "build_standard",
    "classify", "direct_sum", "locally_equivalent", "multicurve_of", "p_invariant",
    "p_omega", "parse_params", "phi_all", "phi_n", "product", "search_local_map",
    "sh_standard", "shift_class",
]
