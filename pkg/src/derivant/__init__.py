"""Permutation groups and relative integrability.

A subgroup G of U is integrable within U when H' = G for some H <= U.  The
package provides the permutation-group machinery needed to decide this
(stabilizer chains, derived series, normalizers, subgroup lattices,
quotients) together with constructors for the groups that arise in the
2-homogeneous classification.
"""

from .actions import is_k_homogeneous, is_k_transitive, orbits_on_k_sets
from .errors import (BudgetExceeded, DegreeMismatchError, DerivantError, NoStrategyError,
                     NotASubgroupError, NotNormalError, ParseError)
from .group import Bsgs, PermGroup, build_bsgs, contains, equals, is_subgroup, order, random_element
from .integrability import (INCONCLUSIVE, INTEGRABLE, NOT_INTEGRABLE, IntegrabilityVerdict, Options,
                            almost_simple_check, check_integral, classify_integrable_subgroups,
                            integrable_within, thm_b_check)
from .normalizer import centralizer_in, normalizer_in
from .perm import (Permutation, commutator, compose, conjugate, format_cycles, identity, inverse,
                   parse_cycles)
from .quotient import QuotientRep, quotient_rep
from .structure import (center, derived_series, derived_subgroup, is_normal, is_perfect, is_solvable,
                        minimal_normal_subgroups, normal_closure, perfect_core, socle)
from .subgroups import all_subgroups, intermediate_subgroups

__version__ = "0.1.0"

__all__ = [
    "Bsgs", "BudgetExceeded", "DegreeMismatchError", "DerivantError", "INCONCLUSIVE", "INTEGRABLE",
    "IntegrabilityVerdict", "NOT_INTEGRABLE", "NoStrategyError", "NotASubgroupError", "NotNormalError",
    "Options", "ParseError", "PermGroup", "Permutation", "QuotientRep", "all_subgroups",
    "almost_simple_check", "build_bsgs", "center", "centralizer_in", "check_integral",
    "classify_integrable_subgroups", "commutator", "compose", "conjugate", "contains", "derived_series",
    "derived_subgroup", "equals", "format_cycles", "identity", "integrable_within",
    "intermediate_subgroups", "inverse", "is_k_homogeneous", "is_k_transitive", "is_normal",
    "is_perfect", "is_solvable", "is_subgroup", "minimal_normal_subgroups", "normal_closure",
    "normalizer_in", "orbits_on_k_sets", "order", "parse_cycles", "perfect_core", "quotient_rep",
    "random_element", "socle", "thm_b_check",
]
