"""Default size budgets.

Every enumeration in the engine is bounded; exceeding a bound raises
:class:`~derivant.errors.BudgetExceeded`.  ``DERIVANT_BUDGET_ELEMENTS`` and
``DERIVANT_BUDGET_INDEX`` override the two budgets users most often tune.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    return int(raw)


@dataclass(frozen=True)
class Budgets:
    elements: int = 10**5          # explicit element lists (center, socle, ...)
    index: int = 10**4             # |N_U(G) : G| for candidate enumeration
    quotient_index: int = 10**5    # cosets in a quotient representation
    subgroups: int = 2048          # group order for full subgroup enumeration
    scan: int = 10**6              # cosets visited by an exact normalizer scan
    ksets: int = 10**7             # k-subsets enumerated for homogeneity
    depth: int = 4                 # nested reductions in integrability

    @classmethod
    def from_env(cls) -> "Budgets":
        base = cls()
        return replace(
            base,
            elements=_env_int("DERIVANT_BUDGET_ELEMENTS", base.elements),
            index=_env_int("DERIVANT_BUDGET_INDEX", base.index),
        )


DEFAULT = Budgets.from_env()
