"""Normalizers and centralizers of subgroups.

Three strategies, each labelled in the result:

* ``exact-scan``: walk the right cosets G u of G in U (canonical
  representatives from G's chain) and keep the u that normalize G.  The
  normalizer is a union of such cosets, so this is exhaustive.
* ``holomorph``: for U = Sym(n), a regular abelian G has normalizer
  Hol(G); an affine G has normalizer inside Hol of its translation socle.
* ``catalog``: for U = Sym(n) and a socle S recognised from constructor
  tags (PSL, A_n), N_Sym(n)(S) is taken from the classification and the
  final normalizer is found by an exact scan inside it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

import numpy as np

from .config import DEFAULT
from .errors import BudgetExceeded, NoStrategyError, NotASubgroupError
from .group import PermGroup
from .perm import DTYPE, Permutation


@dataclass
class NormalizerResult:
    group: PermGroup
    provenance: str
    notes: list[str] = field(default_factory=list)

    def __iter__(self):
        # allows ``N, prov = normalizer_in(...)``
        yield self.group
        yield self.provenance


def _inv(a):
    out = np.empty_like(a)
    out[a] = np.arange(a.shape[0], dtype=a.dtype)
    return out


def is_symmetric(U: PermGroup) -> bool:
    return bool(U.tags.get("symmetric")) or U.order() == factorial(U.degree)


def _normalizes(G: PermGroup, U_rows: np.ndarray) -> np.ndarray:
    """For each row u, does u^-1 G u = G?"""
    rows = np.asarray(U_rows, dtype=np.intp)
    m, n = rows.shape
    inv = np.empty_like(rows)
    inv[np.arange(m)[:, None], rows] = np.arange(n)[None, :]
    ok = np.ones(m, dtype=bool)
    for g in G.gen_arrays():
        g = g.astype(np.intp)
        # u^-1 g u: i -> u(g(u^-1(i)))
        conj = rows[np.arange(m)[:, None], g[inv]]
        ok &= G.contains_many(conj)
    return ok


def coset_reps(U: PermGroup, G: PermGroup, budget: int | None = None) -> np.ndarray:
    """Canonical representatives of the right cosets G u, u in U."""
    budget = DEFAULT.scan if budget is None else budget
    index = U.order() // G.order()
    if index > budget:
        raise BudgetExceeded("normalizer scan (cosets)", index, budget)
    n = U.degree
    start = G.canonical_reps(np.arange(n, dtype=np.intp))
    reps = [start]
    seen = {start.astype(DTYPE).tobytes()}
    gens = [g.astype(np.intp) for g in U.gen_arrays()]
    lo = 0
    while lo < len(reps):
        block = np.stack(reps[lo:])
        lo = len(reps)
        for g in gens:
            canon = G.canonical_reps(g[block])
            for row in canon:
                key = row.astype(DTYPE).tobytes()
                if key not in seen:
                    seen.add(key)
                    reps.append(row)
    if len(reps) != index:
        raise AssertionError("coset walk disagrees with the index")
    return np.stack(reps)


def _scan(U: PermGroup, G: PermGroup, budget: int | None = None) -> PermGroup:
    if G.order() == U.order():
        return U
    reps = coset_reps(U, G, budget)
    keep = reps[_normalizes(G, reps)]
    gens = list(G.generators)
    from .structure import closure_from_arrays

    order = G.order() * len(keep)
    N = closure_from_arrays([g.array for g in gens] + list(keep.astype(DTYPE)), U.degree, order=order)
    if N.order() != order:
        raise AssertionError("normalizer scan produced an inconsistent order")
    return N


def _is_regular_abelian(G: PermGroup) -> bool:
    return G.order() == G.degree and G.is_transitive() and G.is_abelian()


def _tagged_socle(G: PermGroup):
    """(S, N_Sym(S) factory, provenance) from constructor tags, if any."""
    S = G.tags.get("socle")
    entry = G.tags.get("sym_normalizer_of_socle")
    if S is None:
        return None
    if callable(S):
        S = S()
        G.tags["socle"] = S
    if G.tags.get("alternating") or S.tags.get("alternating"):
        from .constructors import symmetric

        return S, symmetric(G.degree), "catalog"
    if entry is None:
        return None
    factory, prov = entry
    return S, factory(), prov


def _recognize(G: PermGroup):
    """Catalog recognition without tags: A_n <= G, or a regular abelian socle."""
    n = G.degree
    if n >= 5 and G.order() in (factorial(n) // 2, factorial(n)):
        from .constructors import alternating, symmetric

        return alternating(n), symmetric(n), "catalog"
    proj = _recognize_projective(G)
    if proj is not None:
        return proj
    from .structure import minimal_normal_subgroups

    try:
        mins = minimal_normal_subgroups(G)
    except BudgetExceeded:
        return None
    if len(mins) == 1 and _is_regular_abelian(mins[0]):
        from .constructors import holomorph

        try:
            return mins[0], holomorph(mins[0]), "holomorph"
        except ValueError:
            return None
    return None


def _recognize_projective(G: PermGroup):
    """PSL_d(q) <= G <= PGammaL_d(q) literally, in the standard labelling."""
    from .constructors import _is_simple_psl, pgammal, psl
    from .fields import prime_power
    from .matrices import projective_degree

    n = G.degree
    for q in range(2, 50):
        try:
            prime_power(q)
        except ValueError:
            continue
        for d in range(2, 8):
            if projective_degree(d, q) != n or not _is_simple_psl(d, q):
                continue
            S = psl(d, q)
            if G.order() % S.order():
                continue
            M = pgammal(d, q)
            if S.is_subgroup_of(G) and G.is_subgroup_of(M):
                return S, M, "catalog"
    return None


def monte_carlo_guard(U: PermGroup, N: PermGroup, G: PermGroup, samples: int = 10**4,
                      seed: int = 0) -> tuple[int, int]:
    """Sample u in U; those outside N must fail to normalize G.

    Returns (checked, violations).  Elements that land in N are skipped.
    """
    rows = U.random_arrays(samples, seed)
    outside = ~N.contains_many(rows)
    rows = rows[outside]
    if rows.shape[0] == 0:
        return 0, 0
    bad = _normalizes(G, rows)
    return int(rows.shape[0]), int(bad.sum())


def normalizer_in(U: PermGroup, G: PermGroup, strategy: str = "auto",
                  scan_budget: int | None = None, guard: bool = False) -> NormalizerResult:
    """N_U(G) with the provenance of the method used.

    ``strategy`` is one of auto, exact, holomorph, catalog.  Shortcuts apply
    only when U is the full symmetric group; ``auto`` tries them first and
    falls back to the exact scan.
    """
    if strategy not in ("auto", "exact", "holomorph", "catalog"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if not G.is_subgroup_of(U):
        raise NotASubgroupError("normalizer_in requires G <= U")
    if strategy == "exact":
        return NormalizerResult(_scan(U, G, scan_budget), "exact-scan")
    if G.order() == U.order():
        return NormalizerResult(U, "exact-scan")
    shortcut = None
    if is_symmetric(U) and G.order() > 1:
        shortcut = _shortcut(U, G, strategy, scan_budget)
    if shortcut is not None:
        if guard:
            checked, bad = monte_carlo_guard(U, shortcut.group, G)
            shortcut.notes.append(f"monte-carlo guard: {checked} samples outside N, {bad} violations")
            if bad:
                raise AssertionError("catalog normalizer failed the Monte Carlo guard")
        return shortcut
    if strategy != "auto":
        raise NoStrategyError(f"strategy {strategy} does not apply")
    try:
        return NormalizerResult(_scan(U, G, scan_budget), "exact-scan")
    except BudgetExceeded as exc:
        raise NoStrategyError(f"no normalizer strategy within budget ({exc})") from exc


def _shortcut(U, G, strategy, scan_budget):
    if strategy in ("auto", "holomorph") and _is_regular_abelian(G):
        from .constructors import holomorph

        try:
            return NormalizerResult(holomorph(G), "holomorph")
        except ValueError:
            pass
    found = _tagged_socle(G) or _recognize(G)
    if found is None:
        return None
    S, M, prov = found
    if strategy not in ("auto", prov):
        return None
    if not G.is_subgroup_of(M):
        return None
    N = _scan(M, G, scan_budget)
    notes = [f"socle of order {S.order()}; N_Sym(n)(S) of order {M.order()} by {prov}"]
    return NormalizerResult(N, prov, notes)


def centralizer_in(U: PermGroup, G: PermGroup, budget: int | None = None) -> PermGroup:
    """C_U(G) by scanning the elements of U."""
    E = U.elements_array(budget)
    keep = np.ones(E.shape[0], dtype=bool)
    for g in G.gen_arrays():
        g = g.astype(np.intp)
        keep &= (g[E] == E[:, g]).all(axis=1)
    from .structure import subgroup_from_rows

    return subgroup_from_rows(E[keep], U.degree)
