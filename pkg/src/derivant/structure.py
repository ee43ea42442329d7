"""Derived series, normal closures, centers and socles."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .config import DEFAULT
from .elements import ElementIndex
from .errors import BudgetExceeded, NotASubgroupError
from .group import PermGroup, _Chain, _first_moved
from .perm import DTYPE, Permutation


def _inv(a):
    out = np.empty_like(a)
    out[a] = np.arange(a.shape[0], dtype=a.dtype)
    return out


def _commutator_array(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    # x^-1 y^-1 x y
    return y[x[_inv(y)[_inv(x)]]]


def _is_identity(a: np.ndarray) -> bool:
    return _first_moved(a) < 0


def closure_from_arrays(arrays: Sequence[np.ndarray], degree: int,
                        order: int | None = None, name: str | None = None) -> PermGroup:
    """Subgroup generated by the given arrays, dropping redundant ones."""
    chain = _Chain(degree)
    kept = []
    for a in arrays:
        a = np.asarray(a, dtype=DTYPE)
        if _is_identity(a) or chain.contains(a):
            continue
        chain.add_generator(a)
        chain.complete()
        kept.append(a)
        if order is not None and chain.order() == order:
            break
    chain.trim()
    gens = [Permutation._wrap(a) for a in kept]
    return PermGroup._with_chain(gens, degree, chain, name=name)


def _normal_closure_arrays(G: PermGroup, seeds: list[np.ndarray]) -> PermGroup:
    n = G.degree
    chain = _Chain(n)
    kept: list[np.ndarray] = []
    queue: list[np.ndarray] = []
    for s in seeds:
        s = np.asarray(s, dtype=DTYPE)
        if _is_identity(s) or chain.contains(s):
            continue
        chain.add_generator(s)
        chain.complete()
        kept.append(s)
    queue = list(kept)
    ggens = [(g, _inv(g)) for g in G.gen_arrays()]
    while queue:
        k = queue.pop()
        for g, gi in ggens:
            c = g[k[gi]]  # g^-1 k g
            if chain.contains(c):
                continue
            chain.add_generator(c)
            chain.complete()
            kept.append(c)
            queue.append(c)
    chain.trim()
    return PermGroup._with_chain([Permutation._wrap(a) for a in kept], n, chain)


def normal_closure(G: PermGroup, seeds: Sequence[Permutation]) -> PermGroup:
    """Smallest normal subgroup of G containing the seeds."""
    seeds = list(seeds)
    if seeds:
        arr = np.stack([s.array for s in seeds])
        if not G.contains_many(arr).all():
            raise NotASubgroupError("seed is not an element of the group")
    return _normal_closure_arrays(G, [s.array for s in seeds])


def derived_subgroup(G: PermGroup) -> PermGroup:
    """G' as the normal closure of the commutators of generator pairs."""
    cached = G._cache.get("derived")
    if cached is not None:
        return cached
    if G.tags.get("symmetric") or (G.degree > 2 and G.order() == math.factorial(G.degree)):
        from .constructors import alternating

        D = alternating(G.degree)
        G._cache["derived"] = D
        return D
    gens = G.gen_arrays()
    seeds = [_commutator_array(gens[i], gens[j])
             for i in range(len(gens)) for j in range(i + 1, len(gens))]
    D = _normal_closure_arrays(G, seeds)
    if D.order() == G.order():
        D = G
    G._cache["derived"] = D
    return D


@dataclass(frozen=True)
class DerivedSeries:
    terms: tuple[PermGroup, ...]

    @property
    def perfect_core(self) -> PermGroup:
        return self.terms[-1]

    @property
    def derived_length(self) -> int | None:
        """Number of steps to the trivial group, or None if G is not solvable."""
        if self.terms[-1].order() != 1:
            return None
        return len(self.terms) - 1

    def orders(self) -> list[int]:
        return [t.order() for t in self.terms]


def derived_series(G: PermGroup) -> DerivedSeries:
    terms = [G]
    while True:
        D = derived_subgroup(terms[-1])
        if D.order() == terms[-1].order():
            break
        terms.append(D)
    return DerivedSeries(tuple(terms))


def perfect_core(G: PermGroup) -> PermGroup:
    return derived_series(G).perfect_core


def is_perfect(G: PermGroup) -> bool:
    return derived_subgroup(G).order() == G.order()


def is_solvable(G: PermGroup) -> bool:
    return perfect_core(G).order() == 1


def is_normal(A: PermGroup, B: PermGroup) -> bool:
    """Is A normal in B?  Requires A <= B."""
    if not A.is_subgroup_of(B):
        raise NotASubgroupError("is_normal requires A <= B")
    conj = [g[a[_inv(g)]] for g in B.gen_arrays() for a in A.gen_arrays()]
    return bool(A.contains_many(np.stack(conj)).all())


def subgroup_from_rows(rows: np.ndarray, degree: int, name: str | None = None) -> PermGroup:
    """Group whose elements are exactly ``rows`` (assumed closed)."""
    return closure_from_arrays(list(rows.astype(DTYPE)), degree, order=len(rows), name=name)


def center(G: PermGroup, budget: int | None = None) -> PermGroup:
    """Z(G) by scanning the element list (BudgetExceeded when too large)."""
    E = G.elements_array(budget)
    keep = np.ones(E.shape[0], dtype=bool)
    for g in G.gen_arrays():
        g = g.astype(np.intp)
        keep &= (g[E] == E[:, g]).all(axis=1)
    return subgroup_from_rows(E[keep], G.degree)


def conjugacy_class_ids(idx: ElementIndex) -> np.ndarray:
    """Class label (smallest member index) for every element."""
    from scipy.sparse import coo_matrix
    from scipy.sparse.csgraph import connected_components

    N = idx.size
    src, dst = [], []
    for g in idx.group.gen_arrays():
        src.append(np.arange(N))
        dst.append(idx.conjugate_by(g))
    src = np.concatenate(src)
    dst = np.concatenate(dst)
    graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(N, N))
    _, labels = connected_components(graph, directed=True, connection="weak")
    first = np.full(labels.max() + 1, N, dtype=np.int64)
    np.minimum.at(first, labels, np.arange(N))
    return first[labels]


def _socle_tag(G: PermGroup):
    factory = G.tags.get("socle")
    if factory is None:
        return None
    S = factory() if callable(factory) else factory
    G.tags["socle"] = S
    return S


def _sort_key(H: PermGroup):
    return (H.order(), tuple(sorted(tuple(g.array.tolist()) for g in H.generators)))


def minimal_normal_subgroups(G: PermGroup, budget: int | None = None) -> list[PermGroup]:
    """Inclusion-minimal normal closures of prime-order elements.

    One element per conjugacy class is tried (conjugate seeds have equal
    closures).  Groups built by catalog constructors carry their socle and
    are answered from it without enumeration.
    """
    cached = G._cache.get("minimal_normal")
    if cached is not None:
        return cached
    tagged = _socle_tag(G)
    if tagged is not None and G.tags.get("socle_is_minimal_normal", False):
        result = [tagged]
    elif G.order() == 1:
        result = []
    else:
        budget = DEFAULT.elements if budget is None else budget
        if G.order() > budget:
            raise BudgetExceeded("minimal normal subgroup search (no catalog socle)", G.order(), budget)
        idx = ElementIndex(G, budget)
        orders = idx.element_orders()
        from .fields import is_prime

        prime = np.array([is_prime(int(o)) for o in orders])
        labels = conjugacy_class_ids(idx)
        reps = sorted(set(labels[prime].tolist()))
        closures = [_normal_closure_arrays(G, [idx.elements[r].astype(DTYPE)]) for r in reps]
        closures.sort(key=lambda H: H.order())
        result = []
        for M in closures:
            if any(K.is_subgroup_of(M) for K in result):
                continue
            result.append(M)
        result.sort(key=_sort_key)
    G._cache["minimal_normal"] = result
    return result


def socle(G: PermGroup, budget: int | None = None) -> PermGroup:
    tagged = _socle_tag(G)
    if tagged is not None:
        return tagged
    mins = minimal_normal_subgroups(G, budget)
    if not mins:
        return PermGroup.trivial(G.degree)
    if len(mins) == 1:
        return mins[0]
    return closure_from_arrays([g.array for M in mins for g in M.generators], G.degree)
