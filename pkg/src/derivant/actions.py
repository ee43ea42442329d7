"""Actions on k-subsets and ordered k-tuples."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import BudgetExceeded
from .group import PermGroup

MAX_KSETS = 10**7


def _check_k(G: PermGroup, k: int) -> None:
    if not 1 <= k <= G.degree:
        raise ValueError(f"k={k} out of range 1..{G.degree}")


def _rank(sets: np.ndarray, binom: np.ndarray) -> np.ndarray:
    """Colex rank of sorted k-subsets (rows)."""
    k = sets.shape[1]
    r = np.zeros(sets.shape[0], dtype=np.int64)
    for i in range(k):
        r += binom[sets[:, i], i + 1]
    return r


def _all_ksets(n: int, k: int) -> np.ndarray:
    """All k-subsets of range(n) in colex order (row i has rank i)."""
    rows = np.array(list(combinations(range(n), k)), dtype=np.int64).reshape(-1, k)
    binom = _binom_table(n, k)
    return rows[np.argsort(_rank(rows, binom), kind="stable")]


def _binom_table(n: int, k: int) -> np.ndarray:
    t = np.zeros((n + 1, k + 1), dtype=np.int64)
    for a in range(n + 1):
        for b in range(k + 1):
            t[a, b] = comb(a, b)
    return t


@dataclass
class KSetOrbits:
    """Orbit labels for the k-subsets, indexed by colex rank."""

    degree: int
    k: int
    labels: np.ndarray
    count: int

    def sizes(self) -> list[int]:
        return sorted(np.bincount(self.labels).tolist())

    def orbits(self) -> list[list[tuple[int, ...]]]:
        """The partition as lists of 1-based subsets."""
        sets = _all_ksets(self.degree, self.k) + 1
        out = [[] for _ in range(self.count)]
        for row, lab in zip(sets, self.labels):
            out[lab].append(tuple(int(x) for x in row))
        return sorted(out)


def orbits_on_k_sets(G: PermGroup, k: int, limit: int = MAX_KSETS) -> KSetOrbits:
    _check_k(G, k)
    n = G.degree
    total = comb(n, k)
    if total > limit:
        raise BudgetExceeded("k-subsets", total, limit)
    sets = _all_ksets(n, k)
    binom = _binom_table(n, k)
    src, dst = [], []
    for g in G.gen_arrays():
        img = np.sort(g.astype(np.int64)[sets], axis=1)
        src.append(np.arange(total))
        dst.append(_rank(img, binom))
    if not src:
        return KSetOrbits(n, k, np.arange(total), total)
    src, dst = np.concatenate(src), np.concatenate(dst)
    graph = coo_matrix((np.ones(src.shape[0], dtype=np.int8), (src, dst)), shape=(total, total))
    count, labels = connected_components(graph, directed=True, connection="weak")
    # relabel by first occurrence so labels are deterministic
    _, first = np.unique(labels, return_index=True)
    order = np.argsort(first)
    remap = np.empty(count, dtype=np.int64)
    remap[order] = np.arange(count)
    return KSetOrbits(n, k, remap[labels], int(count))


def is_k_homogeneous(G: PermGroup, k: int, limit: int = MAX_KSETS) -> bool:
    _check_k(G, k)
    n = G.degree
    # k-sets and their complements are permuted alike
    k = min(k, n - k) or k
    if k == n:
        return True
    if G.order() < comb(n, k):
        return False
    return orbits_on_k_sets(G, k, limit).count == 1


def is_k_transitive(G: PermGroup, k: int) -> bool:
    """Read off the stabilizer chain: base points 1..k with full orbits."""
    _check_k(G, k)
    n = G.degree
    levels = G._get_chain().levels
    for i in range(k):
        if n - i == 1:
            break
        if i >= len(levels) or levels[i].point != i or len(levels[i].orbit) != n - i:
            return False
    return True
