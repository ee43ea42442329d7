"""Subgroup enumeration for small groups.

Everything here works on a multiplication table: elements are numbered in
chain order and a subgroup is a boolean mask over that numbering.  Masks
make closure, normalizer and dedup tests cheap array operations; subgroups
are turned back into :class:`PermGroup` objects only on output.

Enumeration is by cyclic extension: starting from the trivial group (and,
for non-solvable groups, from the perfect subgroups), repeatedly adjoin an
element ``x`` that normalizes the current subgroup ``K`` and has ``x^p`` in
``K`` for a prime ``p``.  Every subgroup of a solvable group is reached this
way (it has a normal subgroup of prime index), and every other subgroup is
reached from its perfect core.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .config import DEFAULT
from .elements import ElementIndex
from .errors import BudgetExceeded, NotASubgroupError
from .fields import is_prime
from .group import PermGroup
from .perm import DTYPE, Permutation


class GroupTable:
    """Multiplication table of a small permutation group."""

    def __init__(self, G: PermGroup, bound: int | None = None):
        bound = DEFAULT.subgroups if bound is None else bound
        N = G.order()
        if N > bound:
            raise BudgetExceeded("subgroup enumeration (group order)", N, bound)
        self.group = G
        self.idx = ElementIndex(G, max(bound, N))
        self.size = N
        self.elements = self.idx.elements
        self.identity = self.idx.identity
        self.inv = self.idx.inverse_indices()
        gens = [g.astype(np.intp) for g in G.gen_arrays()]
        self.gen_index = [int(i) for i in self.idx.lookup(np.stack(gens))]
        right = [self.idx.right_multiply(g) for g in gens]
        # mul[i, j] = index of e_i * e_j, filled column by column along a
        # spanning tree of the Cayley graph
        mul = np.empty((N, N), dtype=np.int32)
        mul[:, self.identity] = np.arange(N)
        done = np.zeros(N, dtype=bool)
        done[self.identity] = True
        frontier = [self.identity]
        while frontier:
            nxt = []
            for j in frontier:
                for gi, R in enumerate(right):
                    k = int(R[j])
                    if not done[k]:
                        done[k] = True
                        mul[:, k] = R[mul[:, j]]
                        nxt.append(k)
            frontier = nxt
        self.mul = mul
        self.orders = self._element_orders()

    def _element_orders(self) -> np.ndarray:
        ar = np.arange(self.size)
        cur = ar.copy()
        orders = np.zeros(self.size, dtype=np.int64)
        k = 1
        while True:
            hit = (cur == self.identity) & (orders == 0)
            orders[hit] = k
            if orders.all():
                return orders
            cur = self.mul[cur, ar]
            k += 1

    def power(self, x: int, k: int) -> int:
        r = self.identity
        for _ in range(k):
            r = int(self.mul[r, x])
        return r

    # -- subgroup masks -----------------------------------------------------
    def closure(self, gens: Iterable[int]) -> np.ndarray:
        gens = np.array(sorted({int(g) for g in gens}), dtype=np.intp)
        mask = np.zeros(self.size, dtype=bool)
        mask[self.identity] = True
        frontier = np.array([self.identity])
        while frontier.size and gens.size:
            new = np.unique(self.mul[frontier][:, gens].ravel())
            new = new[~mask[new]]
            mask[new] = True
            frontier = new
        return mask

    def extend(self, K: np.ndarray, x: int) -> np.ndarray:
        """K<x> for x normalizing K: the union of the cosets K x^j."""
        H = K.copy()
        members = np.flatnonzero(K)
        y = x
        while not K[y]:
            H[self.mul[members, y]] = True
            y = int(self.mul[y, x])
        return H

    def conj_table(self) -> np.ndarray:
        """c[x, k] = index of x^-1 e_k x."""
        if not hasattr(self, "_conj"):
            left = self.mul[self.inv]  # row x: x^-1 * e_k
            self._conj = self.mul[left, np.arange(self.size)[:, None]]
        return self._conj

    def normalizer_mask(self, mask: np.ndarray) -> np.ndarray:
        members = np.flatnonzero(mask)
        c = self.conj_table()
        return mask[c[:, members]].all(axis=1)

    def commutator(self, a: int, b: int) -> int:
        ia, ib = int(self.inv[a]), int(self.inv[b])
        return int(self.mul[self.mul[self.mul[ia, ib], a], b])

    def derived_mask(self, mask: np.ndarray, gens: list[int] | None = None) -> np.ndarray:
        """Derived subgroup of the subgroup given by ``mask``."""
        members = np.flatnonzero(mask)
        if gens is None:
            gens = [int(x) for x in members]
        seeds = {self.commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]}
        seeds.discard(self.identity)
        seeds = sorted(seeds)
        D = self.closure(seeds)
        if not seeds:
            return D
        # normal closure under the subgroup's generators
        c = self.conj_table()
        g = np.array(gens, dtype=np.intp)
        while True:
            img = c[g][:, np.flatnonzero(D)].ravel()
            missing = np.unique(img[~D[img]])
            if missing.size == 0:
                return D
            seeds.extend(int(m) for m in missing)
            D = self.closure(seeds)

    def small_generators(self, mask: np.ndarray) -> list[int]:
        """Greedy generating set: add the least element not yet generated."""
        gens: list[int] = []
        cur = np.zeros(self.size, dtype=bool)
        cur[self.identity] = True
        while True:
            rest = np.flatnonzero(mask & ~cur)
            if rest.size == 0:
                return gens
            # prefer elements of large order: fewer generators
            x = int(rest[np.argmax(self.orders[rest])])
            gens.append(x)
            cur = self.closure(gens)

    def to_group(self, mask: np.ndarray, gens: list[int] | None = None, name: str | None = None) -> PermGroup:
        if gens is None:
            gens = self.small_generators(mask)
        perms = [Permutation._wrap(self.elements[g].astype(DTYPE)) for g in gens]
        return PermGroup(perms, self.group.degree, order=int(mask.sum()), name=name)

    def mask_of(self, H: PermGroup) -> np.ndarray:
        if not H.is_subgroup_of(self.group):
            raise NotASubgroupError("not a subgroup of the tabled group")
        gens = self.idx.lookup(np.stack([g.astype(np.intp) for g in H.gen_arrays()]))
        return self.closure(gens)


class SubgroupLattice:
    """All subgroups of a tabled group, as masks with generator lists."""

    def __init__(self, table: GroupTable):
        self.table = table
        self.masks: list[np.ndarray] = []
        self.gens: list[list[int]] = []
        self._enumerate()

    def _enumerate(self) -> None:
        T = self.table
        seen: dict[bytes, int] = {}

        def add(mask, gens):
            key = np.packbits(mask).tobytes()
            if key in seen:
                return False
            seen[key] = len(self.masks)
            self.masks.append(mask)
            self.gens.append(list(gens))
            return True

        trivial = np.zeros(T.size, dtype=bool)
        trivial[T.identity] = True
        add(trivial, [])
        for mask, gens in _perfect_subgroups(T):
            add(mask, gens)
        # prime-power reduction table: which primes p have x^p computed
        primes = [p for p in range(2, T.size + 1) if T.size % p == 0 and is_prime(p)]
        pw = {p: _power_all(T, p) for p in primes}
        i = 0
        while i < len(self.masks):
            K, kg = self.masks[i], self.gens[i]
            Nk = T.normalizer_mask(K)
            cand = Nk & ~K
            used = np.zeros(T.size, dtype=bool)
            for x in np.flatnonzero(cand):
                if used[x]:
                    continue
                if not any(K[pw[p][x]] for p in primes):
                    continue
                # K<x> = union of K x^j; x normalizes K
                H = T.extend(K, int(x))
                used |= H
                add(H, kg + [int(x)])
            i += 1
        order = sorted(range(len(self.masks)),
                       key=lambda j: (int(self.masks[j].sum()), tuple(np.flatnonzero(self.masks[j]).tolist())))
        self.masks = [self.masks[j] for j in order]
        self.gens = [self.gens[j] for j in order]

    def __len__(self) -> int:
        return len(self.masks)

    def orders(self) -> list[int]:
        return [int(m.sum()) for m in self.masks]

    def groups(self) -> list[PermGroup]:
        return [self.table.to_group(m, g or None) for m, g in zip(self.masks, self.gens)]

    def index_of(self, mask: np.ndarray) -> int:
        key = mask.tobytes()
        for j, m in enumerate(self.masks):
            if m.tobytes() == key:
                return j
        raise KeyError("mask is not a subgroup in the lattice")


def _power_all(T: GroupTable, k: int) -> np.ndarray:
    res = np.full(T.size, T.identity, dtype=np.int64)
    base = np.arange(T.size)
    while k:
        if k & 1:
            res = T.mul[res, base]
        base = T.mul[base, base]
        k >>= 1
    return res


def _perfect_subgroups(T: GroupTable) -> list[tuple[np.ndarray, list[int]]]:
    """Nontrivial perfect subgroups reachable as <a, b> and joins thereof.

    Every perfect subgroup lies in the perfect core, so only pairs from the
    core are tried.  Finite perfect groups in the size range handled here
    are 2-generated, and joins of perfect subgroups are perfect.
    """
    full = np.ones(T.size, dtype=bool)
    core = full
    while True:
        d = T.derived_mask(core, T.small_generators(core))
        if d.sum() == core.sum():
            break
        core = d
    if core.sum() == 1:
        return []
    found: dict[bytes, tuple[np.ndarray, list[int]]] = {}
    members = np.flatnonzero(core)
    c = T.conj_table()
    # one first generator per conjugacy class; conjugates are added after
    seen_a = np.zeros(T.size, dtype=bool)
    done_pairs: set[bytes] = set()
    for a in members:
        if seen_a[a] or a == T.identity:
            continue
        seen_a[c[:, a]] = True
        for b in members:
            if b == a or b == T.identity:
                continue
            H = T.closure([a, b])
            key = H.tobytes()
            if key in done_pairs:
                continue
            done_pairs.add(key)
            if T.derived_mask(H, [int(a), int(b)]).sum() == H.sum():
                found.setdefault(key, (H, [int(a), int(b)]))
    for H, hg in list(found.values()):
        for x in range(T.size):
            img = np.zeros(T.size, dtype=bool)
            img[c[x, np.flatnonzero(H)]] = True
            found.setdefault(img.tobytes(), (img, [int(c[x, g]) for g in hg]))
    # joins
    changed = True
    while changed:
        changed = False
        items = list(found.values())
        for i, (A, ag) in enumerate(items):
            for B, bg in items[i + 1:]:
                if (A & ~B).any() and (B & ~A).any():
                    J = T.closure(ag + bg)
                    key = J.tobytes()
                    if key not in found:
                        found[key] = (J, ag + bg)
                        changed = True
    return list(found.values())


def all_subgroups(G: PermGroup, bound: int | None = None) -> list[PermGroup]:
    """Every subgroup of G, sorted by order then element fingerprint."""
    return SubgroupLattice(GroupTable(G, bound)).groups()


def lattice(G: PermGroup, bound: int | None = None) -> SubgroupLattice:
    cached = G._cache.get(("lattice", bound))
    if cached is None:
        cached = SubgroupLattice(GroupTable(G, bound))
        G._cache[("lattice", bound)] = cached
    return cached


def intermediate_subgroups(N_amb: PermGroup, G: PermGroup, bound: int | None = None,
                           index_budget: int | None = None) -> list[PermGroup]:
    """All H with G <= H <= N_amb, as lifts of the subgroups of N_amb/G."""
    from .quotient import quotient_rep

    qr = quotient_rep(N_amb, G, index_budget)
    return [qr.lift(Q) for Q in all_subgroups(qr.quotient_group, bound)]


def elements(G: PermGroup, budget: int | None = None) -> list[Permutation]:
    return G.elements(budget)
