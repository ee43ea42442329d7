"""Permutation groups backed by a stabilizer chain.

The chain is built along the fixed point order 0, 1, 2, ...: level ``i``
stabilizes points ``0..i-1`` and records the orbit of point ``i``.  Levels
whose orbit is a single point are kept (they cost nothing), which gives two
properties used throughout the package:

* the reported base is the sequence of smallest non-fixed points, so all
  downstream enumeration orders are reproducible;
* the lexicographically least element of a coset ``Gh`` is found greedily,
  one level at a time (:meth:`PermGroup.canonical_reps`).

Construction is a Schreier-Sims variant: an optional random phase (product
replacement, fixed seed) followed by a deterministic pass that sifts every
Schreier generator.  When the order is known in advance the random phase
stops as soon as the transversal product reaches it, which is already a
proof that the chain is complete.
"""

from __future__ import annotations

import math
import random
from typing import Iterable, Sequence

import numpy as np

from .config import DEFAULT
from .errors import BudgetExceeded, DegreeMismatchError, NotASubgroupError
from .perm import DTYPE, Permutation, as_array

_SEED = 20240607


def _inv(a: np.ndarray) -> np.ndarray:
    out = np.empty_like(a)
    out[a] = np.arange(a.shape[0], dtype=a.dtype)
    return out


def _first_moved(a: np.ndarray) -> int:
    moved = np.flatnonzero(a != np.arange(a.shape[0], dtype=a.dtype))
    return int(moved[0]) if moved.size else -1


class _Level:
    __slots__ = ("point", "gens", "orbit", "reps", "invs", "checked")

    def __init__(self, point: int, ident: np.ndarray):
        self.point = point
        self.gens: list[np.ndarray] = []
        self.orbit = [point]
        self.reps = {point: ident}
        self.invs = {point: ident}
        self.checked: set[tuple[int, int]] = set()

    def add_gen(self, g: np.ndarray) -> None:
        self.gens.append(g)
        gens, reps, invs, orbit = self.gens, self.reps, self.invs, self.orbit
        i = 0
        while i < len(orbit):
            x = orbit[i]
            u = reps[x]
            for s in gens:
                y = int(s[x])
                if y not in reps:
                    r = s[u]
                    reps[y] = r
                    invs[y] = _inv(r)
                    orbit.append(y)
            i += 1


class _Chain:
    """Mutable stabilizer chain; frozen once handed to a PermGroup."""

    def __init__(self, n: int):
        self.n = n
        self.ident = np.arange(n, dtype=DTYPE)
        self.levels: list[_Level] = []

    # -- basic operations -------------------------------------------------
    def order(self) -> int:
        o = 1
        for lev in self.levels:
            o *= len(lev.orbit)
        return o

    def sift(self, h: np.ndarray, start: int = 0) -> tuple[np.ndarray, int]:
        levels = self.levels
        for l in range(start, len(levels)):
            lev = levels[l]
            x = int(h[lev.point])
            if x == lev.point:
                continue
            inv = lev.invs.get(x)
            if inv is None:
                return h, l
            h = inv[h]
        return h, len(levels)

    def is_identity(self, h: np.ndarray) -> bool:
        return bool(np.array_equal(h, self.ident))

    def contains(self, h: np.ndarray) -> bool:
        h, j = self.sift(h)
        return j == len(self.levels) and self.is_identity(h)

    def _insert(self, h: np.ndarray, lo: int, hi: int) -> int:
        """Add h as a strong generator at levels lo..hi; return deepest level."""
        if hi >= len(self.levels):
            m = _first_moved(h)
            while len(self.levels) <= m:
                self.levels.append(_Level(len(self.levels), self.ident))
            hi = m
        for l in range(lo, hi + 1):
            self.levels[l].add_gen(h)
        return hi

    def add_generator(self, g: np.ndarray) -> None:
        m = _first_moved(g)
        if m < 0:
            return
        self._insert(g, 0, m)

    # -- Schreier-Sims ------------------------------------------------------
    def random_phase(self, gens: list[np.ndarray], target: int | None,
                     rng: random.Random, patience: int = 30) -> None:
        if not gens or (target is not None and self.order() >= target):
            return
        slots = [g for g in gens] * max(1, -(-10 // len(gens)))
        slots = slots[:max(10, len(gens))]
        acc = self.ident
        for _ in range(40):  # warm up product replacement
            acc = self._pr_step(slots, acc, rng)
        misses = 0
        steps = 0
        limit = 200000
        while steps < limit:
            if target is not None:
                if self.order() >= target:
                    return
            elif misses >= patience:
                return
            steps += 1
            acc = self._pr_step(slots, acc, rng)
            h, j = self.sift(acc)
            if j == len(self.levels) and self.is_identity(h):
                misses += 1
                continue
            misses = 0
            self._insert(h, 0, j)

    @staticmethod
    def _pr_step(slots, acc, rng):
        i, j = rng.sample(range(len(slots)), 2)
        if rng.random() < 0.5:
            slots[i] = slots[j][slots[i]]
        else:
            slots[i] = slots[i][slots[j]]
        return slots[i][acc]

    def complete(self) -> None:
        """Deterministic Schreier-Sims over the current chain."""
        i = len(self.levels) - 1
        while i >= 0:
            found = self._check_level(i)
            if found is None:
                i -= 1
                continue
            h, j = found
            i = self._insert(h, i + 1, j)

    def _check_level(self, i: int):
        lev = self.levels[i]
        checked = lev.checked
        k = 0
        while k < len(lev.orbit):
            x = lev.orbit[k]
            u = lev.reps[x]
            for si, s in enumerate(lev.gens):
                if (x, si) in checked:
                    continue
                y = int(s[x])
                sg = lev.invs[y][s[u]]
                if self.is_identity(sg):
                    checked.add((x, si))
                    continue
                h, j = self.sift(sg, i + 1)
                if j == len(self.levels) and self.is_identity(h):
                    checked.add((x, si))
                    continue
                return h, j
            k += 1
        return None

    def trim(self) -> None:
        """Drop trailing levels whose stabilizer is trivial."""
        while self.levels and len(self.levels[-1].orbit) == 1:
            self.levels.pop()


_RANDOM_MIN_DEGREE = 32


def build_chain(gens: Sequence[np.ndarray], n: int, order: int | None = None,
                randomize: bool = True) -> _Chain:
    chain = _Chain(n)
    gens = [g for g in gens if _first_moved(g) >= 0]
    for g in gens:
        chain.add_generator(g)
    # small degrees: the deterministic pass alone is cheaper
    if randomize and gens and n > _RANDOM_MIN_DEGREE:
        chain.random_phase(list(gens), order, random.Random(_SEED))
    if order is None or chain.order() != order:
        chain.complete()
    if order is not None and chain.order() != order:
        raise ValueError(f"stated order {order} but generators give {chain.order()}")
    chain.trim()
    return chain


def _symmetric_chain(n: int, alternating: bool = False) -> _Chain:
    chain = _Chain(n)
    last = n - 2 if not alternating else n - 3
    for i in range(max(last + 1, 0)):
        lev = _Level(i, chain.ident)
        for x in range(i + 1, n):
            a = chain.ident.copy()
            if not alternating:
                a[i], a[x] = x, i
            else:
                y = n - 1 if x != n - 1 else n - 2
                # 3-cycle i -> x -> y -> i
                a[i], a[x], a[y] = x, y, i
            lev.reps[x] = a
            lev.invs[x] = _inv(a)
            lev.orbit.append(x)
            lev.gens.append(a)
        chain.levels.append(lev)
    return chain


class Bsgs:
    """Read-only view of a completed stabilizer chain (1-based points)."""

    def __init__(self, chain: _Chain):
        self._chain = chain
        self._arrays = None

    @property
    def degree(self) -> int:
        return self._chain.n

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(lev.point + 1 for lev in self._chain.levels if len(lev.orbit) > 1)

    @property
    def strong_generators(self) -> tuple[Permutation, ...]:
        seen: dict[bytes, np.ndarray] = {}
        for lev in self._chain.levels:
            for g in lev.gens:
                seen.setdefault(g.tobytes(), g)
        return tuple(Permutation._wrap(g) for g in seen.values())

    @property
    def transversals(self) -> list[dict[int, Permutation]]:
        return [{x + 1: Permutation._wrap(lev.reps[x]) for x in lev.orbit}
                for lev in self._chain.levels if len(lev.orbit) > 1]

    def transversal_sizes(self) -> list[int]:
        return [len(lev.orbit) for lev in self._chain.levels if len(lev.orbit) > 1]

    def order(self) -> int:
        return self._chain.order()

    # -- vectorized helpers -------------------------------------------------
    def level_arrays(self):
        """Per non-trivial level: (point, orbit array, reps stack, inverse stack, lookup)."""
        if self._arrays is None:
            out = []
            n = self._chain.n
            for lev in self._chain.levels:
                if len(lev.orbit) == 1:
                    continue
                orbit = np.array(lev.orbit, dtype=np.intp)
                # kept in the compact dtype: at large degree these stacks dominate memory
                reps = np.stack([lev.reps[x] for x in lev.orbit])
                invs = np.stack([lev.invs[x] for x in lev.orbit])
                # share storage with the chain instead of holding two copies
                for k, x in enumerate(lev.orbit):
                    lev.reps[x] = reps[k]
                    lev.invs[x] = invs[k]
                lookup = np.full(n, -1, dtype=np.intp)
                lookup[orbit] = np.arange(len(orbit))
                out.append((lev.point, orbit, reps, invs, lookup))
            self._arrays = out
        return self._arrays


class PermGroup:
    """A permutation group given by generators, immutable once created.

    ``order`` may be supplied when it is known from a formula; the chain is
    then built by the faster randomized route and checked against it.
    ``tags`` carries constructor knowledge (for example a socle factory or a
    metacyclic generator pair) that later algorithms may exploit.
    """

    def __init__(self, generators: Iterable[Permutation], degree: int | None = None, *,
                 order: int | None = None, name: str | None = None, tags: dict | None = None):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree required for a group without generators")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatchError(f"generator of degree {g.degree} in a group of degree {degree}")
        if not gens:
            gens = [Permutation.identity(degree)]
        self._degree = int(degree)
        self._gens = tuple(gens)
        self._order_hint = order
        self.name = name
        self.tags = dict(tags or {})
        self._chain: _Chain | None = None
        self._bsgs: Bsgs | None = None
        self._cache: dict = {}

    @classmethod
    def from_arrays(cls, arrays: Iterable[np.ndarray], degree: int, **kw) -> "PermGroup":
        return cls([Permutation._wrap(np.asarray(a, dtype=DTYPE)) for a in arrays], degree, **kw)

    @classmethod
    def _with_chain(cls, gens, degree, chain: _Chain, **kw) -> "PermGroup":
        G = cls(gens, degree, **kw)
        G._chain = chain
        return G

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls([], degree)

    # -- basic attributes -----------------------------------------------------
    @property
    def degree(self) -> int:
        return self._degree

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return self._gens

    def gen_arrays(self) -> list[np.ndarray]:
        return [g.array for g in self._gens]

    def __repr__(self) -> str:
        label = self.name or "PermGroup"
        if self._chain is not None:
            return f"<{label} degree={self.degree} order={self.order()}>"
        return f"<{label} degree={self.degree} gens={len(self._gens)}>"

    # -- chain ----------------------------------------------------------------
    def _get_chain(self) -> _Chain:
        if self._chain is None:
            if self.tags.get("symmetric"):
                self._chain = _symmetric_chain(self.degree)
            elif self.tags.get("alternating"):
                self._chain = _symmetric_chain(self.degree, alternating=True)
            else:
                self._chain = build_chain(self.gen_arrays(), self.degree, self._order_hint)
        return self._chain

    @property
    def bsgs(self) -> Bsgs:
        if self._bsgs is None:
            self._bsgs = Bsgs(self._get_chain())
        return self._bsgs

    def has_chain(self) -> bool:
        return self._chain is not None

    def order(self) -> int:
        return self._get_chain().order()

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self._gens)

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatchError(f"degree {p.degree} vs group degree {self.degree}")
        return self._get_chain().contains(p.array)

    __contains__ = contains

    def contains_many(self, H: np.ndarray) -> np.ndarray:
        """Membership for each row of an (m, n) array of 0-based images."""
        H = np.asarray(H, dtype=np.intp)
        if H.ndim == 1:
            H = H[None, :]
        ok = np.ones(H.shape[0], dtype=bool)
        for point, orbit, reps, invs, lookup in self.bsgs.level_arrays():
            pos = lookup[H[:, point]]
            bad = pos < 0
            ok &= ~bad
            pos[bad] = 0
            H = invs[pos[:, None], H]
        ident = np.arange(self.degree)
        ok &= (H == ident).all(axis=1)
        return ok

    def canonical_reps(self, H: np.ndarray) -> np.ndarray:
        """Lexicographically least element of each right coset G h (rows of H)."""
        H = np.asarray(H, dtype=np.intp)
        single = H.ndim == 1
        if single:
            H = H[None, :]
        rows = np.arange(H.shape[0])[:, None]
        for point, orbit, reps, invs, lookup in self.bsgs.level_arrays():
            best = np.argmin(H[:, orbit], axis=1)
            U = reps[best]
            H = H[rows, U]
        H = H.astype(np.intp, copy=False)
        return H[0] if single else H

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        if self.degree != other.degree:
            return False
        return bool(other.contains_many(np.stack(self.gen_arrays())).all())

    def equals(self, other: "PermGroup") -> bool:
        if self.degree != other.degree:
            return False
        return self.order() == other.order() and self.is_subgroup_of(other)

    # -- orbits and sampling -------------------------------------------------
    def orbits(self) -> list[list[int]]:
        n = self.degree
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.gen_arrays():
            for i, j in enumerate(g.tolist()):
                a, b = find(i), find(j)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        groups: dict[int, list[int]] = {}
        for i in range(n):
            groups.setdefault(find(i), []).append(i + 1)
        return sorted(groups.values())

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def random_element(self, rng: random.Random | None = None) -> Permutation:
        rng = rng or random.Random()
        h = self._get_chain().ident
        for lev in self._get_chain().levels:
            x = lev.orbit[rng.randrange(len(lev.orbit))]
            h = h[lev.reps[x]]  # product u_0 u_1 ... taken right to left
        return Permutation._wrap(h)

    def random_arrays(self, count: int, seed: int = 0) -> np.ndarray:
        """``count`` uniform random elements as a (count, n) array."""
        rng = np.random.default_rng(seed)
        H = np.tile(np.arange(self.degree, dtype=np.intp), (count, 1))
        rows = np.arange(count)[:, None]
        for point, orbit, reps, invs, lookup in self.bsgs.level_arrays():
            U = reps[rng.integers(0, len(orbit), size=count)]
            H = H[rows, U]
        return H.astype(np.intp, copy=False)

    # -- element enumeration -------------------------------------------------
    def elements_array(self, budget: int | None = None) -> np.ndarray:
        """All elements as an (|G|, n) intp array, in chain order."""
        budget = DEFAULT.elements if budget is None else budget
        N = self.order()
        if N > budget:
            raise BudgetExceeded("element enumeration", N, budget)
        cached = self._cache.get("elements")
        if cached is not None:
            return cached
        E = np.arange(self.degree, dtype=np.intp)[None, :]
        for point, orbit, reps, invs, lookup in reversed(self.bsgs.level_arrays()):
            # g = a u with a in the deeper stabilizer: (i)g = u[a[i]]
            E = reps[:, E].reshape(-1, self.degree)
        E = E.astype(np.intp, copy=False)
        E.flags.writeable = False
        self._cache["elements"] = E
        return E

    def elements(self, budget: int | None = None) -> list[Permutation]:
        return [Permutation._wrap(row.astype(DTYPE)) for row in self.elements_array(budget)]

    def is_abelian(self) -> bool:
        gs = self.gen_arrays()
        for i in range(len(gs)):
            for j in range(i + 1, len(gs)):
                if not np.array_equal(gs[j][gs[i]], gs[i][gs[j]]):
                    return False
        return True


# -- functional interface -------------------------------------------------------

def build_bsgs(G: PermGroup) -> Bsgs:
    return G.bsgs


def order(G: PermGroup) -> int:
    return G.order()


def contains(G: PermGroup, p: Permutation) -> bool:
    return G.contains(p)


def equals(G1: PermGroup, G2: PermGroup) -> bool:
    return G1.equals(G2)


def is_subgroup(A: PermGroup, B: PermGroup) -> bool:
    return A.is_subgroup_of(B)


def random_element(G: PermGroup, rng: random.Random | None = None) -> Permutation:
    return G.random_element(rng)


def subgroup(G: PermGroup, gens: Sequence[Permutation], order: int | None = None,
             name: str | None = None) -> PermGroup:
    """The subgroup of G generated by ``gens`` (membership is checked)."""
    gens = list(gens)
    if gens:
        arr = np.stack([g.array for g in gens])
        if not G.contains_many(arr).all():
            raise NotASubgroupError("generator outside the ambient group")
    return PermGroup(gens, G.degree, order=order, name=name)


def join(groups: Sequence[PermGroup], name: str | None = None) -> PermGroup:
    gens = [g for H in groups for g in H.generators if not g.is_identity()]
    return PermGroup(gens, groups[0].degree, name=name)


def factorial(n: int) -> int:
    return math.factorial(n)
