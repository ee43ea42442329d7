"""Explicit element lists with fast row -> index lookup.

An element is determined by its images of the base points, so lookups hash
only those columns.  Used wherever an algorithm needs to enumerate a
(budget-limited) group: centers, conjugacy classes, multiplication tables.
"""

from __future__ import annotations

import numpy as np

from .group import PermGroup


class ElementIndex:
    def __init__(self, G: PermGroup, budget: int | None = None):
        self.group = G
        self.elements = G.elements_array(budget)
        self.n = G.degree
        self.size = self.elements.shape[0]
        self.base = np.array([b - 1 for b in G.bsgs.base], dtype=np.intp)
        nb = len(self.base)
        self._int_keys = nb == 0 or self.n ** nb < 2**62
        if self._int_keys:
            self._weights = (self.n ** np.arange(nb, dtype=np.int64)).astype(np.int64)
            keys = self._keys(self.elements)
            order = np.argsort(keys, kind="stable")
            self._sorted = keys[order]
            self._perm = order
        else:
            self._dict = {row.tobytes(): i for i, row in enumerate(self.elements[:, self.base])}
        ident = np.arange(self.n)
        self.identity = int(self.lookup(ident[None, :])[0])

    def _keys(self, rows: np.ndarray) -> np.ndarray:
        if len(self.base) == 0:
            return np.zeros(rows.shape[0], dtype=np.int64)
        return rows[:, self.base].astype(np.int64) @ self._weights

    def lookup(self, rows: np.ndarray) -> np.ndarray:
        """Indices of the given rows (which must be elements of the group)."""
        rows = np.asarray(rows)
        if self._int_keys:
            keys = self._keys(rows)
            pos = np.searchsorted(self._sorted, keys)
            return self._perm[pos]
        sub = np.ascontiguousarray(rows[:, self.base])
        return np.array([self._dict[r.tobytes()] for r in sub], dtype=np.intp)

    def inverse_indices(self) -> np.ndarray:
        E = self.elements
        inv = np.empty_like(E)
        rows = np.arange(E.shape[0])[:, None]
        inv[rows, E] = np.arange(self.n)[None, :]
        return self.lookup(inv)

    def right_multiply(self, g: np.ndarray) -> np.ndarray:
        """Index of e*g for every element e."""
        return self.lookup(np.asarray(g)[self.elements])

    def conjugate_by(self, g: np.ndarray) -> np.ndarray:
        """Index of g^-1 e g for every element e."""
        g = np.asarray(g, dtype=np.intp)
        ginv = np.empty_like(g)
        ginv[g] = np.arange(self.n)
        return self.lookup(g[self.elements[:, ginv]])

    def powers(self, k: int) -> np.ndarray:
        """Rows e^k for every element e."""
        E = self.elements
        rows = np.arange(E.shape[0])[:, None]
        result = np.tile(np.arange(self.n), (E.shape[0], 1))
        base = E
        while k:
            if k & 1:
                result = base[rows, result]
            base = base[rows, base]
            k >>= 1
        return result

    def element_orders(self) -> np.ndarray:
        """Order of every element, from its cycle lengths."""
        E = self.elements
        n = self.n
        orders = np.ones(E.shape[0], dtype=np.int64)
        # cycle length of point i is the first k with e^k(i) = i
        length = np.zeros(E.shape, dtype=np.int64)
        rows = np.arange(E.shape[0])[:, None]
        cur = E.copy()
        ident = np.arange(n)[None, :]
        k = 1
        while True:
            hit = (cur == ident) & (length == 0)
            length[hit] = k
            if (length > 0).all():
                break
            cur = E[rows, cur]
            k += 1
        for col in range(n):
            orders = np.lcm(orders, length[:, col])
        return orders
