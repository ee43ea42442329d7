"""Permutation representations of quotient groups H/N.

Cosets are right cosets ``N h`` and H acts on them by right multiplication.
Each coset is labelled by its lexicographically least element, which the
kernel's stabilizer chain finds greedily, so the representation depends
only on (H, N) and not on generator order.
"""

from __future__ import annotations

import numpy as np

from .config import DEFAULT
from .errors import BudgetExceeded, NotASubgroupError, NotNormalError
from .group import PermGroup
from .perm import DTYPE, MAX_DEGREE, Permutation


class QuotientRep:
    """H/N acting on the right cosets of N in H (coset 1 is N itself)."""

    def __init__(self, parent: PermGroup, kernel: PermGroup, index_budget: int | None = None):
        budget = DEFAULT.quotient_index if index_budget is None else index_budget
        if parent.degree != kernel.degree:
            raise NotASubgroupError("kernel and parent have different degrees")
        if not kernel.is_subgroup_of(parent):
            raise NotASubgroupError("kernel is not a subgroup of the parent")
        index = parent.order() // kernel.order()
        if index > budget:
            raise BudgetExceeded("quotient index", index, budget)
        if index > MAX_DEGREE:
            raise BudgetExceeded("quotient index (permutation degree cap)", index, MAX_DEGREE)
        # normality check by generator conjugation
        conj = []
        for g in parent.gen_arrays():
            gi = np.empty_like(g)
            gi[g] = np.arange(g.shape[0], dtype=g.dtype)
            for k in kernel.gen_arrays():
                conj.append(g[k[gi]])
        if conj and not kernel.contains_many(np.stack(conj)).all():
            raise NotNormalError("kernel is not normal in the parent")
        self.parent = parent
        self.kernel = kernel
        self.index = index
        self._enumerate()

    def _enumerate(self) -> None:
        n = self.parent.degree
        N = self.kernel
        start = N.canonical_reps(np.arange(n, dtype=np.intp))
        reps = [start]
        where = {start.astype(DTYPE).tobytes(): 0}
        gens = [g.astype(np.intp) for g in self.parent.gen_arrays()]
        images = [[] for _ in gens]
        lo = 0
        while lo < len(reps):
            hi = len(reps)
            block = np.stack(reps[lo:hi])
            for gi, g in enumerate(gens):
                canon = N.canonical_reps(g[block]).astype(DTYPE)
                for row in canon:
                    key = row.tobytes()
                    j = where.get(key)
                    if j is None:
                        j = len(reps)
                        where[key] = j
                        reps.append(row.astype(np.intp))
                    images[gi].append(j)
            lo = hi
        if len(reps) != self.index:
            raise AssertionError("coset enumeration disagrees with the index")
        self._where = where
        self.transversal_array = np.stack(reps)
        qgens = [Permutation._wrap(np.asarray(im, dtype=DTYPE)) for im in images]
        self.quotient_group = PermGroup(qgens, self.index, order=self.index,
                                        name=f"quotient of order {self.index}")

    @property
    def transversal(self) -> list[Permutation]:
        return [Permutation._wrap(r.astype(DTYPE)) for r in self.transversal_array]

    def coset_index(self, h: np.ndarray) -> int:
        row = self.kernel.canonical_reps(np.asarray(h, dtype=np.intp)).astype(DTYPE)
        return self._where[row.tobytes()]

    def project(self, h: Permutation) -> Permutation:
        """Image of h in the quotient: coset N r -> N r h."""
        if not self.parent.contains(h):
            raise NotASubgroupError("element is not in the parent group")
        return self._project_array(h.array)

    def _project_array(self, a: np.ndarray) -> Permutation:
        a = a.astype(np.intp)
        canon = self.kernel.canonical_reps(a[self.transversal_array]).astype(DTYPE)
        im = np.fromiter((self._where[row.tobytes()] for row in canon), dtype=DTYPE, count=self.index)
        return Permutation._wrap(im)

    def project_group(self, K: PermGroup) -> PermGroup:
        """Image of a subgroup K <= H."""
        if not K.is_subgroup_of(self.parent):
            raise NotASubgroupError("not a subgroup of the parent group")
        gens = [self._project_array(a) for a in K.gen_arrays()]
        gens = [g for g in gens if not g.is_identity()]
        return PermGroup(gens, self.index)

    def preimage(self, q: Permutation) -> Permutation:
        """A representative of the coset named by q (the image of coset 1)."""
        return Permutation._wrap(self.transversal_array[int(q.array[0])].astype(DTYPE))

    def lift(self, Q: PermGroup) -> PermGroup:
        """Full preimage of a subgroup Q of the quotient."""
        if Q.degree != self.index or not Q.is_subgroup_of(self.quotient_group):
            raise NotASubgroupError("not a subgroup of the quotient group")
        gens = list(self.kernel.generators) + [self.preimage(q) for q in Q.generators if not q.is_identity()]
        gens = [g for g in gens if not g.is_identity()]
        return PermGroup(gens, self.parent.degree, order=Q.order() * self.kernel.order())


def quotient_rep(H: PermGroup, N: PermGroup, index_budget: int | None = None) -> QuotientRep:
    return QuotientRep(H, N, index_budget)


def lift(qr: QuotientRep, Q: PermGroup) -> PermGroup:
    return qr.lift(Q)
