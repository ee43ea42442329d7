"""Matrix groups over small fields and their permutation actions.

Vectors are rows and act on the right (``v -> vM``).  Point labels:

* affine points: all of F_q^d, index = base-q number with the first
  coordinate most significant (so index order is lexicographic);
* nonzero vectors: the affine labels minus the zero vector;
* projective points: vectors whose first nonzero coordinate is 1, in
  lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, prod

import numpy as np

from .fields import FieldSpec
from .perm import DTYPE

MAX_ACTION_DEGREE = 10**4


@dataclass(frozen=True)
class MatrixGroup:
    """Generators of a matrix group; ``frobenius`` adds the map x -> x^p."""

    field: FieldSpec
    d: int
    gens: tuple = field(repr=False)
    frobenius: bool = False
    name: str = ""
    order: int | None = None


def identity_matrix(d: int) -> np.ndarray:
    return np.eye(d, dtype=np.int64)


def mat_mul(F: FieldSpec, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    d = A.shape[0]
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for k in range(d):
        out = F.add[out, F.mul[A[:, k][:, None], B[k, :][None, :]]]
    return out


def mat_det(F: FieldSpec, A: np.ndarray) -> int:
    """Determinant by Gaussian elimination over F."""
    A = A.copy()
    d = A.shape[0]
    det = 1
    for c in range(d):
        piv = next((r for r in range(c, d) if A[r, c]), None)
        if piv is None:
            return 0
        if piv != c:
            A[[c, piv]] = A[[piv, c]]
            det = int(F.neg[det])
        det = int(F.mul[det, A[c, c]])
        ic = int(F.inv[A[c, c]])
        for r in range(c + 1, d):
            if A[r, c]:
                f = int(F.mul[A[r, c], ic])
                A[r] = F.add[A[r], F.neg[F.mul[f, A[c]]]]
    return det


def mat_inv(F: FieldSpec, A: np.ndarray) -> np.ndarray:
    d = A.shape[0]
    M = np.concatenate([A.copy(), identity_matrix(d)], axis=1)
    for c in range(d):
        piv = next((r for r in range(c, d) if M[r, c]), None)
        if piv is None:
            raise ValueError("singular matrix")
        M[[c, piv]] = M[[piv, c]]
        M[c] = F.mul[int(F.inv[M[c, c]]), M[c]]
        for r in range(d):
            if r != c and M[r, c]:
                M[r] = F.add[M[r], F.neg[F.mul[int(M[r, c]), M[c]]]]
    return M[:, d:]


def transpose_inverse(F: FieldSpec, A: np.ndarray) -> np.ndarray:
    return mat_inv(F, A).T.copy()


# -- standard generating sets --------------------------------------------------

def sl_generators(F: FieldSpec, d: int) -> list[np.ndarray]:
    """Elementary transvections I + a E_ij, a running over an F_p-basis."""
    gens = []
    for i in range(d):
        for j in range(d):
            if i == j:
                continue
            for a in F.additive_basis():
                T = identity_matrix(d)
                T[i, j] = a
                gens.append(T)
    return gens


def gl_generators(F: FieldSpec, d: int) -> list[np.ndarray]:
    D = identity_matrix(d)
    D[0, 0] = F.primitive_element()
    return sl_generators(F, d) + ([D] if F.q > 2 else [])


def gl_order(d: int, q: int) -> int:
    return prod(q**d - q**i for i in range(d))


def sl_order(d: int, q: int) -> int:
    return gl_order(d, q) // (q - 1)


def psl_order(d: int, q: int) -> int:
    return sl_order(d, q) // gcd(d, q - 1)


def gl(F: FieldSpec, d: int) -> MatrixGroup:
    return MatrixGroup(F, d, tuple(gl_generators(F, d)), name=f"GL({d},{F.q})", order=gl_order(d, F.q))


def sl(F: FieldSpec, d: int) -> MatrixGroup:
    return MatrixGroup(F, d, tuple(sl_generators(F, d)), name=f"SL({d},{F.q})", order=sl_order(d, F.q))


# -- point sets ------------------------------------------------------------------

@lru_cache(maxsize=None)
def all_vectors(F: FieldSpec, d: int) -> np.ndarray:
    q = F.q
    N = q**d
    if N > MAX_ACTION_DEGREE:
        raise ValueError(f"action on {N} points exceeds {MAX_ACTION_DEGREE}")
    idx = np.arange(N)
    V = np.stack([(idx // q ** (d - 1 - j)) % q for j in range(d)], axis=1)
    V.flags.writeable = False
    return V


def vector_index(F: FieldSpec, V: np.ndarray) -> np.ndarray:
    d = V.shape[1]
    w = F.q ** np.arange(d - 1, -1, -1)
    return V @ w


def apply_matrix(F: FieldSpec, V: np.ndarray, M: np.ndarray) -> np.ndarray:
    """Rows of V times M."""
    d = M.shape[0]
    out = np.zeros((V.shape[0], M.shape[1]), dtype=np.int64)
    for i in range(d):
        out = F.add[out, F.mul[V[:, i][:, None], M[i][None, :]]]
    return out


@lru_cache(maxsize=None)
def projective_points(F: FieldSpec, d: int) -> tuple[np.ndarray, np.ndarray]:
    """(normalized representatives, map from vector index to point index or -1)."""
    V = all_vectors(F, d)
    nz = V.any(axis=1)
    first = np.argmax(V != 0, axis=1)
    lead = V[np.arange(len(V)), first]
    normal = nz & (lead == 1)
    reps = V[normal]
    lookup = np.full(len(V), -1, dtype=np.int64)
    rep_index = {int(k): i for i, k in enumerate(vector_index(F, reps))}
    for k in np.flatnonzero(nz):
        v = V[k]
        s = int(F.inv[v[first[k]]])
        w = F.mul[s, v]
        lookup[k] = rep_index[int(vector_index(F, w[None, :])[0])]
    reps.flags.writeable = False
    lookup.flags.writeable = False
    return reps, lookup


# -- permutation images ----------------------------------------------------------

def affine_perm(F: FieldSpec, d: int, M: np.ndarray | None = None,
                t: np.ndarray | None = None, frob: bool = False) -> np.ndarray:
    """Permutation of F_q^d induced by v -> (v^frob) M + t."""
    V = all_vectors(F, d)
    W = F.frob[V] if frob else V
    if M is not None:
        W = apply_matrix(F, W, M)
    if t is not None:
        W = F.add[W, np.asarray(t)[None, :]]
    return vector_index(F, W).astype(DTYPE)


def nonzero_perm(F: FieldSpec, d: int, M: np.ndarray | None = None, frob: bool = False) -> np.ndarray:
    a = affine_perm(F, d, M, frob=frob)
    return (a[1:].astype(np.int64) - 1).astype(DTYPE)


def projective_perm(F: FieldSpec, d: int, M: np.ndarray | None = None, frob: bool = False) -> np.ndarray:
    reps, lookup = projective_points(F, d)
    W = F.frob[reps] if frob else reps
    if M is not None:
        W = apply_matrix(F, W, M)
    return lookup[vector_index(F, W)].astype(DTYPE)


def projective_degree(d: int, q: int) -> int:
    return (q**d - 1) // (q - 1)
