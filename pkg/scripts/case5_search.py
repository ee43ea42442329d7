"""Regenerate the shipped matrix data for the solvable 2-transitive witnesses.

Run from the repository root:

    python scripts/case5_search.py            # write src/derivant/data/*.mat
    python scripts/case5_search.py --check    # compare with the shipped files

Degree 81 (d = 4, q = 3).  E = D8 o Q8 is built as the Kronecker product of
2-dimensional D8 and Q8 representations over F_3.  Its normalizer in
GL_4(3) is found by solving, for every admissible choice of generator
images f_i in E (same order and trace as e_i), the linear system
e_i n = n f_i; the invertible solutions are exactly the normalizing
matrices.  An element of order 5 gives E:5, and the normalizer of E:5 in
N gives (E:5).4, whose unique index-2 overgroup of E:5 is (E:5).2.

Degrees 9 and 25 (d = 2): Q8 inside SL_2(3) and SL_2(5), with the
normalizers N_SL2(5)(Q8) and N_GL2(5)(Q8) found by the same solver.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from derivant import matrices as mx  # noqa: E402
from derivant.constructors import linear_from_matrices  # noqa: E402
from derivant.datafiles import format_matrices  # noqa: E402
from derivant.fields import field  # noqa: E402
from derivant.structure import closure_from_arrays  # noqa: E402
from derivant.subgroups import lattice  # noqa: E402

DATA = ROOT / "src" / "derivant" / "data"


def nullspace_mod_p(A: np.ndarray, p: int) -> np.ndarray:
    """Basis (rows) of {x : A x = 0} over F_p."""
    A = A.copy() % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i, c]), None)
        if piv is None:
            continue
        A[[r, piv]] = A[[piv, r]]
        A[r] = (A[r] * pow(int(A[r, c]), p - 2, p)) % p
        for i in range(rows):
            if i != r and A[i, c]:
                A[i] = (A[i] - A[i, c] * A[r]) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        x = np.zeros(cols, dtype=np.int64)
        x[fc] = 1
        for i, pc in enumerate(pivots):
            x[pc] = (-A[i, fc]) % p
        basis.append(x)
    return np.array(basis, dtype=np.int64).reshape(len(basis), cols)


def group_elements(F, mats):
    """All products of the given matrices (breadth-first closure)."""
    d = mats[0].shape[0]
    ident = np.eye(d, dtype=np.int64)
    seen = {ident.tobytes(): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for A in frontier:
            for M in mats:
                B = mx.mat_mul(F, A, M)
                k = B.tobytes()
                if k not in seen:
                    seen[k] = B
                    nxt.append(B)
        frontier = nxt
    return list(seen.values())


def mat_order(F, M):
    d = M.shape[0]
    ident = np.eye(d, dtype=np.int64)
    A, k = M, 1
    while not np.array_equal(A, ident):
        A = mx.mat_mul(F, A, M)
        k += 1
    return k


def normalizer_matrices(F, gens, ambient_det=None):
    """All n with n^-1 E n = E (E = <gens>), optionally with det n in ambient_det."""
    p = F.p
    d = gens[0].shape[0]
    elems = group_elements(F, gens)
    trace = lambda M: int(np.trace(M)) % p  # noqa: E731
    profile = [(mat_order(F, g), trace(g)) for g in gens]
    pools = [[f for f in elems if (mat_order(F, f), trace(f)) == pr] for pr in profile]
    ident = np.eye(d, dtype=np.int64)
    found = {}

    def blocks(e, f):
        return (np.kron(e, ident) - np.kron(ident, f.T)) % p

    def search(i, A):
        if i == len(gens):
            ns = nullspace_mod_p(A, p)
            for v in ns:
                n = v.reshape(d, d)
                det = mx.mat_det(F, n)
                if det and (ambient_det is None or det in ambient_det):
                    found.setdefault(n.tobytes(), n)
            return
        for f in pools[i]:
            B = blocks(gens[i], f) if A is None else np.vstack([A, blocks(gens[i], f)])
            if nullspace_mod_p(B, p).shape[0] == 0:
                continue
            search(i + 1, B)

    search(0, None)
    return list(found.values())


def perm_group(F, d, mats, order=None):
    return linear_from_matrices(F, d, mats, order=order)


def to_matrix(F, d, row):
    """Matrix of a permutation of the nonzero vectors (row images of e_i)."""
    V = mx.all_vectors(F, d)
    M = np.zeros((d, d), dtype=np.int64)
    for i in range(d):
        e = np.zeros(d, dtype=np.int64)
        e[i] = 1
        k = int(mx.vector_index(F, e[None, :])[0]) - 1
        M[i] = V[int(row[k]) + 1]
    return M


def subgroup_matrices(F, d, G):
    return [to_matrix(F, d, g.array) for g in G.generators]


def build():
    files = {}
    # -- d = 4, q = 3 -----------------------------------------------------------
    F3 = field(3)
    I2 = np.eye(2, dtype=np.int64)
    r = np.array([[0, 2], [1, 0]])
    s = np.array([[1, 0], [0, 2]])
    qi = np.array([[0, 1], [2, 0]])
    qj = np.array([[1, 1], [1, 2]])
    Egens = [np.kron(r, I2) % 3, np.kron(s, I2) % 3, np.kron(I2, qi) % 3, np.kron(I2, qj) % 3]
    E = perm_group(F3, 4, Egens, order=32)
    Nm = normalizer_matrices(F3, Egens)
    N = closure_from_arrays([perm_group(F3, 4, [n]).generators[0].array for n in Nm], 80)
    assert N.order() == 3840, N.order()
    # an element of order 5
    five = next(row for row in N.elements_array() if _order(row) == 5)
    E5 = closure_from_arrays(list(E.gen_arrays()) + [five.astype(np.uint16)], 80)
    assert E5.order() == 160
    from derivant.normalizer import normalizer_in

    E54 = normalizer_in(N, E5, "exact").group
    assert E54.order() == 640
    L = lattice(E54, 1000)
    E52 = next(L.table.to_group(m, g) for m, g in zip(L.masks, L.gens)
               if m.sum() == 320 and E5.is_subgroup_of(L.table.to_group(m, g)))
    assert E52.order() == 320
    for name, G, o in (("E:5", E5, 160), ("(E:5).2", E52, 320), ("(E:5).4", E54, 640)):
        mats = Egens + [to_matrix(F3, 4, g.array) for g in G.generators]
        # keep a lean generating set: E's generators plus what the group adds
        chk = perm_group(F3, 4, mats, order=o)
        assert chk.order() == o
        key = {"E:5": "case5_d4_e5.mat", "(E:5).2": "case5_d4_e5_2.mat", "(E:5).4": "case5_d4_e5_4.mat"}[name]
        files[key] = format_matrices(F3, 4, mats, order=o, name=name)
    files["case5_d4_e.mat"] = format_matrices(F3, 4, Egens, order=32, name="D8oQ8")
    # -- d = 2, q = 3 -----------------------------------------------------------
    Q3 = [np.array([[0, 1], [2, 0]]), np.array([[1, 1], [1, 2]])]
    assert perm_group(F3, 2, Q3, order=8).order() == 8
    files["case5_d2_q3_q8.mat"] = format_matrices(F3, 2, Q3, order=8, name="Q8")
    # -- d = 2, q = 5 -----------------------------------------------------------
    F5 = field(5)
    Q5 = [np.array([[0, 4], [1, 0]]), np.array([[0, 2], [2, 0]])]
    assert perm_group(F5, 2, Q5, order=8).order() == 8
    NG = normalizer_matrices(F5, Q5)
    NGp = closure_from_arrays([perm_group(F5, 2, [n]).generators[0].array for n in NG], 24)
    NS = normalizer_matrices(F5, Q5, ambient_det={1})
    NSp = closure_from_arrays([perm_group(F5, 2, [n]).generators[0].array for n in NS], 24)
    assert NSp.order() == 24 and NGp.order() == 96, (NSp.order(), NGp.order())
    files["case5_d2_q5_q8.mat"] = format_matrices(F5, 2, Q5, order=8, name="Q8")
    files["case5_d2_q5_nsl.mat"] = format_matrices(F5, 2, subgroup_matrices(F5, 2, NSp), order=24,
                                                   name="N_SL2(5)(Q8)")
    files["case5_d2_q5_ngl.mat"] = format_matrices(F5, 2, subgroup_matrices(F5, 2, NGp), order=96,
                                                   name="N_GL2(5)(Q8)")
    return files


def _order(row):
    ident = np.arange(row.shape[0])
    cur, k = row.copy(), 1
    while not np.array_equal(cur, ident):
        cur = row[cur]
        k += 1
    return k


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="compare with the shipped files instead of writing")
    args = ap.parse_args(argv)
    files = build()
    bad = 0
    for name, text in sorted(files.items()):
        path = DATA / name
        if args.check:
            same = path.exists() and path.read_text() == text
            print(f"{name}: {'ok' if same else 'DIFFERS'}")
            bad += not same
        else:
            path.write_text(text)
            print(f"wrote {path.relative_to(ROOT)}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
