"""Concrete permutation groups used throughout the package.

Matrix groups are realized through :mod:`derivant.matrices`; every
constructor passes the expected order to :class:`PermGroup`, so a wrong
generating set fails loudly at chain construction.  Groups carry ``tags``
with structural knowledge that later algorithms may use instead of
recomputing it (the socle, the normalizer of the socle in Sym(n), a
metacyclic generator pair).
"""

from __future__ import annotations

from math import factorial, gcd, prod

import numpy as np

from . import matrices as mx
from .fields import FieldSpec, field, gf, prime_power
from .group import PermGroup
from .perm import DTYPE, Permutation, parse_cycles


def _perm(a) -> Permutation:
    return Permutation._wrap(np.asarray(a, dtype=DTYPE))


def _cycle(points: list[int], n: int) -> Permutation:
    a = np.arange(n, dtype=DTYPE)
    for i, x in enumerate(points):
        a[x] = points[(i + 1) % len(points)]
    return _perm(a)


# -- basic families ------------------------------------------------------------

def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("cyclic(n) needs n >= 1")
    return PermGroup([_cycle(list(range(n)), n)], n, order=n, name=f"C{n}")


def symmetric(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("symmetric(n) needs n >= 1")
    gens = [_cycle(list(range(n)), n), _cycle([0, 1], n)] if n > 1 else []
    return PermGroup(gens, n, order=factorial(n), name=f"S{n}", tags={"symmetric": True})


def alternating(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("alternating(n) needs n >= 1")
    if n < 3:
        return PermGroup([], n, order=1, name=f"A{n}")
    if n % 2:
        gens = [_cycle(list(range(n)), n), _cycle([0, 1, 2], n)]
    else:
        gens = [_cycle(list(range(1, n)), n), _cycle([0, 1, 2], n)]
    tags = {"alternating": True}
    if n >= 5:
        tags.update(socle=None, socle_is_minimal_normal=True)
    G = PermGroup(gens, n, order=factorial(n) // 2, name=f"A{n}", tags=tags)
    if n >= 5:
        G.tags["socle"] = G
    return G


def dihedral(order: int) -> PermGroup:
    """Dihedral group of the given order (2n) acting on n points.

    Orders 2 and 4 have no faithful action on n points and are returned as
    C2 on 2 points and the Klein group on 4 points.
    """
    if order < 2 or order % 2:
        raise ValueError("dihedral(order) needs an even order >= 2")
    n = order // 2
    if n == 1:
        return PermGroup([_cycle([0, 1], 2)], 2, order=2, name="D2")
    if n == 2:
        return PermGroup([parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)], 4,
                         order=4, name="D4")
    r = _cycle(list(range(n)), n)
    s = _perm([(-i) % n for i in range(n)])
    return PermGroup([r, s], n, order=order, name=f"D{order}")


def quaternion() -> PermGroup:
    """Q8 in its regular representation."""
    i = parse_cycles("(1 2 3 4)(5 6 7 8)", 8)
    j = parse_cycles("(1 5 3 7)(2 8 4 6)", 8)
    return PermGroup([i, j], 8, order=8, name="Q8")


def direct_product(A: PermGroup, B: PermGroup) -> PermGroup:
    """A x B acting on the disjoint union of the two point sets."""
    m, n = A.degree, B.degree
    gens = []
    for a in A.gen_arrays():
        gens.append(_perm(np.concatenate([a, np.arange(m, m + n)])))
    for b in B.gen_arrays():
        gens.append(_perm(np.concatenate([np.arange(m), b.astype(np.int64) + m])))
    name = f"{A.name}x{B.name}" if A.name and B.name else None
    return PermGroup(gens, m + n, order=A.order() * B.order(), name=name)


def wreath_imprimitive(A: PermGroup, k: int) -> PermGroup:
    """A wr S_k in its imprimitive action on k blocks of deg(A) points."""
    if k < 1:
        raise ValueError("wreath_imprimitive needs k >= 1")
    m = A.degree
    n = m * k
    gens = []
    for a in A.gen_arrays():
        g = np.arange(n)
        g[:m] = a
        gens.append(_perm(g))
    if k > 1:
        gens.append(_perm(_block_map(k, m, list(range(1, k)) + [0])))
        if k > 2:
            gens.append(_perm(_block_map(k, m, [1, 0] + list(range(2, k)))))
    name = f"{A.name}wrS{k}" if A.name else None
    return PermGroup(gens, n, order=A.order() ** k * factorial(k), name=name)


def _block_map(k: int, m: int, target: list[int]) -> np.ndarray:
    g = np.empty(k * m, dtype=np.int64)
    for b, t in enumerate(target):
        g[b * m:(b + 1) * m] = np.arange(t * m, (t + 1) * m)
    return g


def _central_quotient(factors: list[PermGroup], centers: list[Permutation], name: str) -> PermGroup:
    """Direct product of the factors modulo z_1 z_i (i > 1): a central product."""
    from .quotient import quotient_rep

    P = factors[0]
    offsets = [0]
    for F in factors[1:]:
        offsets.append(P.degree)
        P = direct_product(P, F)
    n = P.degree

    def embed(z: Permutation, i: int) -> np.ndarray:
        a = np.arange(n)
        o = offsets[i]
        a[o:o + z.degree] = z.array.astype(np.int64) + o
        return a

    kernel_gens = []
    z0 = embed(centers[0], 0)
    for i in range(1, len(factors)):
        zi = embed(centers[i], i)
        kernel_gens.append(_perm(zi[z0]))
    K = PermGroup(kernel_gens, n, order=2 ** (len(factors) - 1))
    qr = quotient_rep(P, K)
    Q = qr.quotient_group
    return PermGroup(Q.generators, Q.degree, order=Q.order(), name=name)


def central_product_d8_q8() -> PermGroup:
    """D8 o Q8, the extraspecial group 2^(1+4) of minus type (regular, degree 32)."""
    return extraspecial2(2, "-")


def extraspecial2(m: int, sign: str = "+") -> PermGroup:
    """2^(1+2m): central product of m copies of D8 (+) or m-1 copies and Q8 (-)."""
    if m < 1 or sign not in "+-" or len(sign) != 1:
        raise ValueError("extraspecial2 needs m >= 1 and sign '+' or '-'")
    D8 = dihedral(8)
    zD = parse_cycles("(1 3)(2 4)", 4)
    Q8 = quaternion()
    zQ = parse_cycles("(1 3)(2 4)(5 7)(6 8)", 8)
    factors = [D8] * m
    centers = [zD] * m
    if sign == "-":
        factors[-1] = Q8
        centers[-1] = zQ
    if m == 1:
        return PermGroup(factors[0].generators, factors[0].degree, order=8,
                         name="D8" if sign == "+" else "Q8")
    return _central_quotient(factors, centers, f"2^(1+{2 * m}){sign}")


def metacyclic(m: int, n: int, r: int) -> PermGroup:
    """<x, y> with x of order m normal, y^-1 x y = x^r, acting on Z_m x Z_n.

    x: (a, b) -> (a + 1, b) and y: (a, b) -> (r a, b + 1); point (a, b) is
    labelled a*n + b + 1.  Then [x, y] = x^(r-1).
    """
    if m < 1 or n < 1:
        raise ValueError("metacyclic needs m, n >= 1")
    if pow(r, n, m) != 1 % m or gcd(r, m) != 1:
        raise ValueError(f"r={r} does not satisfy r^n = 1 mod m for m={m}, n={n}")
    a, b = np.divmod(np.arange(m * n), n)
    x = ((a + 1) % m) * n + b
    y = ((r * a) % m) * n + (b + 1) % n
    G = PermGroup([_perm(x), _perm(y)], m * n, order=m * n, name=f"M({m},{n},{r})")
    G.tags["metacyclic"] = {"x": _perm(x), "y": _perm(y), "m": m, "n": n, "r": r % m}
    return G


def out_group(d: int, f: int, p: int) -> PermGroup:
    """<delta> : (<phi> x <iota>) with delta^phi = delta^p, delta^iota = delta^-1.

    Realized by the maps a -> +-p^j a + c of Z_d, with (j, e) recorded in
    extra coordinates: points are triples (a, j, e) in Z_d x Z_f x Z_2.
    The presentation is taken formally: delta = delta^(p^f) forces the order
    of delta to divide p^f - 1, so when p^f != 1 (mod d) the group built is
    the one the relations actually define, with delta of order
    gcd(d, p^f - 1).  The tag records both the requested and effective d.
    """
    if d < 1 or f < 1 or p < 2:
        raise ValueError("out_group needs d, f >= 1 and p >= 2")
    requested = d
    d = gcd(d, p**f - 1)
    N = 2 * d * f
    idx = np.arange(N)
    a, rest = np.divmod(idx, 2 * f)
    j, e = np.divmod(rest, 2)

    def label(a, j, e):
        return (a % d) * 2 * f + (j % f) * 2 + (e % 2)

    delta = label(a + 1, j, e)
    phi = label(p * a, j + 1, e)
    iota = label(-a, j, e + 1)
    G = PermGroup([_perm(delta), _perm(phi), _perm(iota)], N, order=N, name=f"Out({requested},{f},{p})")
    G.tags["out_group"] = {"delta": _perm(delta), "phi": _perm(phi), "iota": _perm(iota), "d": d, "f": f, "p": p,
                           "requested_d": requested}
    return G


# -- matrix groups ------------------------------------------------------------

def _field(q: int) -> FieldSpec:
    return gf(q)


def gl(d: int, q: int) -> PermGroup:
    """GL_d(q) on the q^d - 1 nonzero vectors."""
    F = _field(q)
    gens = [_perm(mx.nonzero_perm(F, d, M)) for M in mx.gl_generators(F, d)]
    return PermGroup(gens, q**d - 1, order=mx.gl_order(d, q), name=f"GL({d},{q})")


def sl(d: int, q: int) -> PermGroup:
    F = _field(q)
    gens = [_perm(mx.nonzero_perm(F, d, M)) for M in mx.sl_generators(F, d)]
    return PermGroup(gens, q**d - 1, order=mx.sl_order(d, q), name=f"SL({d},{q})")


def _projective(d: int, q: int, which: str) -> PermGroup:
    if d < 2:
        raise ValueError("projective groups need d >= 2")
    F = _field(q)
    n = mx.projective_degree(d, q)
    if which == "psl":
        mats = mx.sl_generators(F, d)
        order = mx.psl_order(d, q)
    else:
        mats = mx.gl_generators(F, d)
        order = mx.gl_order(d, q) // (q - 1)
    gens = [_perm(mx.projective_perm(F, d, M)) for M in mats]
    if which == "pgammal" and F.f > 1:
        gens.append(_perm(mx.projective_perm(F, d, frob=True)))
        order *= F.f
    names = {"psl": "PSL", "pgl": "PGL", "pgammal": "PGammaL"}
    G = PermGroup(gens, n, order=order, name=f"{names[which]}({d},{q})")
    G.tags["projective"] = (d, q, which)
    return G


def psl(d: int, q: int) -> PermGroup:
    G = _projective(d, q, "psl")
    _tag_projective(G, d, q)
    return G


def pgl(d: int, q: int) -> PermGroup:
    G = _projective(d, q, "pgl")
    _tag_projective(G, d, q)
    return G


def pgammal(d: int, q: int) -> PermGroup:
    G = _projective(d, q, "pgammal")
    _tag_projective(G, d, q)
    return G


def _is_simple_psl(d: int, q: int) -> bool:
    return not (d == 2 and q in (2, 3))


def _tag_projective(G: PermGroup, d: int, q: int) -> None:
    if not _is_simple_psl(d, q):
        return
    G.tags["socle"] = lambda: _projective(d, q, "psl")
    G.tags["socle_is_minimal_normal"] = True
    G.tags["sym_normalizer_of_socle"] = (lambda: _projective(d, q, "pgammal"), "catalog")


def _affine(d: int, q: int, mats, frob: bool, order: int, name: str) -> PermGroup:
    G = _affine_plain(d, q, mats, frob, order, name)
    _tag_affine(G, d, q, irreducible=True)
    return G


def _tag_affine(G: PermGroup, d: int, q: int, irreducible: bool) -> None:
    # translations are the unique minimal normal subgroup when the linear
    # part acts irreducibly, which holds for every 2-homogeneous affine group
    p, f = prime_power(q)
    G.tags["socle"] = lambda: translations(d, q)
    G.tags["socle_is_minimal_normal"] = irreducible
    G.tags["sym_normalizer_of_socle"] = (lambda: agl(d * f, p) if f > 1 else agl(d, q), "holomorph")


def translations(d: int, q: int) -> PermGroup:
    """The translation subgroup F_q^d (this is ASL_1(q) when d = 1)."""
    return _affine_plain(d, q, [], False, q**d, f"{q}^{d}" if d > 1 else f"{q}")


def _affine_plain(d, q, mats, frob, order, name):
    F = _field(q)
    if q**d > mx.MAX_ACTION_DEGREE:
        raise ValueError(f"affine action on {q**d} points exceeds {mx.MAX_ACTION_DEGREE}")
    gens = []
    for i in range(d):
        for a in F.additive_basis():
            t = np.zeros(d, dtype=np.int64)
            t[i] = a
            gens.append(_perm(mx.affine_perm(F, d, None, t)))
    for M in mats:
        gens.append(_perm(mx.affine_perm(F, d, M)))
    if frob and F.f > 1:
        gens.append(_perm(mx.affine_perm(F, d, frob=True)))
    return PermGroup(gens, q**d, order=order, name=name)


def agl(d: int, q: int) -> PermGroup:
    F = _field(q)
    return _affine(d, q, mx.gl_generators(F, d), False, q**d * mx.gl_order(d, q), f"AGL({d},{q})")


def asl(d: int, q: int) -> PermGroup:
    """ASL_d(q); for d = 1 this is the translation group (SL_1(q) = 1)."""
    F = _field(q)
    return _affine(d, q, mx.sl_generators(F, d), False, q**d * mx.sl_order(d, q), f"ASL({d},{q})")


def agammal1(q: int) -> PermGroup:
    F = _field(q)
    return _affine(1, q, mx.gl_generators(F, 1), True, q * (q - 1) * F.f, f"AGammaL(1,{q})")


def affine_squares(q: int) -> PermGroup:
    """q : ((q-1)/2), translations and multiplication by nonzero squares."""
    F = _field(q)
    if q % 2 == 0:
        raise ValueError("affine_squares needs odd q")
    w = F.primitive_element()
    M = np.array([[F.power(w, 2)]], dtype=np.int64)
    return _affine(1, q, [M], False, q * (q - 1) // 2, f"{q}:{(q - 1) // 2}")


def affine_from_matrices(F: FieldSpec, d: int, mats, order: int | None = None,
                         name: str | None = None, frob: bool = False) -> PermGroup:
    """Translations of F^d extended by the given matrix group."""
    G = _affine_plain(d, F.q, list(mats), frob, order, name)
    _tag_affine(G, d, F.q, irreducible=False)
    return G


def linear_from_matrices(F: FieldSpec, d: int, mats, order: int | None = None,
                         name: str | None = None) -> PermGroup:
    """The matrix group acting on nonzero vectors."""
    gens = [_perm(mx.nonzero_perm(F, d, M)) for M in mats]
    return PermGroup(gens, F.q**d - 1, order=order, name=name)


# -- holomorphs ---------------------------------------------------------------

def holomorph_elementary(p: int, d: int) -> PermGroup:
    """Hol(C_p^d) = AGL_d(p)."""
    return agl(d, p)


def holomorph_cyclic(n: int) -> PermGroup:
    """Hol(C_n) = Z_n : Z_n^* acting on Z_n."""
    if n < 1:
        raise ValueError("holomorph_cyclic needs n >= 1")
    pts = np.arange(n)
    gens = [_perm((pts + 1) % n)]
    units = [u for u in range(2, n) if gcd(u, n) == 1]
    gens += [_perm((u * pts) % n) for u in units]
    phi = sum(1 for u in range(1, n + 1) if gcd(u, n) == 1)
    return PermGroup(gens, n, order=n * phi, name=f"Hol(C{n})")


def holomorph(T: PermGroup) -> PermGroup:
    """N_Sym(n)(T) for a regular abelian T that is elementary abelian or cyclic.

    Points are identified with elements of T through t -> (1)t, and Aut(T)
    acts on coordinates (GL_d(p) for C_p^d, units mod n for C_n).
    """
    n = T.degree
    if T.order() != n or not T.is_transitive() or not T.is_abelian():
        raise ValueError("holomorph needs a regular abelian group")
    if n == 1:
        return T
    E = T.elements_array()
    point_of = E[:, 0]  # element row -> image of point 0
    elem_at = np.empty(n, dtype=np.intp)
    elem_at[point_of] = np.arange(n)
    # order profile
    p, f = None, None
    try:
        p, f = prime_power(n)
    except ValueError:
        pass
    from .elements import ElementIndex

    idx = ElementIndex(T)
    orders = idx.element_orders()
    if orders.max() == n:
        x = E[int(np.argmax(orders))]
        # point (0)x^k <-> k
        pos = np.empty(n, dtype=np.int64)
        cur = np.arange(n)
        for k in range(n):
            pos[cur[0]] = k
            cur = x[cur]
        at = np.empty(n, dtype=np.int64)
        at[pos] = np.arange(n)
        gens = [g for g in T.generators]
        phi = 0
        for u in range(1, n):
            if gcd(u, n) == 1:
                phi += 1
                if u > 1:
                    gens.append(_perm(at[(u * pos) % n]))
        return PermGroup(gens, n, order=n * phi, name=f"Hol(C{n})")
    if p is None or orders.max() != p:
        raise ValueError("holomorph supports elementary abelian and cyclic groups only")
    # basis b_1..b_f of T as F_p vector space
    basis: list[np.ndarray] = []
    span_pts = np.zeros(n, dtype=bool)
    span_pts[0] = True
    coords_of = {0: (0,) * 0}
    for row in E:
        pt = int(row[0])
        if span_pts[pt]:
            continue
        basis.append(row)
        new = np.zeros(n, dtype=bool)
        cur = np.flatnonzero(span_pts)
        acc = cur
        for _ in range(p - 1):
            acc = row[acc]
            new[acc] = True
        span_pts |= new
        if span_pts.all():
            break
    f = len(basis)
    # coordinates of each point: (0) b1^c1 ... bf^cf
    coord = np.zeros((n, f), dtype=np.int64)
    pt_of_coord = {}
    import itertools

    for cs in itertools.product(range(p), repeat=f):
        pt = 0
        for b, c in zip(basis, cs):
            for _ in range(c):
                pt = int(b[pt])
        coord[pt] = cs
        pt_of_coord[cs] = pt
    F = field(p)
    w = np.array([p ** (f - 1 - i) for i in range(f)], dtype=np.int64)
    lut = np.empty(p**f, dtype=np.int64)
    for cs, pt in pt_of_coord.items():
        lut[int(np.dot(cs, w))] = pt
    gens = list(T.generators)
    for M in mx.gl_generators(F, f):
        img = mx.apply_matrix(F, coord, M)
        gens.append(_perm(lut[img @ w]))
    return PermGroup(gens, n, order=n * mx.gl_order(f, p), name=f"Hol({p}^{f})")


# -- the 114-point representation of Aut(PSL_3(7)) ----------------------------

def aut_psl3_on_points_and_lines(q: int = 7) -> PermGroup:
    """Aut(PSL_3(q)) for prime q on 57 points and 57 lines (degree 2(q^2+q+1)).

    A matrix M moves points by v -> vM and lines (given by normal vectors w)
    by w -> w M^-T, preserving incidence v.w = 0; the graph involution
    swaps the point and the line with the same coordinates.
    """
    if q != 7:
        raise ValueError("only q = 7 is shipped")
    F = field(q)
    d = 3
    m = mx.projective_degree(d, q)
    gens = []
    for M in mx.gl_generators(F, d):
        a = mx.projective_perm(F, d, M)
        b = mx.projective_perm(F, d, mx.transpose_inverse(F, M))
        gens.append(_perm(np.concatenate([a.astype(np.int64), b.astype(np.int64) + m])))
    swap = np.concatenate([np.arange(m, 2 * m), np.arange(m)])
    gens.append(_perm(swap))
    order = 2 * mx.gl_order(d, q) // (q - 1)
    G = PermGroup(gens, 2 * m, order=order, name=f"Aut(PSL(3,{q}))")
    G.tags["blocks"] = (list(range(1, m + 1)), list(range(m + 1, 2 * m + 1)))
    return G


def psl3_on_points_and_lines(q: int = 7, which: str = "psl") -> PermGroup:
    """PSL_3(q) (or PGL_3(q)) inside the 114-point representation."""
    F = field(q)
    d = 3
    m = mx.projective_degree(d, q)
    mats = mx.sl_generators(F, d) if which == "psl" else mx.gl_generators(F, d)
    gens = []
    for M in mats:
        a = mx.projective_perm(F, d, M)
        b = mx.projective_perm(F, d, mx.transpose_inverse(F, M))
        gens.append(_perm(np.concatenate([a.astype(np.int64), b.astype(np.int64) + m])))
    order = mx.psl_order(d, q) if which == "psl" else mx.gl_order(d, q) // (q - 1)
    return PermGroup(gens, 2 * m, order=order, name=f"{which.upper()}(3,{q}) on points and lines")


# -- shipped solvable affine data -------------------------------------------------

CASE5_FILES = {
    "3^2:Q8": "case5_d2_q3_q8.mat",
    "5^2:Q8": "case5_d2_q5_q8.mat",
    "5^2:SL(2,3)": "case5_d2_q5_nsl.mat",
    "5^2:N_GL(2,5)(Q8)": "case5_d2_q5_ngl.mat",
    "3^4:E": "case5_d4_e.mat",
    "3^4:(E:5)": "case5_d4_e5.mat",
    "3^4:(E:5).2": "case5_d4_e5_2.mat",
    "3^4:(E:5).4": "case5_d4_e5_4.mat",
}


def affine_from_data(filename: str, name: str | None = None) -> PermGroup:
    """Affine group q^d : M with M read from a checksummed data file.

    A bare file name is looked up among the shipped data; anything with a
    path separator is read from disk.
    """
    from .datafiles import load_matrices, load_shipped

    data = load_shipped(filename) if "/" not in filename else load_matrices(filename)
    F, d = data.field, data.d
    order = F.q**d * data.order if data.order else None
    G = _affine_plain(d, F.q, data.matrices, False, order, name or f"{F.q}^{d}:{data.name}")
    # every shipped linear part is irreducible (Q8 and D8oQ8 already are)
    _tag_affine(G, d, F.q, irreducible="/" not in filename)
    return G


def case5_witnesses(names=None) -> dict[str, PermGroup]:
    """The solvable affine 2-transitive exceptions built from shipped data.

    Keys are the names in ``CASE5_FILES``.  Orders are the data file's
    linear order times q^d, checked by the chain construction.
    """
    names = list(CASE5_FILES) if names is None else list(names)
    return {k: affine_from_data(CASE5_FILES[k], k) for k in names}
