from itertools import product
from math import factorial, gcd

import numpy as np
import pytest

from derivant import ParseError, derived_subgroup, is_normal, parse_cycles
from derivant import constructors as C
from derivant.datafiles import format_matrices, load_shipped, parse_matrices
from derivant.fields import field, gf, is_irreducible, prime_power
from derivant.matrices import gl_order, mat_det, mat_inv, mat_mul, psl_order, sl_order


def _gl(d, q):
    out = 1
    for i in range(d):
        out *= q**d - q**i
    return out


ORDERS = [
    ("C12", lambda: C.cyclic(12), 12),
    ("S6", lambda: C.symmetric(6), 720),
    ("A7", lambda: C.alternating(7), 2520),
    ("D10", lambda: C.dihedral(10), 10),
    ("D4", lambda: C.dihedral(4), 4),
    ("Q8", lambda: C.quaternion(), 8),
    ("S3xC4", lambda: C.direct_product(C.symmetric(3), C.cyclic(4)), 24),
    ("D8wrC2", lambda: C.wreath_imprimitive(C.dihedral(8), 2), 128),
    ("S3wrS3", lambda: C.wreath_imprimitive(C.symmetric(3), 3), 6**3 * 6),
    ("2^(1+4)-", lambda: C.extraspecial2(2, "-"), 32),
    ("2^(1+6)+", lambda: C.extraspecial2(3, "+"), 128),
    ("M(13,4,5)", lambda: C.metacyclic(13, 4, 5), 52),
    ("GL(2,4)", lambda: C.gl(2, 4), _gl(2, 4)),
    ("SL(3,2)", lambda: C.sl(3, 2), _gl(3, 2)),
    ("PSL(2,8)", lambda: C.psl(2, 8), 504),
    ("PGL(2,9)", lambda: C.pgl(2, 9), 720),
    ("PGammaL(2,8)", lambda: C.pgammal(2, 8), 1512),
    ("PSL(3,4)", lambda: C.psl(3, 4), 20160),
    ("AGL(1,9)", lambda: C.agl(1, 9), 72),
    ("ASL(2,3)", lambda: C.asl(2, 3), 9 * 24),
    ("AGL(3,2)", lambda: C.agl(3, 2), 8 * 168),
    ("AGammaL(1,8)", lambda: C.agammal1(8), 8 * 7 * 3),
    ("Hol(C12)", lambda: C.holomorph_cyclic(12), 48),
]


@pytest.mark.parametrize("name, mk, expected", ORDERS, ids=[o[0] for o in ORDERS])
def test_order_formulas(name, mk, expected):
    assert mk().order() == expected


def test_matrix_order_formulas():
    for d, q in [(2, 2), (2, 3), (3, 3), (2, 5), (4, 2)]:
        assert gl_order(d, q) == _gl(d, q)
        assert sl_order(d, q) == _gl(d, q) // (q - 1)
        assert psl_order(d, q) == sl_order(d, q) // gcd(d, q - 1)
    assert psl_order(3, 7) == 1876896


def test_projective_degrees():
    assert C.psl(2, 7).degree == 8
    assert C.pgl(3, 7).degree == 57
    assert C.pgammal(2, 9).degree == 10


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
def test_field_axioms(q):
    F = gf(q)
    add, mul = F.add, F.mul
    elems = range(q)
    # commutative, with identities and inverses
    assert (add == add.T).all() and (mul == mul.T).all()
    assert all(add[0, a] == a and mul[1, a] == a for a in elems)
    assert all(add[a, F.neg[a]] == 0 for a in elems)
    assert all(mul[a, F.inv[a]] == 1 for a in range(1, q))
    # associativity and distributivity on a sample (all triples for small q)
    trip = list(product(elems, repeat=3)) if q <= 9 else [(a, b, c) for a in elems for b in (1, 2, q - 1)
                                                          for c in (0, 3, q - 2)]
    for a, b, c in trip:
        assert mul[mul[a, b], c] == mul[a, mul[b, c]]
        assert add[add[a, b], c] == add[a, add[b, c]]
        assert mul[a, add[b, c]] == add[mul[a, b], mul[a, c]]
    # Frobenius is a field automorphism of order f
    p, f = prime_power(q)
    assert sorted(F.frob.tolist()) == list(elems)
    x = np.arange(q)
    for _ in range(f):
        x = F.frob[x]
    assert (x == np.arange(q)).all()
    g = F.primitive_element()
    seen = {1}
    y = 1
    for _ in range(q - 2):
        y = int(mul[y, g])
        seen.add(y)
    assert len(seen) == q - 1


def test_irreducibility_and_bad_fields():
    assert is_irreducible((1, 1, 1), 2)       # x^2 + x + 1
    assert not is_irreducible((1, 0, 1), 2)   # x^2 + 1 = (x + 1)^2
    with pytest.raises(ValueError):
        gf(6)
    with pytest.raises(ValueError):
        field(2, 40)


def test_matrix_arithmetic():
    F = gf(9)
    rng = np.random.default_rng(0)
    for _ in range(20):
        A = rng.integers(0, 9, (3, 3))
        if mat_det(F, A) == 0:
            continue
        Ai = mat_inv(F, A)
        assert (mat_mul(F, A, Ai) == np.eye(3, dtype=int)).all()


@pytest.mark.parametrize("small, big", [
    (lambda: C.psl(2, 9), lambda: C.pgl(2, 9)),
    (lambda: C.pgl(2, 9), lambda: C.pgammal(2, 9)),
    (lambda: C.psl(3, 4), lambda: C.pgammal(3, 4)),
    (lambda: C.asl(2, 3), lambda: C.agl(2, 3)),
    (lambda: C.translations(2, 5), lambda: C.agl(2, 5)),
    (lambda: C.translations(1, 27), lambda: C.agammal1(27)),
    (lambda: C.alternating(6), lambda: C.symmetric(6)),
], ids=["PSL<PGL", "PGL<PGammaL", "PSL34<PGammaL34", "ASL<AGL", "T<AGL", "T<AGammaL1", "A6<S6"])
def test_normal_chains(small, big):
    assert is_normal(small(), big())


def test_agammal1_27_derived_series():
    G = C.agammal1(27)
    D = derived_subgroup(G)
    assert D.order() == 27 * 13
    assert derived_subgroup(D).order() == 27
    assert D.order() == C.affine_squares(27).order()


def test_metacyclic_relations():
    G = C.metacyclic(7, 3, 2)
    info = G.tags["metacyclic"]
    x, y = info["x"], info["y"]
    assert x.order() == 7 and y.order() == 3
    assert y ** -1 * x * y == x ** 2
    assert derived_subgroup(G).order() == 7
    with pytest.raises(ValueError):
        C.metacyclic(7, 3, 3)


@pytest.mark.parametrize("d, f, p", [(8, 2, 3), (12, 2, 5), (6, 3, 2), (4, 1, 5), (10, 4, 3), (7, 3, 2)])
def test_out_group_derived(d, f, p):
    G = C.out_group(d, f, p)
    info = G.tags["out_group"]
    de = info["d"]
    assert de == gcd(d, p**f - 1)
    assert G.order() == 2 * de * f
    delta = info["delta"]
    D = derived_subgroup(G)
    k = 1 if p == 2 else 2
    assert D.order() == de // gcd(de, k)
    assert D.contains(delta ** k)


def test_case5_orders():
    W = C.case5_witnesses()
    expected = {"3^2:Q8": 72, "5^2:Q8": 200, "5^2:SL(2,3)": 600, "5^2:N_GL(2,5)(Q8)": 2400,
                "3^4:E": 2592, "3^4:(E:5)": 12960, "3^4:(E:5).2": 25920, "3^4:(E:5).4": 51840}
    assert {k: G.order() for k, G in W.items()} == expected
    assert derived_subgroup(W["3^4:(E:5).2"]).order() == 12960
    assert derived_subgroup(W["5^2:N_GL(2,5)(Q8)"]).order() == 600


def test_data_file_round_trip_and_checksum():
    data = load_shipped("case5_d2_q5_q8.mat")
    text = format_matrices(data.field, data.d, data.matrices, **data.meta)
    again = parse_matrices(text)
    assert all((a == b).all() for a, b in zip(again.matrices, data.matrices))
    lines = text.splitlines()
    # corrupt one matrix entry: the checksum must catch it
    row = lines[1].split()
    row[0] = str((int(row[0]) + 1) % 5)
    bad = "\n".join([lines[0], " ".join(row)] + lines[2:]) + "\n"
    with pytest.raises(ParseError, match="checksum"):
        parse_matrices(bad)
    with pytest.raises(ParseError):
        parse_matrices("not a header\n")


def test_pgammal_37_and_psl_on_points_and_lines():
    G = C.pgl(3, 7)
    assert G.order() == 1876896 * 3
    assert C.pgammal(3, 7).order() == G.order()
    S = C.psl3_on_points_and_lines(7, "psl")
    assert S.degree == 114 and S.order() == 1876896


def test_constructor_errors():
    with pytest.raises(ValueError):
        C.dihedral(7)
    with pytest.raises(ValueError):
        C.extraspecial2(0)
    with pytest.raises(ValueError):
        C.out_group(0, 1, 2)


def test_dihedral_small_cases():
    assert C.dihedral(2).degree == 2
    V = C.dihedral(4)
    assert V.degree == 4 and V.is_abelian()
    assert C.dihedral(8).contains(parse_cycles("(1 2 3 4)", 4))
    assert C.symmetric(7).order() == factorial(7)
