import random
from collections import Counter
from math import sqrt

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from derivant import DegreeMismatchError, PermGroup, Permutation, build_bsgs, contains, equals, is_subgroup, order, parse_cycles
from derivant import constructors as C
from helpers import gen_tuples, tuples


def corpus():
    """Small groups used across the structural tests (all of order <= 2000)."""
    return {
        "S4": C.symmetric(4),
        "A4": C.alternating(4),
        "D8": C.dihedral(8),
        "Q8": C.quaternion(),
        "C12": C.cyclic(12),
        "A5": C.alternating(5),
        "S5": C.symmetric(5),
        "A6": C.alternating(6),
        "S6": C.symmetric(6),
        "PSL(2,7)": C.psl(2, 7),
        "PGL(2,7)": C.pgl(2, 7),
        "PGammaL(2,9)": C.pgammal(2, 9),
        "AGL(1,7)": C.agl(1, 7),
        "AGL(2,3)": C.agl(2, 3),
        "GL(2,3)": C.gl(2, 3),
        "M(7,6,3)": C.metacyclic(7, 6, 3),
        "D8wrC2": C.wreath_imprimitive(C.dihedral(8), 2),
        "2^{1+4}-": C.extraspecial2(2, "-"),
        "S4xC2": C.direct_product(C.symmetric(4), C.cyclic(2)),
        "Out(8,2,3)": C.out_group(8, 2, 3),
    }


CORPUS = corpus()


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_order_matches_closure_enumeration(name):
    G = CORPUS[name]
    elems = oracles.closure(gen_tuples(G), G.degree)
    assert G.order() == len(elems)
    assert tuples(G) == elems


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_bsgs_invariants(name):
    G = CORPUS[name]
    B = build_bsgs(G)
    sizes = B.transversal_sizes()
    assert np.prod(sizes, dtype=object) == G.order()
    # strictly decreasing chain: each level has a non-trivial orbit
    assert all(s > 1 for s in sizes)
    for s in B.strong_generators:
        assert G.contains(s)
    # base points in increasing order (smallest moved point at each level)
    assert list(B.base) == sorted(B.base)
    for level, trans in zip(B.base, B.transversals):
        for pt, rep in trans.items():
            assert rep(level) == pt


def test_membership_exact_against_enumeration():
    G = C.dihedral(8)
    members = tuples(G)
    import itertools

    for a in itertools.permutations(range(4)):
        assert G.contains(Permutation.from_array(a)) == (a in members)


def test_orders_examples():
    assert order(PermGroup([parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 2)", 4)])) == 24
    assert order(C.dihedral(8)) == 8
    assert order(C.agammal1(27)) == 27 * 26 * 3


def test_equals_and_subgroup():
    S4, A4 = C.symmetric(4), C.alternating(4)
    assert equals(S4, S4)
    assert is_subgroup(A4, S4)
    assert not is_subgroup(PermGroup([parse_cycles("(1 2)", 4)]), A4)
    assert equals(A4, PermGroup([parse_cycles("(1 2 3)", 4), parse_cycles("(1 2)(3 4)", 4)]))
    assert not equals(A4, S4)


def test_contains_wrong_degree():
    with pytest.raises(DegreeMismatchError):
        contains(C.symmetric(4), Permutation.from_array(range(5)))


def test_trivial_and_identity_generators():
    G = PermGroup([Permutation.identity(5)], 5)
    assert G.order() == 1
    assert G.is_trivial()
    assert G.random_element().is_identity()


def test_stated_wrong_order_fails():
    with pytest.raises(ValueError):
        PermGroup([parse_cycles("(1 2 3)", 3)], 3, order=6).order()


@given(st.permutations(list(range(3))), st.integers(0, 3))
def test_order_invariant_under_generator_shuffle_and_redundancy(perm, extra):
    base = [parse_cycles("(1 2 3 4 5)", 6), parse_cycles("(1 2)", 6), parse_cycles("(5 6)", 6)]
    gens = [base[i] for i in perm]
    rng = random.Random(extra)
    G = PermGroup(gens, 6)
    words = []
    for _ in range(extra):
        w = Permutation.identity(6)
        for _ in range(4):
            w = w * rng.choice(gens)
        words.append(w)
    H = PermGroup(gens + words, 6)
    assert G.order() == H.order() == 720


def test_random_element_distribution_d8():
    # chi-square style: each of the 8 elements within 5 sigma of 1/8
    G = C.dihedral(8)
    rng = random.Random(7)
    draws = 10**4
    counts = Counter(G.random_element(rng) for _ in range(draws))
    assert len(counts) == 8
    p = 1 / 8
    sigma = sqrt(draws * p * (1 - p))
    for g, k in counts.items():
        assert G.contains(g)
        assert abs(k - draws * p) < 5 * sigma
    chi2 = sum((k - draws * p) ** 2 / (draws * p) for k in counts.values())
    assert chi2 < 30  # 7 degrees of freedom; 30 is far in the tail


def test_random_arrays_are_members():
    G = C.pgl(2, 7)
    rows = G.random_arrays(500, seed=3)
    assert G.contains_many(rows).all()


def test_orbits_and_transitivity():
    G = PermGroup([parse_cycles("(1 2)(3 4 5)", 6)], 6)
    assert G.orbits() == [[1, 2], [3, 4, 5], [6]]
    assert not G.is_transitive()
    assert C.symmetric(5).is_transitive()
