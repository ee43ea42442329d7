import random

import pytest

import oracles
from derivant import (BudgetExceeded, NotASubgroupError, NotNormalError, PermGroup, derived_subgroup,
                      parse_cycles, quotient_rep)
from derivant import constructors as C
from helpers import tuples

CASES = [
    ("S4/V4", lambda: C.symmetric(4), lambda G: socle_v4()),
    ("S4/A4", lambda: C.symmetric(4), lambda G: C.alternating(4)),
    ("D8/Z", lambda: C.dihedral(8), lambda G: derived_subgroup(G)),
    ("S5/A5", lambda: C.symmetric(5), lambda G: C.alternating(5)),
    ("AGL(1,7)/C7", lambda: C.agl(1, 7), lambda G: C.translations(1, 7)),
    ("D8wrC2/derived", lambda: C.wreath_imprimitive(C.dihedral(8), 2), lambda G: derived_subgroup(G)),
    ("G/G", lambda: C.alternating(4), lambda G: G),
    ("G/1", lambda: C.dihedral(8), lambda G: PermGroup.trivial(G.degree)),
]


def socle_v4():
    return PermGroup([parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)], 4)


def _oracle_cosets(H, N):
    return {frozenset(oracles.mul(n, h) for n in N) for h in H}


@pytest.mark.parametrize("name, mkH, mkN", CASES, ids=[c[0] for c in CASES])
def test_quotient_against_coset_oracle(name, mkH, mkN):
    H = mkH()
    N = mkN(H)
    qr = quotient_rep(H, N)
    HE, NE = tuples(H), tuples(N)
    cosets = _oracle_cosets(HE, NE)
    assert qr.index == len(cosets) == qr.quotient_group.order()
    # transversal hits every coset once; coset 1 is N
    trans = [tuple(int(x) for x in r) for r in qr.transversal_array]
    label = {}
    for i, r in enumerate(trans):
        c = frozenset(oracles.mul(n, r) for n in NE)
        assert c in cosets and c not in label
        label[c] = i
    assert label[NE] == 0
    # the image of h sends coset N r to coset N r h
    rng = random.Random(1)
    for h in rng.sample(sorted(HE), min(40, len(HE))):
        q = qr.project(_perm(h))
        for c, i in label.items():
            r = trans[i]
            target = frozenset(oracles.mul(n, oracles.mul(r, h)) for n in NE)
            assert int(q.array[i]) == label[target]


def _perm(t):
    from derivant import Permutation

    return Permutation.from_array(t)


@pytest.mark.parametrize("name, mkH, mkN", CASES, ids=[c[0] for c in CASES])
def test_projection_is_homomorphism_with_kernel_n(name, mkH, mkN):
    H = mkH()
    N = mkN(H)
    qr = quotient_rep(H, N)
    rng = random.Random(2)
    for _ in range(30):
        a, b = H.random_element(rng), H.random_element(rng)
        assert qr.project(a * b) == qr.project(a) * qr.project(b)
    kernel = {h for h in tuples(H) if qr.project(_perm(h)).is_identity()}
    assert kernel == tuples(N)


@pytest.mark.parametrize("name, mkH, mkN", CASES, ids=[c[0] for c in CASES])
def test_lift_round_trip(name, mkH, mkN):
    H = mkH()
    N = mkN(H)
    qr = quotient_rep(H, N)
    assert tuples(qr.lift(qr.quotient_group)) == tuples(H)
    assert tuples(qr.lift(PermGroup.trivial(qr.index))) == tuples(N)
    for K in [derived_subgroup(H)]:
        if N.is_subgroup_of(K):
            assert tuples(qr.lift(qr.project_group(K))) == tuples(K)


def test_s4_mod_v4_is_s3():
    qr = quotient_rep(C.symmetric(4), socle_v4())
    Q = qr.quotient_group
    assert Q.order() == 6 and Q.degree == 6
    assert derived_subgroup(Q).order() == 3


def test_transversal_independent_of_generator_order():
    H = C.symmetric(4)
    H2 = PermGroup(list(reversed(H.generators)), 4)
    N = socle_v4()
    N2 = PermGroup(list(reversed(N.generators)), 4)
    a = {tuple(r) for r in quotient_rep(H, N).transversal_array.tolist()}
    b = {tuple(r) for r in quotient_rep(H2, N2).transversal_array.tolist()}
    assert a == b


def test_quotient_errors():
    S4 = C.symmetric(4)
    with pytest.raises(NotNormalError):
        quotient_rep(S4, PermGroup([parse_cycles("(1 2)", 4)], 4))
    with pytest.raises(NotASubgroupError):
        quotient_rep(C.alternating(4), S4)
    with pytest.raises(BudgetExceeded):
        quotient_rep(S4, PermGroup.trivial(4), index_budget=10)
    qr = quotient_rep(S4, C.alternating(4))
    with pytest.raises(NotASubgroupError):
        qr.lift(C.symmetric(3))
