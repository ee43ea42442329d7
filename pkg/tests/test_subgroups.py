from collections import Counter

import pytest

import oracles
from derivant import BudgetExceeded, all_subgroups, derived_subgroup, intermediate_subgroups
from derivant import constructors as C
from derivant.subgroups import lattice
from helpers import tuples

GROUPS = {
    "S4": (C.symmetric(4), 30),
    "D8": (C.dihedral(8), 10),
    "Q8": (C.quaternion(), 6),
    "A4": (C.alternating(4), 10),
    "C12": (C.cyclic(12), 6),
    "S3xC3": (C.direct_product(C.symmetric(3), C.cyclic(3)), 14),
    "A5": (C.alternating(5), 59),
    "AGL(1,7)": (C.agl(1, 7), None),
    "M(7,6,3)": (C.metacyclic(7, 6, 3), None),
    "2^{1+4}-": (C.extraspecial2(2, "-"), None),
}


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_subgroups_match_oracle(name):
    G, known = GROUPS[name]
    subs = all_subgroups(G)
    got = [tuples(H) for H in subs]
    expected = oracles.subgroups(tuples(G), G.degree)
    assert len(set(got)) == len(got)
    assert set(got) == expected
    if known is not None:
        assert len(subs) == known


def test_s4_order_profile():
    profile = Counter(H.order() for H in all_subgroups(C.symmetric(4)))
    assert profile == {1: 1, 2: 9, 3: 4, 4: 7, 6: 4, 8: 3, 12: 1, 24: 1}


def test_sorted_by_order_and_deterministic():
    a = all_subgroups(C.symmetric(4))
    b = all_subgroups(C.symmetric(4))
    assert [H.order() for H in a] == sorted(H.order() for H in a)
    assert [tuples(H) for H in a] == [tuples(H) for H in b]


def test_intermediate_subgroups_against_filter():
    U = C.wreath_imprimitive(C.dihedral(8), 2)
    G = derived_subgroup(U)
    mids = intermediate_subgroups(U, G)
    expected = oracles.overgroups(tuples(G), tuples(U), U.degree)
    assert {tuples(H) for H in mids} == expected


def test_lattice_is_cached():
    G = C.dihedral(8)
    assert lattice(G) is lattice(G)
    assert len(lattice(G)) == 10


def test_subgroup_budget():
    with pytest.raises(BudgetExceeded):
        all_subgroups(C.symmetric(5), bound=20)
