import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from derivant import (NoStrategyError, NotASubgroupError, PermGroup, Permutation, centralizer_in, equals,
                      normalizer_in, parse_cycles)
from derivant import constructors as C
from derivant.normalizer import monte_carlo_guard
from helpers import tuples


def _random_subgroup(data, n, max_gens=2):
    imgs = data.draw(st.lists(st.permutations(list(range(n))), min_size=1, max_size=max_gens))
    return PermGroup([Permutation.from_array(a) for a in imgs], n)


@settings(max_examples=30)
@given(st.integers(3, 6), st.data())
def test_exact_normalizer_in_symmetric_matches_oracle(n, data):
    U = C.symmetric(n)
    G = _random_subgroup(data, n)
    N = normalizer_in(U, G, strategy="exact").group
    assert tuples(N) == oracles.normalizer(tuples(U), tuples(G), n)


@settings(max_examples=30)
@given(st.data())
def test_normalizer_in_proper_ambient_matches_oracle(data):
    U = C.wreath_imprimitive(C.dihedral(8), 2)
    # G generated by random elements of U
    rows = U.random_arrays(data.draw(st.integers(1, 2)), seed=data.draw(st.integers(0, 10**6)))
    G = PermGroup([Permutation.from_array(r) for r in rows], U.degree)
    res = normalizer_in(U, G)
    assert res.provenance == "exact-scan"
    assert tuples(res.group) == oracles.normalizer(tuples(U), tuples(G), U.degree)


def test_s7_c7_normalizer_order_42():
    S7 = C.symmetric(7)
    C7 = PermGroup([parse_cycles("(1 2 3 4 5 6 7)", 7)], 7)
    exact = normalizer_in(S7, C7, strategy="exact")
    assert exact.group.order() == 42 and exact.provenance == "exact-scan"
    auto = normalizer_in(S7, C7)
    assert auto.provenance == "holomorph"
    assert equals(auto.group, exact.group)


def test_s9_elementary_abelian_holomorph_vs_exact():
    S9 = C.symmetric(9)
    T = C.translations(2, 3)
    hol = normalizer_in(S9, T, strategy="holomorph")
    exact = normalizer_in(S9, T, strategy="exact")
    assert hol.provenance == "holomorph"
    assert hol.group.order() == 432
    assert equals(hol.group, exact.group)


def test_s10_a6_catalog_vs_exact():
    S10 = C.symmetric(10)
    A6 = C.psl(2, 9)
    cat = normalizer_in(S10, A6, strategy="catalog", guard=True)
    assert cat.provenance == "catalog"
    assert cat.group.order() == 1440
    assert any("monte-carlo guard" in n and "0 violations" in n for n in cat.notes)
    exact = normalizer_in(S10, A6, strategy="exact")
    assert equals(cat.group, exact.group)


def test_affine_group_normalizer_in_symmetric():
    G = C.affine_squares(7)
    res = normalizer_in(C.symmetric(7), G)
    assert res.group.order() == 42
    assert equals(res.group, normalizer_in(C.symmetric(7), G, strategy="exact").group)


def test_guard_counts_no_violations_for_true_normalizer():
    S6 = C.symmetric(6)
    N = normalizer_in(S6, C.cyclic(6)).group
    checked, bad = monte_carlo_guard(S6, N, C.cyclic(6), samples=2000, seed=2)
    assert checked > 0 and bad == 0


def test_guard_detects_wrong_normalizer():
    S6 = C.symmetric(6)
    G = C.cyclic(6)
    wrong = PermGroup.trivial(6)
    checked, bad = monte_carlo_guard(S6, wrong, G, samples=5000, seed=3)
    assert bad > 0


@pytest.mark.parametrize("U, G", [
    (C.symmetric(5), C.cyclic(5)),
    (C.symmetric(5), PermGroup([parse_cycles("(1 2)(3 4)", 5)], 5)),
    (C.symmetric(6), PermGroup([parse_cycles("(1 2 3)", 6), parse_cycles("(4 5)", 6)], 6)),
    (C.wreath_imprimitive(C.dihedral(8), 2), PermGroup([parse_cycles("(1 3)(2 4)", 8)], 8)),
], ids=["S5-C5", "S5-involution", "S6-C3xC2", "D8wrC2-center-part"])
def test_centralizer_matches_oracle(U, G):
    assert G.is_subgroup_of(U)
    Z = centralizer_in(U, G)
    gens = [tuple(int(x) for x in g.array) for g in G.generators]
    expected = frozenset(u for u in tuples(U) if all(oracles.mul(u, g) == oracles.mul(g, u) for g in gens))
    assert tuples(Z) == expected


def test_normalizer_errors():
    with pytest.raises(ValueError):
        normalizer_in(C.symmetric(4), C.cyclic(4), strategy="bogus")
    with pytest.raises(NotASubgroupError):
        normalizer_in(C.alternating(4), C.symmetric(4))
    with pytest.raises(NoStrategyError):
        normalizer_in(C.symmetric(5), PermGroup([parse_cycles("(1 2 3)", 5)], 5), strategy="holomorph")
    with pytest.raises(NoStrategyError):
        normalizer_in(C.symmetric(8), PermGroup([parse_cycles("(1 2 3)", 8)], 8), scan_budget=10)


def test_unpacking_and_whole_group():
    S4 = C.symmetric(4)
    N, prov = normalizer_in(S4, S4)
    assert N is S4 and prov == "exact-scan"
