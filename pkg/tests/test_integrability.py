import random
from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from derivant import (INCONCLUSIVE, INTEGRABLE, NOT_INTEGRABLE, NotASubgroupError, Options, PermGroup,
                      Permutation, all_subgroups, derived_subgroup, integrable_within, parse_cycles)
from derivant import constructors as C
from derivant.catalog import aut_entry, two_homog_entry
from derivant.config import Budgets
from derivant.integrability import (almost_simple_check, check_integral, classify_integrable_subgroups,
                                    fingerprint, thm_b_check)
from helpers import tuples


@lru_cache(maxsize=None)
def _oracle_subgroups_sym(n):
    E = tuples(C.symmetric(n))
    return E, oracles.subgroups(E, n)


def _d8_involution_subgroups():
    D8 = C.dihedral(8)
    return D8, [H for H in all_subgroups(D8) if H.order() == 2]


def test_d8_inventory():
    D8, invs = _d8_involution_subgroups()
    assert len(invs) == 5
    D = derived_subgroup(D8)
    statuses = {}
    for H in invs:
        v = integrable_within(H, D8)
        statuses[tuples(H)] = v
        if tuples(H) == tuples(D):
            assert v.status == INTEGRABLE
            assert all(check_integral(W, H) for W in v.witnesses)
        else:
            assert v.status == NOT_INTEGRABLE and v.exhaustive
    assert sum(v.status == INTEGRABLE for v in statuses.values()) == 1


def test_d8_inventory_strict_search_certificates():
    # without the derived-bound shortcut the search itself must come up empty
    D8, invs = _d8_involution_subgroups()
    strict = Options.direct(derived_bound=False)
    for H in invs:
        v = integrable_within(H, D8, strict)
        assert v.trace == ["direct-search"] and v.exhaustive
        expect = oracles.integrable_within(tuples(H), tuples(D8), 4)
        assert v.integrable == expect


@settings(max_examples=40)
@given(st.integers(3, 5), st.data())
def test_soundness_against_brute_force(n, data):
    E, subs = _oracle_subgroups_sym(n)
    imgs = data.draw(st.lists(st.permutations(list(range(n))), min_size=1, max_size=2))
    G = PermGroup([Permutation.from_array(a) for a in imgs], n)
    U = C.symmetric(n)
    GE = tuples(G)
    expected = any(oracles.derived(H, n) == GE for H in subs if GE <= H)
    for opt in (Options(), Options.direct(derived_bound=False)):
        v = integrable_within(G, U, opt)
        assert v.integrable == expected
        for W in v.witnesses:
            assert W.is_subgroup_of(U) and check_integral(W, G)
    # an exhaustive direct search lists every integral inside U
    v = integrable_within(G, U, Options.direct(derived_bound=False))
    count = sum(1 for H in subs if GE <= H and oracles.derived(H, n) == GE)
    assert len(v.witnesses) == count


def _random_group(rng, n):
    """Generators with random supports, so intransitive and small groups show up."""
    gens = []
    for _ in range(rng.randint(1, 3)):
        support = rng.sample(range(n), rng.randint(2, n))
        img = support[:]
        rng.shuffle(img)
        a = list(range(n))
        for s, t in zip(support, img):
            a[s] = t
        gens.append(Permutation.from_array(a))
    return PermGroup(gens, n)


def test_closure_of_derived_subgroups():
    # H' is always integrable within Sym(n): H itself is a witness
    rng = random.Random(2024)
    bad = []
    for i in range(200):
        n = rng.randint(2, 7)
        H = _random_group(rng, n)
        D = derived_subgroup(H)
        v = integrable_within(D, C.symmetric(n))
        if v.status != INTEGRABLE:
            bad.append((i, n, H.order(), v.status))
    assert bad == []


COHERENCE = [
    (lambda: C.alternating(4), lambda: C.symmetric(4)),
    (lambda: C.alternating(5), lambda: C.symmetric(5)),
    (lambda: C.cyclic(5), lambda: C.symmetric(5)),
    (lambda: C.psl(2, 7), lambda: C.pgl(2, 7)),
    (lambda: C.translations(2, 3), lambda: C.agl(2, 3)),
    (lambda: C.asl(2, 3), lambda: C.symmetric(9)),
    (lambda: C.affine_squares(7), lambda: C.symmetric(7)),
    (lambda: PermGroup([parse_cycles("(1 2 3)", 6), parse_cycles("(4 5 6)", 6)], 6), lambda: C.symmetric(6)),
]


@pytest.mark.parametrize("mkG, mkU", COHERENCE,
                         ids=["A4<S4", "A5<S5", "C5<S5", "PSL27<PGL27", "3^2<AGL23", "ASL23<S9", "7:3<S7",
                              "C3xC3<S6"])
def test_reductions_agree_with_direct_search(mkG, mkU):
    G, U = mkG(), mkU()
    with_red = integrable_within(G, U)
    without = integrable_within(G, U, Options.direct())
    assert with_red.status == without.status


def test_metacyclic_fast_path():
    A = C.metacyclic(7, 6, 3)
    D = derived_subgroup(A)
    v = integrable_within(D, A)
    assert v.status == INTEGRABLE and v.trace == ["metacyclic"]
    assert check_integral(v.witnesses[0], D)


def test_perfect_core_and_socle_reductions_are_traced():
    v = integrable_within(C.alternating(5), C.symmetric(5), Options(derived_bound=False))
    assert v.status == INTEGRABLE
    assert v.trace[0] in ("perfect-core", "socle")
    A4 = C.alternating(4)
    v = integrable_within(A4, C.symmetric(4))
    assert v.status == INTEGRABLE and "socle" in v.trace


def test_budget_gives_inconclusive():
    G = PermGroup([parse_cycles("(1 2 3)", 7)], 7)
    tiny = Budgets(index=1)
    v = integrable_within(G, C.symmetric(7), Options.direct(budgets=tiny))
    assert v.status == INCONCLUSIVE
    assert "budget" in v.trace


def test_trivial_group():
    v = integrable_within(PermGroup.trivial(4), C.dihedral(8))
    assert v.status == INTEGRABLE and v.exhaustive
    # abelian subgroups of D8: 1, five of order 2, three of order 4
    assert len(v.witnesses) == 9


def test_not_a_subgroup():
    with pytest.raises(NotASubgroupError):
        integrable_within(C.symmetric(4), C.alternating(4))


def test_classify_d8():
    rep = classify_integrable_subgroups(C.dihedral(8), scope="all")
    assert rep.subgroups_examined == 10
    integ = rep.with_status(INTEGRABLE)
    assert sorted(e.group.order() for e in integ) == [1, 2]
    assert len(rep.entries) == 10
    derived_only = classify_integrable_subgroups(C.dihedral(8))
    assert sorted(e.group.order() for e in derived_only.entries) == [1, 2]
    with pytest.raises(ValueError):
        classify_integrable_subgroups(C.dihedral(8), scope="bogus")


def test_fingerprint_examples():
    f = fingerprint(C.dihedral(8))
    assert (f.order, f.abelian, f.exponent, f.derived_length, f.center, f.involutions) == (8, False, 4, 2, 2, 5)
    q = fingerprint(C.quaternion())
    assert q.involutions == 1 and q.order == 8
    assert fingerprint(C.alternating(5)).derived_length is None


def test_almost_simple_check_a5():
    rep = almost_simple_check(aut_entry("A5"))
    assert rep.ok
    assert {(r.order, r.status) for r in rep.rows} == {(60, INTEGRABLE), (120, NOT_INTEGRABLE)}


def test_thm_b_check_seven_three():
    rep = thm_b_check(two_homog_entry("7:3"))
    assert rep.ok
    assert rep.rows[0].status == NOT_INTEGRABLE
