"""Relative integrability: is G = H' for some H <= U?

Any such H normalizes G (G is characteristic in H' = G), so the search
space is the interval G <= H <= N_U(G).  A candidate H can only work if
H/G is abelian, and then H' <= G automatically, so the final test is an
order comparison.

Before the direct search three reductions may shrink the problem:

* metacyclic U = <x, y> with <x> normal: G is integrable iff G <= U'
  (and an explicit witness <x^t, y> is produced);
* perfect core: with K the last term of G's derived series, G is
  integrable within U iff G/K is integrable within N_U(K)/K;
* socle: if G is not a cyclic p-group and has a unique minimal normal
  subgroup S, G is integrable within U iff G/S is within N_U(S)/S.

Witnesses found in a quotient are lifted back and re-checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from math import gcd
from typing import Sequence

import numpy as np

from .config import DEFAULT, Budgets
from .errors import BudgetExceeded, NotASubgroupError
from .group import PermGroup
from .normalizer import normalizer_in
from .perm import Permutation
from .quotient import QuotientRep
from .structure import derived_subgroup, minimal_normal_subgroups, perfect_core
from .subgroups import GroupTable, lattice

INTEGRABLE = "Integrable"
NOT_INTEGRABLE = "NotIntegrable"
INCONCLUSIVE = "Inconclusive"


@dataclass
class Options:
    metacyclic: bool = True
    perfect_core: bool = True
    socle: bool = True
    budgets: Budgets = DEFAULT
    guard: bool = False
    # G not inside U' is an immediate NotIntegrable; off means search anyway
    derived_bound: bool = True

    @classmethod
    def direct(cls, **kw) -> "Options":
        """All reductions off; the derived-bound shortcut stays unless disabled."""
        return cls(metacyclic=False, perfect_core=False, socle=False, **kw)


@dataclass
class IntegrabilityVerdict:
    status: str
    witnesses: list[PermGroup] = field(default_factory=list)
    trace: list[str] = field(default_factory=list)
    provenance: list[str] = field(default_factory=list)
    candidates: int = 0
    exhaustive: bool = False
    reason: str = ""

    @property
    def integrable(self) -> bool:
        return self.status == INTEGRABLE

    def provenance_label(self) -> str:
        seen = []
        for p in self.provenance:
            if p not in seen:
                seen.append(p)
        return ",".join(seen) if seen else "none"


def same_group(A: PermGroup, B: PermGroup) -> bool:
    return A.degree == B.degree and A.order() == B.order() and A.is_subgroup_of(B)


def check_integral(H: PermGroup, G: PermGroup) -> bool:
    """Is H' literally equal to G?"""
    if H.degree != G.degree:
        return False
    return same_group(derived_subgroup(H), G)


def is_cyclic_p_group(G: PermGroup) -> bool:
    from .fields import prime_power

    n = G.order()
    if n == 1:
        return True
    try:
        prime_power(n)
    except ValueError:
        return False
    if not G.is_abelian():
        return False
    # abelian p-group: cyclic iff some generator has full order
    from .elements import ElementIndex

    if n <= DEFAULT.elements:
        return int(ElementIndex(G).element_orders().max()) == n
    return any(g.order() == n for g in G.generators)


def integrable_within(G: PermGroup, U: PermGroup, options: Options | None = None) -> IntegrabilityVerdict:
    options = options or Options()
    if G.degree != U.degree or not G.is_subgroup_of(U):
        raise NotASubgroupError("integrable_within requires G <= U")
    try:
        return _decide(G, U, options, 0)
    except BudgetExceeded as exc:
        return IntegrabilityVerdict(INCONCLUSIVE, trace=["budget"], reason=str(exc))


def _decide(G: PermGroup, U: PermGroup, opt: Options, depth: int) -> IntegrabilityVerdict:
    if G.order() == 1:
        return _trivial(G, U, opt)
    D = derived_subgroup(U)
    if opt.derived_bound and not G.is_subgroup_of(D):
        return IntegrabilityVerdict(NOT_INTEGRABLE, trace=["derived-bound"], exhaustive=True,
                                    reason="G is not contained in U', which contains every H'")
    if opt.metacyclic and "metacyclic" in U.tags and G.is_subgroup_of(D):
        v = _metacyclic(G, U)
        if v is not None:
            return v
    if depth < opt.budgets.depth:
        if opt.perfect_core:
            K = perfect_core(G)
            if K.order() > 1:
                return _reduce(G, U, K, "perfect-core", opt, depth)
        if opt.socle and not is_cyclic_p_group(G):
            try:
                mins = minimal_normal_subgroups(G, opt.budgets.elements)
            except BudgetExceeded:
                mins = []
            if len(mins) == 1:
                return _reduce(G, U, mins[0], "socle", opt, depth)
    return _direct(G, U, opt)


def _trivial(G: PermGroup, U: PermGroup, opt: Options) -> IntegrabilityVerdict:
    """Every abelian H <= U has H' = 1."""
    if U.order() <= opt.budgets.subgroups:
        L = lattice(U, opt.budgets.subgroups)
        T = L.table
        wits = [T.to_group(m, g or None) for m, g in zip(L.masks, L.gens)
                if T.derived_mask(m, g or None).sum() == 1]
        return IntegrabilityVerdict(INTEGRABLE, wits, ["trivial"], candidates=len(L), exhaustive=True)
    return IntegrabilityVerdict(INTEGRABLE, [PermGroup.trivial(U.degree)], ["trivial"],
                                candidates=1, exhaustive=False,
                                reason="trivial group; only the trivial witness is listed")


def _metacyclic(G: PermGroup, U: PermGroup) -> IntegrabilityVerdict | None:
    """G <= U' is already known here; build C = <x^t, y> with C' = G."""
    info = U.tags["metacyclic"]
    x, y, m, r = info["x"], info["y"], info["m"], info["r"]
    if not (x in U and y in U):
        return None
    c = (r - 1) % m
    k = G.order()
    if m % k:
        return None
    e = m // k  # G = <x^e>
    for t in range(1, m + 1):
        if gcd(c * t, m) == gcd(e, m):
            C = PermGroup([x ** t, y], U.degree)
            if check_integral(C, G):
                return IntegrabilityVerdict(INTEGRABLE, [C], ["metacyclic"], candidates=1, exhaustive=False,
                                            reason="subgroup of U' in a metacyclic group")
            break
    return None


def _reduce(G: PermGroup, U: PermGroup, K: PermGroup, label: str, opt: Options,
            depth: int) -> IntegrabilityVerdict:
    nres = normalizer_in(U, K, scan_budget=opt.budgets.scan, guard=opt.guard)
    NK = nres.group
    qr = QuotientRep(NK, K, opt.budgets.quotient_index)
    Gbar = qr.project_group(G)
    Ubar = qr.quotient_group
    sub = _decide(Gbar, Ubar, opt, depth + 1)
    out = IntegrabilityVerdict(sub.status, trace=[label] + sub.trace,
                               provenance=[nres.provenance] + sub.provenance,
                               candidates=sub.candidates, exhaustive=sub.exhaustive, reason=sub.reason)
    for W in sub.witnesses:
        H = qr.lift(W)
        if not check_integral(H, G):
            raise AssertionError(f"{label} reduction produced an invalid witness")
        out.witnesses.append(H)
    return out


def _direct(G: PermGroup, U: PermGroup, opt: Options) -> IntegrabilityVerdict:
    nres = normalizer_in(U, G, scan_budget=opt.budgets.scan, guard=opt.guard)
    N = nres.group
    index = N.order() // G.order()
    if index > opt.budgets.index:
        raise BudgetExceeded("candidate enumeration |N_U(G):G|", index, opt.budgets.index)
    qr = QuotientRep(N, G, opt.budgets.quotient_index)
    L = lattice(qr.quotient_group, opt.budgets.subgroups)
    T = L.table
    witnesses = []
    for mask, gens in zip(L.masks, L.gens):
        # H' = G forces H/G abelian
        if T.derived_mask(mask, gens or None).sum() != 1:
            continue
        H = qr.lift(T.to_group(mask, gens or None))
        if derived_subgroup(H).order() == G.order():
            witnesses.append(H)
    status = INTEGRABLE if witnesses else NOT_INTEGRABLE
    return IntegrabilityVerdict(status, witnesses, ["direct-search"], [nres.provenance],
                                candidates=len(L), exhaustive=True)


# -- inventories -----------------------------------------------------------------

@dataclass(frozen=True)
class Fingerprint:
    order: int
    abelian: bool
    exponent: int
    derived_length: int | None
    center: int
    involutions: int

    def __str__(self) -> str:
        dl = "ns" if self.derived_length is None else str(self.derived_length)
        return (f"o{self.order}/{'ab' if self.abelian else 'nab'}/e{self.exponent}"
                f"/dl{dl}/z{self.center}/i{self.involutions}")


def _table_fingerprint(T: GroupTable, mask: np.ndarray, gens: list[int]) -> Fingerprint:
    members = np.flatnonzero(mask)
    orders = T.orders[members]
    exponent = int(np.lcm.reduce(orders)) if members.size else 1
    gens = gens or [T.identity]
    c = T.conj_table()
    central = np.ones(members.size, dtype=bool)
    for g in gens:
        central &= c[g, members] == members
    cur, cur_gens, dl = mask, gens, 0
    while cur.sum() > 1:
        nxt = T.derived_mask(cur, cur_gens)
        if nxt.sum() == cur.sum():
            dl = None
            break
        cur, cur_gens, dl = nxt, T.small_generators(nxt), dl + 1
    return Fingerprint(int(mask.sum()), bool(central.all()), exponent, dl,
                       int(central.sum()), int((orders == 2).sum()))


def fingerprint(G: PermGroup) -> Fingerprint:
    T = GroupTable(G, max(G.order(), 1))
    full = np.ones(T.size, dtype=bool)
    return _table_fingerprint(T, full, T.gen_index)


@dataclass
class ClassEntry:
    group: PermGroup
    fingerprint: Fingerprint
    status: str
    witness_count: int
    mask: np.ndarray = field(repr=False)


@dataclass
class ClassificationReport:
    ambient: PermGroup
    scope: str
    entries: list[ClassEntry]
    subgroups_examined: int

    def counts(self) -> dict[tuple[str, str], int]:
        out: dict[tuple[str, str], int] = {}
        for e in self.entries:
            k = (str(e.fingerprint), e.status)
            out[k] = out.get(k, 0) + 1
        return dict(sorted(out.items()))

    def with_status(self, status: str) -> list[ClassEntry]:
        return [e for e in self.entries if e.status == status]


def classify_integrable_subgroups(U: PermGroup, scope: str = "derived",
                                  bound: int | None = None) -> ClassificationReport:
    """Verdict for every subgroup in scope, by computing H' for all H <= U.

    ``scope`` is "derived" (subgroups of U') or "all".  The derived subgroup
    of every subgroup of U is computed, so the result is exhaustive.
    """
    if scope not in ("derived", "all"):
        raise ValueError("scope must be 'derived' or 'all'")
    L = lattice(U, bound)
    T = L.table
    index = {m.tobytes(): j for j, m in enumerate(L.masks)}
    witnesses: dict[int, int] = {}
    for m, g in zip(L.masks, L.gens):
        d = T.derived_mask(m, g or None)
        j = index[d.tobytes()]
        witnesses[j] = witnesses.get(j, 0) + 1
    Dmask = T.derived_mask(np.ones(T.size, dtype=bool), T.gen_index)
    entries = []
    for j, (m, g) in enumerate(zip(L.masks, L.gens)):
        if scope == "derived" and (m & ~Dmask).any():
            continue
        count = witnesses.get(j, 0)
        entries.append(ClassEntry(T.to_group(m, g or None), _table_fingerprint(T, m, g),
                                  INTEGRABLE if count else NOT_INTEGRABLE, count, m))
    return ClassificationReport(U, scope, entries, len(L))


def integrable_subgroup_masks(U: PermGroup, bound: int | None = None) -> tuple[GroupTable, set[bytes]]:
    """Table of U and the set of masks {H' : H <= U}."""
    L = lattice(U, bound)
    T = L.table
    return T, {T.derived_mask(m, g or None).tobytes() for m, g in zip(L.masks, L.gens)}


# -- theorem instance checkers -------------------------------------------------------

@dataclass
class CheckRow:
    label: str
    order: int
    status: str
    expected: str
    ok: bool
    note: str = ""


@dataclass
class CheckReport:
    title: str
    rows: list[CheckRow]
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)


@dataclass
class AutCatalogEntry:
    name: str
    S: PermGroup
    aut: PermGroup


def almost_simple_check(entry: AutCatalogEntry, options: Options | None = None) -> CheckReport:
    """For S <= G <= Aut(S): integrable within Aut(S) iff G <= Aut(S)'."""
    from .structure import is_normal
    from .subgroups import intermediate_subgroups

    S, A = entry.S, entry.aut
    if not is_normal(S, A):
        raise NotASubgroupError("S is not normal in the supplied Aut(S)")
    D = derived_subgroup(A)
    rows = []
    for G in intermediate_subgroups(A, S):
        v = integrable_within(G, A, options)
        expected = INTEGRABLE if G.is_subgroup_of(D) else NOT_INTEGRABLE
        rows.append(CheckRow(f"|G|={G.order()}", G.order(), v.status, expected, v.status == expected,
                             "+".join(v.trace)))
    return CheckReport(f"almost-simple {entry.name}", rows, [f"|Aut(S)'| = {D.order()}"])


@dataclass
class TwoHomogCatalogEntry:
    name: str
    G: PermGroup
    S: PermGroup
    N: PermGroup
    provenance: str
    case: str = ""
    exception: str = ""


def thm_b_check(entry: TwoHomogCatalogEntry, options: Options | None = None) -> CheckReport:
    """Integrable within S_n versus N'' <= G <= N' for N = N_Sn(S).

    Containment is tested literally.  Since N' and N'' are normal in N,
    literal containment and containment up to N-conjugacy agree for G <= N.
    Entries carrying an ``exception`` reason (the solvable affine exceptions,
    and one-dimensional affine groups with q not prime) may be integrable outside the literal
    interval; for those the interval of N_Sn(G) is reported as well and the
    row passes when G lies in that one.
    """
    from .constructors import symmetric
    from .normalizer import normalizer_in

    G, N = entry.G, entry.N
    n = G.degree
    Sn = symmetric(n)
    N1 = derived_subgroup(N)
    N2 = derived_subgroup(N1)
    inside = N2.is_subgroup_of(G) and G.is_subgroup_of(N1)
    v = integrable_within(G, Sn, options)
    notes = [f"|N|={N.order()} ({entry.provenance}), |N'|={N1.order()}, |N''|={N2.order()}",
             f"trace={'+'.join(v.trace)} provenance={v.provenance_label()}"]
    if not G.is_subgroup_of(N):
        notes.append("G is not contained in N; containment tested literally")
    alt = None
    if entry.exception and not inside:
        M = normalizer_in(Sn, G).group
        M1 = derived_subgroup(M)
        M2 = derived_subgroup(M1)
        alt = M2.is_subgroup_of(G) and G.is_subgroup_of(M1)
        notes.append(f"exception ({entry.exception}): |N_Sn(G)|={M.order()}, |N_Sn(G)'|={M1.order()}, "
                     f"|N_Sn(G)''|={M2.order()}, G in that interval: {alt}")
    if v.status == INTEGRABLE:
        ok = inside or bool(alt)
        note = "in interval" if inside else "outside literal interval, inside N_Sn(G) interval" if ok \
            else "outside interval"
    elif v.status == NOT_INTEGRABLE:
        ok = not inside
        note = "outside interval" if not inside else "in interval but not integrable"
    else:
        ok, note = False, v.reason
    expected = INTEGRABLE if inside or alt else NOT_INTEGRABLE
    row = CheckRow(entry.name, G.order(), v.status, expected, ok, note)
    return CheckReport(f"two-homogeneous {entry.name}", [row], notes)
