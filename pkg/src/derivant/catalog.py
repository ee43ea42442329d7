"""Catalog instances for the almost-simple and 2-homogeneous checkers.

Each entry is built on demand and validated when loaded: the socle must be
normal in the ambient group, and 2-homogeneous entries must actually be
2-homogeneous with 2-transitivity matching their case tag.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import constructors as C
from .actions import is_k_homogeneous, is_k_transitive
from .errors import NotNormalError
from .integrability import AutCatalogEntry, TwoHomogCatalogEntry
from .structure import is_normal


# -- almost simple ---------------------------------------------------------------

_AUT = {
    "A5": lambda: (C.alternating(5), C.symmetric(5)),
    "A6": lambda: (C.psl(2, 9), C.pgammal(2, 9)),
    "PSL(2,7)": lambda: (C.psl(2, 7), C.pgl(2, 7)),
    "PSL(2,11)": lambda: (C.psl(2, 11), C.pgl(2, 11)),
}


def aut_entry(name: str) -> AutCatalogEntry:
    try:
        S, A = _AUT[name]()
    except KeyError:
        raise KeyError(f"no almost-simple entry {name!r}; known: {', '.join(_AUT)}") from None
    if not is_normal(S, A):
        raise NotNormalError(f"{name}: socle not normal in the supplied Aut(S)")
    return AutCatalogEntry(name, S, A)


def aut_entries() -> list[AutCatalogEntry]:
    return [aut_entry(k) for k in _AUT]


def aut_psl37_entry() -> AutCatalogEntry:
    """Aut(PSL_3(7)) on 57 points plus 57 lines."""
    A = C.aut_psl3_on_points_and_lines(7)
    S = C.psl3_on_points_and_lines(7, "psl")
    if not is_normal(S, A):
        raise NotNormalError("PSL(3,7) not normal in the 114-point group")
    return AutCatalogEntry("PSL(3,7)", S, A)


# -- 2-homogeneous ---------------------------------------------------------------

@dataclass
class _TwoHomogSpec:
    name: str
    degree: int
    case: str
    build: Callable[[], tuple]   # -> (G, S, N, provenance)
    two_transitive: bool = True
    exception: str = ""


def _affine_entry(G_fn, d, q):
    def build():
        p, f = C.prime_power(q)
        N = C.agl(d * f, p)
        return G_fn(), C.translations(d, q), N, "holomorph"
    return build


def _case5(key, d, q):
    return _affine_entry(lambda: C.case5_witnesses([key])[key], d, q)


_TWO_HOMOG = [
    _TwoHomogSpec("7:3", 7, "1", _affine_entry(lambda: C.affine_squares(7), 1, 7), two_transitive=False),
    _TwoHomogSpec("11:5", 11, "1", _affine_entry(lambda: C.affine_squares(11), 1, 11), two_transitive=False),
    _TwoHomogSpec("27:13", 27, "1", _affine_entry(lambda: C.affine_squares(27), 1, 27), two_transitive=False,
                  exception="case 1, q not prime: N_Sn(S) = AGL(3,3) is larger than AGammaL(1,27)"),
    _TwoHomogSpec("3^2:Q8", 9, "5", _case5("3^2:Q8", 2, 3)),
    _TwoHomogSpec("ASL(2,3)", 9, "5", _affine_entry(lambda: C.asl(2, 3), 2, 3)),
    _TwoHomogSpec("5^2:SL(2,3)", 25, "5", _case5("5^2:SL(2,3)", 2, 5), exception="case 5 solvable exception"),
    _TwoHomogSpec("A6", 10, "11", lambda: (C.psl(2, 9), C.psl(2, 9), C.pgammal(2, 9), "catalog")),
    _TwoHomogSpec("PGL(3,7)", 57, "11", lambda: (C.pgl(3, 7), C.psl(3, 7), C.pgammal(3, 7), "catalog")),
]


def two_homog_names() -> list[str]:
    return [s.name for s in _TWO_HOMOG]


def two_homog_entry(name: str) -> TwoHomogCatalogEntry:
    spec = next((s for s in _TWO_HOMOG if s.name == name), None)
    if spec is None:
        raise KeyError(f"no 2-homogeneous entry {name!r}; known: {', '.join(two_homog_names())}")
    G, S, N, prov = spec.build()
    if G.degree != spec.degree:
        raise AssertionError(f"{name}: degree {G.degree}, expected {spec.degree}")
    if not (is_normal(S, G) and is_normal(S, N)):
        raise NotNormalError(f"{name}: socle is not normal")
    if not is_k_homogeneous(G, 2):
        raise AssertionError(f"{name}: not 2-homogeneous")
    if is_k_transitive(G, 2) != spec.two_transitive:
        raise AssertionError(f"{name}: 2-transitivity does not match case {spec.case}")
    return TwoHomogCatalogEntry(name, G, S, N, prov, case=spec.case,
                                exception=spec.exception)


def two_homog_entries(names=None) -> list[TwoHomogCatalogEntry]:
    return [two_homog_entry(n) for n in (names or two_homog_names())]
