"""Glue between the engine's groups and the tuple oracles."""

from derivant import PermGroup, Permutation


def tuples(G: PermGroup) -> frozenset:
    return frozenset(tuple(int(x) for x in row) for row in G.elements_array())


def gen_tuples(G: PermGroup) -> list[tuple]:
    return [tuple(int(x) for x in g.array) for g in G.generators]


def group_from_tuples(elems, n) -> PermGroup:
    return PermGroup([Permutation.from_array(e) for e in elems], n)
