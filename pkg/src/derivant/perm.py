"""Permutations of {1..n}, composed left to right.

Points are 1-based at the API boundary and 0-based internally.  Images are
held in read-only ``uint16`` arrays, which caps the degree at 65535.
"""

from __future__ import annotations

import re
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import DegreeMismatchError, ParseError

MAX_DEGREE = 2**16 - 1
DTYPE = np.uint16


def _check_degree(n: int) -> int:
    n = int(n)
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    if n > MAX_DEGREE:
        raise ValueError(f"degree {n} exceeds the cap {MAX_DEGREE}")
    return n


def as_array(images: Sequence[int] | np.ndarray) -> np.ndarray:
    """Validate 0-based images and return a frozen uint16 array."""
    a = np.asarray(images)
    if a.ndim != 1:
        raise ValueError("images must be one-dimensional")
    n = _check_degree(a.shape[0])
    if a.dtype != DTYPE:
        if a.size and (a.min() < 0 or a.max() >= n):
            raise ValueError("image out of range")
        a = a.astype(DTYPE)
    seen = np.zeros(n, dtype=bool)
    seen[a] = True
    if not seen.all():
        raise ValueError("images do not form a bijection")
    a.flags.writeable = False
    return a


class Permutation:
    """A bijection of {1..n}; ``p * q`` applies p first, then q."""

    __slots__ = ("_a", "_key")

    def __init__(self, images: Sequence[int]):
        # 1-based images, as in the text notation
        a = np.asarray(images, dtype=np.int64) - 1
        self._a = as_array(a)
        self._key = None

    @classmethod
    def _wrap(cls, a: np.ndarray) -> "Permutation":
        """Wrap an already valid 0-based uint16 array without copying."""
        p = cls.__new__(cls)
        if a.flags.writeable:
            a = a.copy()
            a.flags.writeable = False
        p._a = a
        p._key = None
        return p

    @classmethod
    def from_array(cls, a: Sequence[int] | np.ndarray) -> "Permutation":
        return cls._wrap(as_array(np.array(a)))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._wrap(np.arange(_check_degree(n), dtype=DTYPE))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        n = _check_degree(n)
        a = np.arange(n, dtype=np.int64)
        seen: set[int] = set()
        for cyc in cycles:
            cyc = [int(x) for x in cyc]
            for x in cyc:
                if x < 1 or x > n:
                    raise ValueError(f"point {x} outside 1..{n}")
                if x in seen:
                    raise ValueError(f"repeated point {x}")
                seen.add(x)
            for i, x in enumerate(cyc):
                a[x - 1] = cyc[(i + 1) % len(cyc)] - 1
        return cls._wrap(a.astype(DTYPE))

    @property
    def degree(self) -> int:
        return self._a.shape[0]

    @property
    def array(self) -> np.ndarray:
        """0-based images (read-only)."""
        return self._a

    @property
    def images(self) -> tuple[int, ...]:
        """1-based image sequence."""
        return tuple(int(x) + 1 for x in self._a)

    def key(self) -> bytes:
        if self._key is None:
            self._key = self._a.tobytes()
        return self._key

    def __call__(self, point: int) -> int:
        return int(self._a[point - 1]) + 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __lt__(self, other: "Permutation") -> bool:
        return tuple(self._a.tolist()) < tuple(other._a.tolist())

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __invert__(self) -> "Permutation":
        return inverse(self)

    def __pow__(self, k: int) -> "Permutation":
        return power(self, k)

    def is_identity(self) -> bool:
        return bool((self._a == np.arange(self.degree, dtype=DTYPE)).all())

    def order(self) -> int:
        o = 1
        for c in cycle_lengths(self):
            o = o * c // gcd(o, c)
        return o

    def support(self) -> list[int]:
        return [i + 1 for i in np.flatnonzero(self._a != np.arange(self.degree))]

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, n={self.degree})"

    def __str__(self) -> str:
        return format_cycles(self)


def identity(n: int) -> Permutation:
    return Permutation.identity(n)


def _same_degree(p: Permutation, q: Permutation) -> None:
    if p.degree != q.degree:
        raise DegreeMismatchError(f"degrees differ: {p.degree} vs {q.degree}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return pq, i.e. (i)(pq) = ((i)p)q."""
    _same_degree(p, q)
    return Permutation._wrap(q._a[p._a])


def inverse(p: Permutation) -> Permutation:
    inv = np.empty_like(p._a)
    inv[p._a] = np.arange(p.degree, dtype=DTYPE)
    return Permutation._wrap(inv)


def power(p: Permutation, k: int) -> Permutation:
    if k < 0:
        p, k = inverse(p), -k
    result = np.arange(p.degree, dtype=DTYPE)
    base = p._a
    while k:
        if k & 1:
            result = base[result]
        base = base[base]
        k >>= 1
    return Permutation._wrap(result)


def conjugate(x: Permutation, y: Permutation) -> Permutation:
    """x^y = y^-1 x y."""
    _same_degree(x, y)
    return Permutation._wrap(y._a[x._a[inverse(y)._a]])


def commutator(x: Permutation, y: Permutation) -> Permutation:
    """[x, y] = x^-1 y^-1 x y."""
    _same_degree(x, y)
    xi, yi = inverse(x)._a, inverse(y)._a
    return Permutation._wrap(y._a[x._a[yi[xi]]])


def cycle_lengths(p: Permutation) -> list[int]:
    a = p._a.tolist()
    seen = [False] * len(a)
    out = []
    for i in range(len(a)):
        if seen[i]:
            continue
        j, c = i, 0
        while not seen[j]:
            seen[j] = True
            j = a[j]
            c += 1
        out.append(c)
    return sorted(out)


def cycles(p: Permutation) -> list[tuple[int, ...]]:
    """Non-trivial cycles, 1-based, each starting at its smallest point."""
    a = p._a.tolist()
    seen = [False] * len(a)
    out = []
    for i in range(len(a)):
        if seen[i] or a[i] == i:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = a[j]
        out.append(tuple(cyc))
    return out


def format_cycles(p: Permutation) -> str:
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation such as ``"(1 2 3)(4 5)"``.

    Points may be separated by spaces or commas.  Raises ParseError with the
    column of the offending token.
    """
    degree = _check_degree(degree)
    s = text.strip()
    if not s:
        raise ParseError("empty permutation", column=1)
    pos = 0
    cyc_list = []
    seen: dict[int, int] = {}
    offset = len(text) - len(text.lstrip())
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        m = _CYCLE.match(s, pos)
        if not m:
            raise ParseError(f"malformed token near {s[pos:pos + 10]!r}",
                             column=offset + pos + 1)
        body = m.group(1).replace(",", " ").split()
        cyc = []
        col = offset + m.start(1) + 1
        for tok in body:
            if not tok.isdigit():
                raise ParseError(f"malformed point {tok!r}", column=col)
            x = int(tok)
            if x < 1 or x > degree:
                raise ParseError(f"point {x} outside 1..{degree}", column=col)
            if x in seen:
                raise ParseError(f"repeated point {x}", column=col)
            seen[x] = col
            cyc.append(x)
        if cyc:
            cyc_list.append(cyc)
        pos = m.end()
    return Permutation.from_cycles(cyc_list, degree)
