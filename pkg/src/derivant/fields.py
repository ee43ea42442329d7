"""Small finite fields GF(p^f), q <= 49, with table arithmetic.

Elements are integers 0..q-1: the integer ``c0 + c1*p + ... `` encodes the
polynomial ``c0 + c1*x + ...`` modulo the field's defining polynomial.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

MAX_Q = 49

# Conway polynomials, coefficients from the constant term upward (monic).
CONWAY = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 4, 1),
    (7, 2): (3, 6, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, f) with q = p^f, or raise ValueError."""
    for p in range(2, q + 1):
        if q % p == 0:
            f, r = 0, q
            while r % p == 0:
                r //= p
                f += 1
            if r != 1 or not is_prime(p):
                raise ValueError(f"{q} is not a prime power")
            return p, f
    raise ValueError(f"{q} is not a prime power")


def _polymod(a: list[int], m: tuple[int, ...], p: int) -> list[int]:
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < dm:
            break
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..f//2."""
    f = len(modulus) - 1
    if f < 1 or modulus[-1] % p == 0:
        return False
    for d in range(1, f // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = tuple(low) + (1,)
            if not _polymod(list(modulus), divisor, p):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    p: int
    f: int
    modulus: tuple[int, ...]
    q: int = field(init=False)
    add: np.ndarray = field(init=False, repr=False, compare=False)
    mul: np.ndarray = field(init=False, repr=False, compare=False)
    neg: np.ndarray = field(init=False, repr=False, compare=False)
    inv: np.ndarray = field(init=False, repr=False, compare=False)
    frob: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        p, f = self.p, self.f
        if not is_prime(p) or f < 1:
            raise ValueError(f"bad field parameters p={p} f={f}")
        q = p**f
        if q > MAX_Q:
            raise ValueError(f"q={q} exceeds {MAX_Q}")
        if len(self.modulus) != f + 1 or not is_irreducible(tuple(self.modulus), p):
            raise ValueError(f"modulus {self.modulus} is not irreducible of degree {f} over F_{p}")
        digits = np.array([[(x // p**i) % p for i in range(f)] for x in range(q)], dtype=np.int64)
        weights = p ** np.arange(f)
        add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(q):
                prod = np.convolve(digits[a], digits[b]) % p
                r = _polymod(prod.tolist(), tuple(self.modulus), p)
                r = r + [0] * (f - len(r))
                mul[a, b] = int(np.dot(r[:f], weights))
        neg = ((-digits) % p) @ weights
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = int(np.flatnonzero(mul[a] == 1)[0])
        frob = np.array([_pow_table(mul, a, p) for a in range(q)], dtype=np.int64)
        for name, arr in (("q", q), ("add", add), ("mul", mul), ("neg", neg), ("inv", inv), ("frob", frob)):
            if isinstance(arr, np.ndarray):
                arr.flags.writeable = False
            object.__setattr__(self, name, arr)

    def power(self, a: int, k: int) -> int:
        return _pow_table(self.mul, a, k)

    def primitive_element(self) -> int:
        """Smallest generator of the multiplicative group."""
        for a in range(2 if self.q > 2 else 1, self.q):
            x, k = a, 1
            while x != 1:
                x = int(self.mul[x, a])
                k += 1
            if k == self.q - 1:
                return a
        raise AssertionError("multiplicative group not cyclic")

    def additive_basis(self) -> list[int]:
        """Elements 1, x, x^2, ... spanning the field over F_p."""
        return [self.p**i for i in range(self.f)]

    def element_str(self, a: int) -> str:
        if self.f == 1:
            return str(a)
        return ",".join(str((a // self.p**i) % self.p) for i in range(self.f))

    def parse_element(self, text: str) -> int:
        parts = [int(t) for t in text.split(",")]
        if len(parts) == 1 and self.f == 1:
            v = parts[0]
        else:
            if len(parts) != self.f:
                raise ValueError(f"expected {self.f} coefficients, got {text!r}")
            v = sum(c * self.p**i for i, c in enumerate(parts))
        if not all(0 <= c < self.p for c in parts) or not 0 <= v < self.q:
            raise ValueError(f"coefficient out of range in {text!r}")
        return v


def _pow_table(mul: np.ndarray, a: int, k: int) -> int:
    r = 1
    for _ in range(k):
        r = int(mul[r, a])
    return r


@lru_cache(maxsize=None)
def field(p: int, f: int = 1) -> FieldSpec:
    """GF(p^f) with the shipped Conway modulus (f = 1 uses x)."""
    if f == 1:
        return FieldSpec(p, 1, (0, 1))
    if (p, f) not in CONWAY:
        raise ValueError(f"no shipped modulus for q={p}^{f}")
    return FieldSpec(p, f, CONWAY[(p, f)])


def gf(q: int) -> FieldSpec:
    return field(*prime_power(q))
