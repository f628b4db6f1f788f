"""Small finite fields F_{p^n} with fixed primitive elements.

Elements are encoded as integers 0..p^n-1 (base-p digits are polynomial
coefficients, lowest degree first).  Each field carries exp/log tables for
a chosen primitive element and the absolute trace of every power of it,
which is all the Gauss-sum code needs.
"""

from __future__ import annotations

import itertools
from math import gcd
from dataclasses import dataclass, field
from functools import lru_cache


def _digits(x: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        x, r = divmod(x, p)
        out.append(r)
    return out


def _undigits(ds, p: int) -> int:
    x = 0
    for d in reversed(ds):
        x = x * p + d
    return x


def _polymulmod(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    # modulus is monic of degree n, given as n+1 coefficients low -> high
    n = len(modulus) - 1
    prod = [0] * (2 * n - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, n - 1, -1):
        c = prod[k]
        if c:
            for i in range(n + 1):
                prod[k - n + i] = (prod[k - n + i] - c * modulus[i]) % p
    return prod[:n]


def _primitive_root(p: int) -> int:
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in _prime_divisors(p - 1)):
            return g
    return 1  # p == 2 is rejected upstream; p == 3 handled above


def _prime_divisors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True, eq=False)
class ResidueField:
    """F_{p^n} with a primitive element g and its power tables."""

    p: int
    n: int
    modulus: tuple[int, ...]
    exp: tuple[int, ...] = field(repr=False)
    log: dict = field(repr=False)
    trace: tuple[int, ...] = field(repr=False)

    @property
    def size(self) -> int:
        return self.p**self.n

    @property
    def order(self) -> int:
        return self.p**self.n - 1

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self.exp[(self.log[x] + self.log[y]) % self.order]

    def add(self, x: int, y: int) -> int:
        a = _digits(x, self.p, self.n)
        b = _digits(y, self.p, self.n)
        return _undigits([(s + t) % self.p for s, t in zip(a, b)], self.p)

    def power(self, j: int) -> int:
        return self.exp[j % self.order]

    def log_of(self, x: int) -> int:
        if x == 0:
            raise ValueError("log of zero")
        return self.log[x]

    def log_int(self, c: int) -> int:
        """Discrete log of the prime-field element c mod p."""
        return self.log_of(c % self.p)

    def abs_trace(self, x: int) -> int:
        return 0 if x == 0 else self.trace[self.log[x]]

    def minpoly_root(self, poly: tuple[int, ...], x: int) -> bool:
        """Is x a root of the F_p-polynomial `poly` (low -> high)?"""
        acc = 0
        for c in reversed(poly):
            acc = self.add(self.mul(acc, x), c % self.p)
        return acc == 0


def _build(p: int, n: int, modulus: tuple[int, ...], gen: int) -> ResidueField:
    q = p**n
    exp = [0] * (q - 1)
    log: dict[int, int] = {}
    cur = [1] + [0] * (n - 1)
    g = _digits(gen, p, n)
    for j in range(q - 1):
        e = _undigits(cur, p)
        if e in log:
            raise ValueError("generator is not primitive")
        exp[j] = e
        log[e] = j
        cur = _polymulmod(cur, g, list(modulus), p)
    trace = []
    for j in range(q - 1):
        acc = [0] * n
        for i in range(n):
            acc = [(s + t) % p for s, t in zip(acc, _digits(exp[(j * p**i) % (q - 1)], p, n))]
        # trace lies in the prime field: constant coefficient
        trace.append(acc[0])
    return ResidueField(p, n, modulus, tuple(exp), log, tuple(trace))


def _is_primitive_poly(p: int, n: int, modulus: tuple[int, ...]) -> bool:
    q = p**n
    x = [0, 1] + [0] * (n - 2) if n > 1 else None
    if x is None:
        return False
    cur = [1] + [0] * (n - 1)
    for j in range(1, q - 1):
        cur = _polymulmod(cur, x, list(modulus), p)
        if cur == [1] + [0] * (n - 1):
            return False
    cur = _polymulmod(cur, x, list(modulus), p)
    return cur == [1] + [0] * (n - 1)


@lru_cache(maxsize=None)
def prime_power_field(p: int, n: int) -> ResidueField:
    """F_{p^n} with a deterministic primitive element.

    n == 1: the smallest primitive root mod p.  n > 1: the class of x in
    F_p[x]/(m) for the first primitive monic m in lexicographic order of
    its coefficient vector (constant term first).
    """
    if n == 1:
        g = _primitive_root(p) if p > 2 else 1
        return _build(p, 1, ((-g) % p, 1), g)
    for low in itertools.product(range(p), repeat=n):
        modulus = tuple(low) + (1,)
        if low[0] == 0:
            continue
        if _is_primitive_poly(p, n, modulus):
            return _build(p, n, modulus, p)  # p encodes the element x
    raise RuntimeError("no primitive polynomial found")


def _minpoly(fld: ResidueField, x: int) -> tuple[int, ...]:
    """Minimal polynomial over F_p of x (low -> high)."""
    # conjugates x^(p^i); multiply out (T - c) using the field tables
    conj = []
    c = x
    while c not in conj:
        conj.append(c)
        c = fld.power(fld.log_of(c) * fld.p) if c else 0
    poly = [1]  # coefficients in the field, low -> high
    for r in conj:
        neg_r = fld.mul(r, fld.p - 1 if fld.p > 1 else 1) if r else 0
        new = [0] * (len(poly) + 1)
        for i, a in enumerate(poly):
            new[i + 1] = fld.add(new[i + 1], a)
            new[i] = fld.add(new[i], fld.mul(a, neg_r))
        poly = new
    out = []
    for a in poly:
        ds = _digits(a, fld.p, fld.n)
        if any(ds[1:]):
            raise RuntimeError("minimal polynomial not over the prime field")
        out.append(ds[0])
    return tuple(out)


@lru_cache(maxsize=None)
def compatible_extension(p: int, f: int, d: int) -> ResidueField:
    """F_{q^d} (q = p^f) whose generator has norm equal to F_q's generator.

    The norm of g_L to F_q is g_L^((q^d-1)/(q-1)); we pick the first
    primitive power of the standard generator whose norm is a root of the
    minimal polynomial of the standard generator of F_q, so the subfield
    generated by it is identified with F_q compatibly.
    """
    if d == 1:
        return prime_power_field(p, f)
    base = prime_power_field(p, f)
    q = p**f
    big = prime_power_field(p, f * d)
    order = big.order
    c = order // (q - 1)
    target = _minpoly(base, base.exp[1])
    for j in range(1, order):
        if gcd(j, order) != 1:
            continue
        nm = big.power(j * c)
        if big.minpoly_root(target, nm):
            gen = big.power(j)
            return _build(p, f * d, big.modulus, gen)
    raise RuntimeError("no norm-compatible generator")
