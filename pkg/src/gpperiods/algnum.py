"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Every value the library produces (Gauss sums, epsilon factors, Satake
parameters, Whittaker values) lives in some Q(zeta_N).  Elements are stored
as rational polynomials in zeta_N reduced modulo the N-th cyclotomic
polynomial, so equality is exact.  Elements of different levels are lifted
to the lcm level on contact.

Square roots of positive integers (in particular sqrt(q)) are realised
inside Q(zeta_{4n}) via quadratic Gauss sums, so Q(zeta_N, sqrt q) is just a
larger cyclotomic field.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

import flint

__all__ = [
    "AlgNumber",
    "zeta",
    "sqrt_int",
    "sqrt_rational",
    "as_alg",
    "ZERO",
    "ONE",
]


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _euler_phi(n: int) -> int:
    r = n
    for p in _factor(n):
        r = r // p * (p - 1)
    return r


def _moebius(n: int) -> int:
    fac = _factor(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


@lru_cache(maxsize=None)
def _modulus(n: int) -> flint.fmpq_poly:
    return flint.fmpq_poly(flint.fmpz_poly.cyclotomic(n).coeffs())


@lru_cache(maxsize=None)
def _trace_weights(n: int) -> tuple:
    # normalised trace of zeta_n^i is mu(n/g)/phi(n/g), g = gcd(i, n)
    w = []
    for i in range(_euler_phi(n)):
        m = n // math.gcd(i, n)
        w.append(flint.fmpq(_moebius(m), _euler_phi(m)))
    return tuple(w)


@lru_cache(maxsize=4096)
def _monomial(n: int, j: int) -> flint.fmpq_poly:
    j %= n
    coeffs = [0] * (j + 1)
    coeffs[j] = 1
    return flint.fmpq_poly(coeffs) % _modulus(n)


def _spread(poly: flint.fmpq_poly, n: int, step: int) -> flint.fmpq_poly:
    """Substitute zeta_n = zeta_{n*step}^step and reduce at level n*step."""
    cs = poly.coeffs()
    if not cs:
        return poly
    big = [flint.fmpq(0)] * ((len(cs) - 1) * step + 1)
    for i, c in enumerate(cs):
        big[i * step] = c
    return flint.fmpq_poly(big) % _modulus(n * step)


class AlgNumber:
    """An element of Q(zeta_level), immutable."""

    __slots__ = ("level", "poly", "_hash")

    def __init__(self, level: int, poly: flint.fmpq_poly):
        if level < 1:
            raise ValueError("cyclotomic level must be positive")
        # Q(zeta_n) = Q(zeta_2n) for odd n; keep even levels canonical
        if level % 2 == 1 and level > 1:
            poly = _spread(poly, level, 2)
            level *= 2
        elif level == 1:
            level = 2
            poly = poly % _modulus(2)
        self.level = level
        self.poly = poly
        self._hash = None

    # -- construction -----------------------------------------------------
    @classmethod
    def rational(cls, x, level: int = 2) -> AlgNumber:
        fr = Fraction(x)
        return cls(level, flint.fmpq_poly([flint.fmpq(fr.numerator, fr.denominator)]))

    def lift(self, level: int) -> AlgNumber:
        if level == self.level:
            return self
        if level % self.level:
            raise ValueError(f"cannot lift level {self.level} to {level}")
        return AlgNumber(level, _spread(self.poly, self.level, level // self.level))

    def _coerce(self, other) -> tuple[AlgNumber, AlgNumber]:
        if not isinstance(other, AlgNumber):
            other = as_alg(other)
        if other.level == self.level:
            return self, other
        lvl = math.lcm(self.level, other.level)
        return self.lift(lvl), other.lift(lvl)

    # -- ring operations --------------------------------------------------
    def __add__(self, other):
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return AlgNumber(a.level, a.poly + b.poly)

    __radd__ = __add__

    def __neg__(self):
        return AlgNumber(self.level, -self.poly)

    def __sub__(self, other):
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return AlgNumber(a.level, a.poly - b.poly)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return AlgNumber(self.level, self.poly * other)
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return AlgNumber(a.level, (a.poly * b.poly) % _modulus(a.level))

    __rmul__ = __mul__

    def inverse(self) -> AlgNumber:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero AlgNumber")
        g, s, _ = self.poly.xgcd(_modulus(self.level))
        # g is a nonzero constant because the modulus is irreducible
        return AlgNumber(self.level, (s * flint.fmpq(1) / g[0]) % _modulus(self.level))

    def __truediv__(self, other):
        if not isinstance(other, AlgNumber):
            other = as_alg(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_alg(other) * self.inverse()

    def __pow__(self, e: int) -> AlgNumber:
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        mod = _modulus(self.level)
        result = flint.fmpq_poly([1])
        base = self.poly
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return AlgNumber(self.level, result)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def is_rational(self) -> bool:
        return self.poly.degree() <= 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        c = self.poly[0]
        return Fraction(int(c.p), int(c.q))

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgNumber):
            try:
                other = as_alg(other)
            except TypeError:
                return NotImplemented
        a, b = self._coerce(other)
        return a.poly == b.poly

    def __hash__(self) -> int:
        if self._hash is None:
            # normalised trace is independent of the level
            w = _trace_weights(self.level)
            t = flint.fmpq(0)
            for i, c in enumerate(self.poly.coeffs()):
                t += c * w[i]
            self._hash = hash((int(t.p), int(t.q)))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- Galois action ----------------------------------------------------
    def galois(self, a: int) -> AlgNumber:
        """Apply zeta_N -> zeta_N^a (a coprime to N)."""
        n = self.level
        if math.gcd(a, n) != 1:
            raise ValueError("Galois exponent must be a unit")
        acc = [flint.fmpq(0)] * n
        for i, c in enumerate(self.poly.coeffs()):
            acc[(i * a) % n] += c
        return AlgNumber(n, flint.fmpq_poly(acc) % _modulus(n))

    def conj(self) -> AlgNumber:
        return self.galois(-1)

    def abs2(self) -> AlgNumber:
        return self * self.conj()

    # -- roots of unity and roots -----------------------------------------
    def as_root_of_unity_times_rational(self) -> tuple[Fraction, int, int] | None:
        """Return (c, j, N) with self == c * zeta_N^j, or None."""
        if self.is_zero():
            return None
        n = self.level
        for j in range(n):
            y = AlgNumber(n, (self.poly * _monomial(n, -j)) % _modulus(n))
            if y.is_rational():
                return y.to_fraction(), j, n
        return None

    def root(self, d: int) -> AlgNumber | None:
        """A d-th root inside some cyclotomic field, when one is found.

        Only elements of the form (rational) * (root of unity) are handled;
        returns None otherwise or when the rational part has no d-th root
        in an abelian extension.
        """
        if d == 1:
            return self
        mono = self.as_root_of_unity_times_rational()
        if mono is None:
            return None
        c, j, n = mono
        if c < 0:
            c = -c
            j = (2 * j + n) % (2 * n)
            n *= 2
        num, den = c.numerator, c.denominator
        rn = round(num ** (1.0 / d))
        rd = round(den ** (1.0 / d))
        r = None
        for a in (rn - 1, rn, rn + 1):
            for b in (rd - 1, rd, rd + 1):
                if a > 0 and b > 0 and a**d == num and b**d == den:
                    r = AlgNumber.rational(Fraction(a, b))
        if r is None:
            if d != 2:
                return None
            r = sqrt_rational(c)
        return r * zeta(n * d, j)

    def sqrt(self) -> AlgNumber | None:
        return self.root(2)

    # -- numerics and display ---------------------------------------------
    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.level)
        return sum(float(c.p) / float(c.q) * z**i for i, c in enumerate(self.poly.coeffs()))

    def sort_key(self) -> tuple:
        v = self.to_complex()
        return (round(v.real, 9), round(v.imag, 9), str(self))

    def __repr__(self) -> str:
        return f"AlgNumber({self})"

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.to_fraction())
        if self.level <= 48:
            mono = self.as_root_of_unity_times_rational()
            if mono is not None:
                c, j, n = mono
                g = math.gcd(j, n)
                base = f"zeta{n // g}" + (f"^{j // g}" if j // g != 1 else "")
                return base if c == 1 else f"{c}*{base}"
        terms = []
        for i, c in enumerate(self.poly.coeffs()):
            if c != 0:
                terms.append(f"{c}*z^{i}" if i else f"{c}")
        return f"[{' + '.join(terms)}]_(z=zeta{self.level})"


def as_alg(x) -> AlgNumber:
    if isinstance(x, AlgNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return AlgNumber.rational(x)
    raise TypeError(f"cannot convert {type(x).__name__} to AlgNumber")


def zeta(n: int, j: int = 1) -> AlgNumber:
    """zeta_n^j with zeta_n = exp(2 pi i / n)."""
    if n % 2:
        n, j = 2 * n, 2 * j
    return AlgNumber(n, _monomial(n, j))


@lru_cache(maxsize=None)
def _sqrt_prime(p: int) -> AlgNumber:
    if p == 2:
        # sqrt 2 = zeta8 + zeta8^-1
        return zeta(8) + zeta(8, -1)
    g = AlgNumber.rational(0)
    for a in range(1, p):
        leg = pow(a, (p - 1) // 2, p)
        g = g + (zeta(p, a) if leg == 1 else -zeta(p, a))
    # g^2 = (-1)^((p-1)/2) p
    r = g if p % 4 == 1 else g * zeta(4, -1)
    if r.to_complex().real < 0:
        r = -r
    return r


@lru_cache(maxsize=None)
def sqrt_int(n: int) -> AlgNumber:
    """The positive square root of a positive integer n."""
    if n <= 0:
        raise ValueError("sqrt_int expects a positive integer")
    out = AlgNumber.rational(1)
    for p, e in _factor(n).items():
        out = out * AlgNumber.rational(p ** (e // 2))
        if e % 2:
            out = out * _sqrt_prime(p)
    return out


def sqrt_rational(c) -> AlgNumber:
    """Principal square root of a rational (i*sqrt|c| for negative c)."""
    c = Fraction(c)
    if c == 0:
        return AlgNumber.rational(0)
    sign = zeta(4) if c < 0 else AlgNumber.rational(1)
    c = abs(c)
    return sign * sqrt_int(c.numerator * c.denominator) / c.denominator


ZERO = AlgNumber.rational(0)
ONE = AlgNumber.rational(1)
