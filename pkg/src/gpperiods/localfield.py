"""p-adic base fields, their tame extensions, and tame multiplicative characters.

A character of L^x is pinned down by two pieces of data:

* its restriction to the units, which (conductor <= 1) factors through the
  residue field F_{q_L}^x and is recorded by an exponent k: chi(g_L) =
  zeta_{q_L - 1}^k for the fixed residue generator g_L;
* its value u at the chosen uniformizer of L.

Residue generators are chosen compatibly along extensions (the norm of g_L
is g_F), and ramified extensions are presented as L = F(w) with
w^e = nu * w_F, where nu is 1 or the residue generator of F (the
``presentation`` flag).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

from .algnum import ONE, AlgNumber, as_alg, sqrt_int, zeta
from .residue import ResidueField, compatible_extension


class GPError(Exception):
    """Base class for errors raised by this package."""


class ValidationError(GPError):
    """Input violates a precondition (bad data, failed central condition)."""


class UnsupportedCase(GPError):
    """Input is outside the supported tame / non-opaque territory."""


class LevelTooSmall(UnsupportedCase):
    """A root of unity needed by a character is missing from the session level."""


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


def default_level(p: int, f: int) -> int:
    q = p**f
    return math.lcm(4 * p, 3, q * q - 1)


class ExtKind(str, Enum):
    UNRAMIFIED = "unramified"
    RAMIFIED = "ramified"


@dataclass(frozen=True)
class LocalField:
    """A p-adic field: either a base field F or a tame extension of one.

    For a base field ``base`` is None and ``degree`` is 1.  ``level`` is the
    session cyclotomic level N shared by the whole tower.
    """

    p: int
    f: int = 1
    level: int = 0
    base: LocalField | None = None
    degree: int = 1
    kind: ExtKind | None = None
    presentation: str = "square"

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValidationError(f"residue characteristic {self.p} is not prime")
        if self.p == 2:
            raise ValidationError("residue characteristic 2 is not supported")
        if self.f < 1:
            raise ValidationError("residue degree must be positive")
        if self.level == 0:
            object.__setattr__(self, "level", default_level(self.p, self.f))
        if self.base is not None:
            if self.degree not in (2, 3):
                raise ValidationError("extensions must have degree 2 or 3")
            if self.kind == ExtKind.RAMIFIED and math.gcd(self.degree, self.p) != 1:
                raise ValidationError("ramified extension is wild")
            if self.presentation not in ("square", "nonsquare"):
                raise ValidationError("presentation must be 'square' or 'nonsquare'")
            if self.base.base is not None:
                raise ValidationError("towers of depth > 1 are not supported")

    # -- shape ------------------------------------------------------------
    @property
    def is_base(self) -> bool:
        return self.base is None

    @property
    def root(self) -> LocalField:
        return self if self.base is None else self.base

    @property
    def q_base(self) -> int:
        return self.p**self.f

    @property
    def ram_index(self) -> int:
        return self.degree if self.kind == ExtKind.RAMIFIED else 1

    @property
    def res_degree(self) -> int:
        return self.degree if self.kind == ExtKind.UNRAMIFIED else 1

    @property
    def q(self) -> int:
        """Residue field size of this field."""
        return self.q_base**self.res_degree

    @property
    def different_exponent(self) -> int:
        return self.ram_index - 1

    @cached_property
    def residue(self) -> ResidueField:
        return compatible_extension(self.p, self.f, self.res_degree)

    @property
    def nu_log(self) -> int:
        """log of the unit nu in w^e = nu * w_F (residue of F)."""
        return 0 if self.presentation == "square" else 1

    @property
    def is_galois(self) -> bool:
        if self.base is None:
            return True
        if self.degree == 2 or self.kind == ExtKind.UNRAMIFIED:
            return True
        return self.q_base % 3 == 1

    def extension(self, degree: int, kind: str | ExtKind, presentation: str = "square") -> LocalField:
        if self.base is not None:
            raise ValidationError("extensions are only built over a base field")
        kind = ExtKind(kind)
        return LocalField(self.p, self.f, self.level, self, degree, kind, presentation)

    def __str__(self) -> str:
        if self.base is None:
            return f"F(q={self.q})"
        tag = "unr" if self.kind == ExtKind.UNRAMIFIED else f"ram[{self.presentation}]"
        return f"L{self.degree}{tag}/F(q={self.q_base})"

    # numbers attached to the field
    def sqrt_q(self) -> AlgNumber:
        return sqrt_int(self.q)

    def unit_root_of_unity(self, k: int, j: int) -> AlgNumber:
        """chi(g^j) for the unit part k of a character of this field."""
        n = self.q - 1
        g = math.gcd(k, n)
        order = n // g
        if self.level % order:
            raise LevelTooSmall(
                f"tame exponent {k} on F_{self.q}^x has order {order}, "
                f"which does not divide the session level {self.level}: raise N"
            )
        return zeta(order, (k // g) * j)


@dataclass(frozen=True)
class MultChar:
    """A tame character of L^x: unit exponent k mod (q_L - 1), value u at w_L."""

    field: LocalField
    k: int
    u: AlgNumber

    def __post_init__(self):
        object.__setattr__(self, "k", self.k % (self.field.q - 1))
        object.__setattr__(self, "u", as_alg(self.u))

    @property
    def conductor(self) -> int:
        return 0 if self.k == 0 else 1

    @property
    def is_unramified(self) -> bool:
        return self.k == 0

    def is_trivial(self) -> bool:
        return self.k == 0 and self.u == ONE

    def is_quadratic(self) -> bool:
        """Nontrivial with trivial square."""
        return not self.is_trivial() and (self * self).is_trivial()

    def unit_order(self) -> int:
        n = self.field.q - 1
        return n // math.gcd(self.k, n)

    def on_unit_log(self, j: int) -> AlgNumber:
        return self.field.unit_root_of_unity(self.k, j)

    def __mul__(self, other: MultChar) -> MultChar:
        if other.field != self.field:
            raise ValidationError("characters live on different fields")
        return MultChar(self.field, self.k + other.k, self.u * other.u)

    def inverse(self) -> MultChar:
        return MultChar(self.field, -self.k, self.u.inverse())

    def __pow__(self, e: int) -> MultChar:
        return MultChar(self.field, self.k * e, self.u**e)

    def __str__(self) -> str:
        return f"chi[k={self.k}, u={self.u}]@{self.field}"


# -- operations ------------------------------------------------------------


def build_character(fld: LocalField, k: int, u=1) -> MultChar:
    u = as_alg(u)
    if u.is_zero():
        raise ValidationError("value at the uniformizer must be nonzero")
    chi = MultChar(fld, k, u)
    # validate the root of unity is available at the session level
    fld.unit_root_of_unity(chi.k, 1)
    return chi


def trivial_character(fld: LocalField) -> MultChar:
    return MultChar(fld, 0, ONE)


def unramified_character(fld: LocalField, u) -> MultChar:
    return build_character(fld, 0, u)


def norm_power(fld: LocalField, twice_s: int) -> MultChar:
    """|.|_L^(twice_s / 2); |w_L| = q_L^-1."""
    return MultChar(fld, 0, fld.sqrt_q() ** (-twice_s))


def evaluate_at_minus_one(chi: MultChar) -> AlgNumber:
    # -1 = g^((q-1)/2) in the residue field
    return as_alg(-1 if chi.k % 2 else 1)


def _nu_value(chi: MultChar) -> AlgNumber:
    """chi(nu) for the presentation unit nu of chi's (ramified) field."""
    return chi.on_unit_log(chi.field.nu_log)


def restrict_character(chi: MultChar, base: LocalField) -> MultChar:
    """chi restricted to base^x."""
    L = chi.field
    if L == base:
        return chi
    if L.base != base:
        raise ValidationError(f"{L} is not a recorded extension of {base}")
    if L.kind == ExtKind.UNRAMIFIED:
        # g_F = Nm(g_L) = g_L^((q^d-1)/(q-1)), so chi(g_F) = zeta_{q-1}^k; w_F = w_L
        return MultChar(base, chi.k, chi.u)
    # totally ramified: same residue field; w_F = w_L^e / nu
    e = L.ram_index
    return MultChar(base, chi.k, chi.u**e / _nu_value(chi))


def norm_lift(mu: MultChar, ext: LocalField) -> MultChar:
    """mu o Nm_{L/F} as a character of L^x."""
    if ext.base != mu.field:
        raise ValidationError(f"{ext} is not an extension of {mu.field}")
    if ext.kind == ExtKind.UNRAMIFIED:
        c = (ext.q - 1) // (mu.field.q - 1)
        return MultChar(ext, mu.k * c, mu.u**ext.degree)
    e = ext.ram_index
    # Nm(w_L) = (-1)^(e+1) nu w_F; residually Nm(x) = x^e on units
    sign = evaluate_at_minus_one(mu) ** (e + 1)
    nu = mu.on_unit_log(ext.nu_log)
    return MultChar(ext, mu.k * e, sign * nu * mu.u)


def galois_conjugate(chi: MultChar, power: int = 1) -> MultChar:
    """chi composed with sigma^power for the generator sigma of Gal(L/F).

    Unramified L: sigma is Frobenius, x -> x^q on the residue field and it
    fixes w_L.  Ramified quadratic: sigma(w) = -w and sigma is trivial on
    the residue field.
    """
    L = chi.field
    if L.base is None:
        raise ValidationError("conjugation needs a character of an extension")
    if not L.is_galois:
        raise UnsupportedCase(f"{L} is not Galois")
    if L.kind == ExtKind.UNRAMIFIED:
        return MultChar(L, chi.k * pow(L.q_base, power % L.degree), chi.u)
    if L.degree == 2:
        return MultChar(L, chi.k, chi.u * evaluate_at_minus_one(chi) ** (power % 2))
    # cyclic tame cubic: sigma(w) = zeta3 w with zeta3 a unit in F
    z3_log = (L.q_base - 1) // 3
    return MultChar(L, chi.k, chi.u * chi.on_unit_log(z3_log * (power % 3)))


def conjugate_character(chi: MultChar) -> MultChar:
    L = chi.field
    if L.base is None or L.degree != 2:
        raise ValidationError("conjugation is defined for quadratic extensions")
    return galois_conjugate(chi, 1)


def quadratic_character(ext: LocalField) -> MultChar:
    """omega_{E/F}: the character of F^x with kernel Nm(E^x)."""
    F = ext.base
    if ext.degree != 2:
        raise ValidationError("omega_{E/F} needs a quadratic extension")
    if ext.kind == ExtKind.UNRAMIFIED:
        return MultChar(F, 0, as_alg(-1))
    # Nm(w) = -nu w_F lies in the kernel, so omega(w_F) = omega(-nu)
    half = (F.q - 1) // 2
    leg = MultChar(F, half, ONE)
    val = evaluate_at_minus_one(leg) * leg.on_unit_log(ext.nu_log)
    return MultChar(F, half, val)


def cubic_norm_characters(ext: LocalField) -> list[MultChar]:
    """Characters of F^x trivial on Nm(K^x), K/F cyclic cubic."""
    F = ext.base
    if ext.degree != 3 or not ext.is_galois:
        raise UnsupportedCase("norm characters need a cyclic cubic extension")
    if ext.kind == ExtKind.UNRAMIFIED:
        return [MultChar(F, 0, zeta(3, j)) for j in range(3)]
    third = (F.q - 1) // 3
    # Nm(w) = nu w_F, so mu(w_F) = mu(nu)^-1 for mu of order 3 on units
    out = []
    for j in range(3):
        mu0 = MultChar(F, third * j, ONE)
        out.append(MultChar(F, third * j, mu0.on_unit_log(ext.nu_log).inverse()))
    return out


class Shape(str, Enum):
    SPLIT3 = "split3"
    QUAD_TIMES_F = "quad_times_f"
    CUBIC_FIELD = "cubic_field"


@dataclass(frozen=True)
class EtaleCubicAlgebra:
    shape: Shape
    base: LocalField
    ext: LocalField | None = None
    resolvent: MultChar | None = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "shape", Shape(self.shape))
        if self.shape == Shape.SPLIT3:
            if self.ext is not None:
                raise ValidationError("split algebra has no field factor")
        else:
            want = 2 if self.shape == Shape.QUAD_TIMES_F else 3
            if self.ext is None or self.ext.degree != want or self.ext.base != self.base:
                raise ValidationError(f"{self.shape.value} needs a degree-{want} extension of the base")
        if self.resolvent is not None and not self.resolvent.is_quadratic():
            raise ValidationError("resolvent character must be quadratic")

    @property
    def component_fields(self) -> list[LocalField]:
        if self.shape == Shape.SPLIT3:
            return [self.base] * 3
        if self.shape == Shape.QUAD_TIMES_F:
            return [self.ext, self.base]
        return [self.ext]


def discriminant_character(A: EtaleCubicAlgebra) -> MultChar:
    """omega_A: the quadratic character attached to disc(A)."""
    if A.shape == Shape.SPLIT3:
        return trivial_character(A.base)
    if A.shape == Shape.QUAD_TIMES_F:
        return quadratic_character(A.ext)
    if A.ext.is_galois:
        return trivial_character(A.base)
    if A.resolvent is None:
        raise ValidationError("non-Galois cubic field needs its resolvent character")
    return A.resolvent
