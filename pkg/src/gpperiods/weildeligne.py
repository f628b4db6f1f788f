"""Frobenius-semisimple Weil-Deligne representations as formal sums of atoms.

Atoms:

* ``CharSp(chi, n)``: chi (x) sp(n), a character twist of the n-dimensional
  special representation;
* ``Induced(L, theta, n)``: Ind_{W_L}^{W_F}(theta) (x) sp(n) for a tame
  extension L/F;
* ``Opaque``: an irreducible parameter we know nothing about beyond the data
  supplied with it (dimension, determinant, epsilon sign).

Induced atoms whose character is Galois-invariant are split into character
atoms when the needed root of the uniformizer value is available, so that
equal representations compare equal.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .algnum import ONE, AlgNumber, as_alg
from .localfield import (
    ExtKind,
    LocalField,
    MultChar,
    UnsupportedCase,
    ValidationError,
    cubic_norm_characters,
    galois_conjugate,
    norm_lift,
    quadratic_character,
    restrict_character,
    trivial_character,
)


class StructuralPathRequired(UnsupportedCase):
    """Raised when an opaque parameter blocks the constructive computation."""


@dataclass(frozen=True)
class CharSp:
    chi: MultChar
    n: int = 1

    @property
    def dim(self) -> int:
        return self.n


@dataclass(frozen=True, eq=False)
class Induced:
    ext: LocalField
    theta: MultChar
    n: int = 1

    @property
    def dim(self) -> int:
        return self.ext.degree * self.n

    def orbit(self) -> frozenset:
        if not self.ext.is_galois:
            return frozenset([self.theta])
        return frozenset(galois_conjugate(self.theta, i) for i in range(self.ext.degree))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Induced)
            and self.ext == other.ext
            and self.n == other.n
            and self.orbit() == other.orbit()
        )

    def __hash__(self) -> int:
        return hash((self.ext, self.n, self.orbit()))


@dataclass(frozen=True)
class Opaque:
    label: str
    dim: int
    det: MultChar | None = None
    eps_sign: int | None = None


Atom = CharSp | Induced | Opaque


def clebsch_gordan(m: int, n: int) -> list[int]:
    """sp(m) (x) sp(n) = sum of sp(m + n - 1 - 2k), k < min(m, n)."""
    return [m + n - 1 - 2 * k for k in range(min(m, n))]


def _norm_root(theta: MultChar, ext: LocalField) -> MultChar | None:
    """Some mu on F^x with mu o Nm = theta, if theta is invariant and we can find it."""
    F = ext.base
    if ext.kind == ExtKind.UNRAMIFIED:
        c = (ext.q - 1) // (F.q - 1)
        if theta.k % c:
            return None
        r = theta.u.root(ext.degree)
        if r is None:
            return None
        mu = MultChar(F, theta.k // c, r)
    else:
        e = ext.ram_index
        if theta.k % e:
            return None
        mu0 = MultChar(F, theta.k // e, ONE)
        lifted = norm_lift(mu0, ext)
        # lifted.u = mu0(Nm w); fix the uniformizer value so mu o Nm = theta
        r = (theta.u / lifted.u)
        mu = MultChar(F, theta.k // e, r)
    if norm_lift(mu, ext) != theta:
        return None
    return mu


def _expand(atom: Atom) -> list[Atom]:
    if not isinstance(atom, Induced):
        return [atom]
    ext, theta = atom.ext, atom.theta
    if not ext.is_galois or galois_conjugate(theta) != theta:
        return [atom]
    mu = _norm_root(theta, ext)
    if mu is None:
        return [atom]
    if ext.degree == 2:
        twists = [trivial_character(ext.base), quadratic_character(ext)]
    else:
        twists = cubic_norm_characters(ext)
    return [CharSp(mu * t, atom.n) for t in twists]


@dataclass(frozen=True, eq=False)
class WDRep:
    """A formal direct sum of atoms over a base field."""

    field: LocalField
    atoms: tuple = ()

    def __post_init__(self):
        out = []
        for a in self.atoms:
            if isinstance(a, CharSp) and a.chi.field != self.field:
                raise ValidationError("character atom over the wrong field")
            if isinstance(a, Induced) and a.ext.base != self.field:
                raise ValidationError("induced atom from a field not over the base")
            if isinstance(a, (CharSp, Induced)) and a.n < 1:
                raise ValidationError("sp(n) needs n >= 1")
            out.extend(_expand(a))
        object.__setattr__(self, "atoms", tuple(sorted(out, key=_atom_key)))

    @property
    def dim(self) -> int:
        return sum(a.dim for a in self.atoms)

    def has_opaque(self) -> bool:
        return any(isinstance(a, Opaque) for a in self.atoms)

    def __add__(self, other: WDRep) -> WDRep:
        if other.field != self.field:
            raise ValidationError("direct sum over different fields")
        return WDRep(self.field, self.atoms + other.atoms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WDRep)
            and self.field == other.field
            and Counter(self.atoms) == Counter(other.atoms)
        )

    def __hash__(self) -> int:
        return hash((self.field, frozenset(Counter(self.atoms).items())))

    def __str__(self) -> str:
        return " + ".join(_atom_str(a) for a in self.atoms) or "0"

    __repr__ = __str__


def _atom_key(a: Atom) -> tuple:
    if isinstance(a, CharSp):
        return (0, a.n, a.chi.k, a.chi.u.sort_key())
    if isinstance(a, Induced):
        return (1, a.n, str(a.ext), min((t.k, t.u.sort_key()) for t in a.orbit()))
    return (2, a.label)


def _atom_str(a: Atom) -> str:
    if isinstance(a, CharSp):
        base = f"chi(k={a.chi.k},u={a.chi.u})"
        return base if a.n == 1 else f"{base}.sp({a.n})"
    if isinstance(a, Induced):
        base = f"Ind[{a.ext}](k={a.theta.k},u={a.theta.u})"
        return base if a.n == 1 else f"{base}.sp({a.n})"
    return f"<{a.label}:{a.dim}>"


# -- operations --------------------------------------------------------------


def character_rep(chi: MultChar, n: int = 1) -> WDRep:
    return WDRep(chi.field, (CharSp(chi, n),))


def sp(n: int, fld: LocalField) -> WDRep:
    if n < 1:
        raise ValidationError("sp(n) needs n >= 1")
    return WDRep(fld, (CharSp(trivial_character(fld), n),))


def frobenius_exponents(n: int) -> list[Fraction]:
    """Exponents e with Frobenius eigenvalues q^e on sp(n), increasing."""
    return [Fraction(1 - n, 2) + j for j in range(n)]


def sp_eigenvalues(n: int, fld: LocalField) -> list[AlgNumber]:
    s = fld.sqrt_q()
    return [s ** int(2 * e) for e in frobenius_exponents(n)]


def _tensor_atoms(a: Atom, b: Atom) -> list[Atom]:
    if isinstance(a, Opaque) or isinstance(b, Opaque):
        raise StructuralPathRequired("tensor with an opaque parameter: structural path required")
    if isinstance(a, Induced) and isinstance(b, CharSp):
        a, b = b, a
    if isinstance(a, CharSp) and isinstance(b, CharSp):
        return [CharSp(a.chi * b.chi, m) for m in clebsch_gordan(a.n, b.n)]
    if isinstance(a, CharSp) and isinstance(b, Induced):
        theta = b.theta * norm_lift(a.chi, b.ext)
        return [Induced(b.ext, theta, m) for m in clebsch_gordan(a.n, b.n)]
    # Induced x Induced: Mackey over a common cyclic extension
    if a.ext != b.ext:
        raise UnsupportedCase("tensor of parameters induced from different extensions")
    if not a.ext.is_galois:
        raise UnsupportedCase("Mackey expansion needs a Galois extension")
    out = []
    for i in range(a.ext.degree):
        theta = a.theta * galois_conjugate(b.theta, i)
        out.extend(Induced(a.ext, theta, m) for m in clebsch_gordan(a.n, b.n))
    return out


def wd_tensor(r1: WDRep, r2: WDRep) -> WDRep:
    if r1.field != r2.field:
        raise ValidationError("tensor product over different base fields")
    atoms = []
    for a in r1.atoms:
        for b in r2.atoms:
            atoms.extend(_tensor_atoms(a, b))
    return WDRep(r1.field, tuple(atoms))


def wd_twist(rho: WDRep, chi: MultChar) -> WDRep:
    return wd_tensor(rho, character_rep(chi))


def wd_dual(rho: WDRep) -> WDRep:
    atoms = []
    for a in rho.atoms:
        if isinstance(a, CharSp):
            atoms.append(CharSp(a.chi.inverse(), a.n))
        elif isinstance(a, Induced):
            atoms.append(Induced(a.ext, a.theta.inverse(), a.n))
        else:
            det = a.det.inverse() if a.det is not None else None
            eps = None
            if a.eps_sign is not None and a.det is not None:
                from .localfield import evaluate_at_minus_one

                # eps(rho) eps(rho^v) = det(rho)(-1)
                eps = int(evaluate_at_minus_one(a.det).to_fraction()) * a.eps_sign
            atoms.append(Opaque(a.label + "^v", a.dim, det, eps))
    return WDRep(rho.field, tuple(atoms))


def _atom_det(a: Atom, fld: LocalField) -> MultChar:
    if isinstance(a, CharSp):
        return a.chi**a.n
    if isinstance(a, Induced):
        if a.ext.degree == 2:
            d1 = quadratic_character(a.ext) * restrict_character(a.theta, fld)
        elif a.ext.is_galois:
            # cyclic cubic: the permutation character of Z/3 has trivial sign
            d1 = restrict_character(a.theta, fld)
        else:
            raise UnsupportedCase("determinant of induction from a non-Galois cubic")
        return d1**a.n
    if a.det is None:
        raise ValidationError(f"opaque atom {a.label} carries no determinant")
    return a.det


def wd_det(rho: WDRep) -> MultChar:
    out = trivial_character(rho.field)
    for a in rho.atoms:
        out = out * _atom_det(a, rho.field)
    return out


# -- L-factors -----------------------------------------------------------------


def poly_mul(a: list[AlgNumber], b: list[AlgNumber]) -> list[AlgNumber]:
    out = [as_alg(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _inertia_factor(a: Atom, fld: LocalField, use_monodromy: bool) -> list[AlgNumber]:
    """det(1 - Frob X | V^I) (or on ker N) for one atom, in X = q_F^-s."""
    if isinstance(a, Opaque):
        return [ONE]
    if isinstance(a, CharSp):
        if not a.chi.is_unramified:
            return [ONE]
        s = fld.sqrt_q()
        exps = frobenius_exponents(a.n)[:1] if use_monodromy else frobenius_exponents(a.n)
        out = [ONE]
        for e in exps:
            out = poly_mul(out, [ONE, -(a.chi.u * s ** int(2 * e))])
        return out
    ext, theta = a.ext, a.theta
    if not theta.is_unramified:
        return [ONE]
    if ext.kind == ExtKind.RAMIFIED:
        # invariant unramified theta is always expanded; only a non-Galois cubic lands here
        raise UnsupportedCase("L-factor of an induction from a non-Galois cubic")
    d = ext.degree
    s = ext.sqrt_q()
    exps = frobenius_exponents(a.n)[:1] if use_monodromy else frobenius_exponents(a.n)
    out = [ONE]
    for e in exps:
        out = poly_mul(out, [ONE] + [as_alg(0)] * (d - 1) + [-(theta.u * s ** int(2 * e))])
    return out


def l_polynomial(rho: WDRep) -> list[AlgNumber]:
    """Coefficients of 1/L(rho, s) = det(1 - Frob X | (ker N)^I)."""
    out = [ONE]
    for a in rho.atoms:
        out = poly_mul(out, _inertia_factor(a, rho.field, True))
    return out


def frobenius_charpoly(rho: WDRep) -> list[AlgNumber]:
    """det(1 - Frob X | V^I): reciprocal roots are the Frobenius eigenvalues on V^I."""
    out = [ONE]
    for a in rho.atoms:
        out = poly_mul(out, _inertia_factor(a, rho.field, False))
    return out
