"""Whittaker-type representations of GL_2(L) and their L-parameters.

The taxonomy is small: irreducible principal series, Sigma-twists (the
reducible principal series with Steinberg sub and one-dimensional quotient),
Steinberg twists, and supercuspidals.  Supercuspidals are either dihedral
with explicit tame data (then the parameter is an induced atom) or opaque
envelopes whose invariants are supplied by the caller.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .localfield import (
    LocalField,
    MultChar,
    ValidationError,
    galois_conjugate,
    norm_power,
)
from .weildeligne import CharSp, Induced, Opaque, WDRep, wd_det


class Kind(str, Enum):
    PRINCIPAL_SERIES = "principal_series"
    SIGMA = "sigma_twist"
    STEINBERG = "steinberg_twist"
    SUPERCUSPIDAL = "supercuspidal"


@dataclass(frozen=True)
class WhittakerRep:
    field: LocalField
    kind: Kind
    alpha: MultChar | None = None
    beta: MultChar | None = None
    chi: MultChar | None = None
    # supercuspidal envelope
    label: str | None = None
    omega: MultChar | None = None
    eps_sign: int | None = None
    eps_twists: tuple = ()
    dihedral: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        for c in (self.alpha, self.beta, self.chi, self.omega):
            if c is not None and c.field != self.field:
                raise ValidationError("character lives on the wrong field")
        if self.eps_sign not in (None, 1, -1):
            raise ValidationError("eps_sign must be +1 or -1")

    @property
    def is_reducible(self) -> bool:
        return self.kind == Kind.SIGMA

    def __str__(self) -> str:
        k = self.kind
        if k == Kind.PRINCIPAL_SERIES:
            return f"I({_c(self.alpha)}, {_c(self.beta)})"
        if k == Kind.SIGMA:
            return f"Sigma x {_c(self.chi)}"
        if k == Kind.STEINBERG:
            return f"St x {_c(self.chi)}"
        return f"sc[{self.label}]"


def _c(chi: MultChar) -> str:
    return f"({chi.k},{chi.u})"


def principal_series(alpha: MultChar, beta: MultChar) -> WhittakerRep:
    fld = alpha.field
    ratio = alpha * beta.inverse()
    for s in (2, -2):
        if ratio == norm_power(fld, s):
            raise ValidationError("alpha/beta = |.|^(+-1): reducible, use sigma_twist")
    return WhittakerRep(fld, Kind.PRINCIPAL_SERIES, alpha=alpha, beta=beta)


def sigma_twist(chi: MultChar) -> WhittakerRep:
    return WhittakerRep(chi.field, Kind.SIGMA, chi=chi)


def steinberg_twist(chi: MultChar) -> WhittakerRep:
    return WhittakerRep(chi.field, Kind.STEINBERG, chi=chi)


def supercuspidal(fld: LocalField, label: str, omega: MultChar | None = None,
                  eps_sign: int | None = None, eps_twists=(), dihedral=None) -> WhittakerRep:
    """An opaque supercuspidal, or a dihedral one when ``dihedral=(E', theta)``.

    ``eps_twists`` lists pairs (mu, eps(sigma x mu)) the caller knows.
    """
    if dihedral is not None:
        ext, theta = dihedral
        if ext.base != fld or ext.degree != 2:
            raise ValidationError("dihedral data must come from a quadratic extension")
        if galois_conjugate(theta) == theta:
            raise ValidationError("dihedral character is Galois-invariant: not supercuspidal")
        from .weildeligne import _atom_det

        omega_d = _atom_det(Induced(ext, theta), fld)
        if omega is not None and omega != omega_d:
            raise ValidationError("supplied central character disagrees with the dihedral data")
        omega = omega_d
    return WhittakerRep(fld, Kind.SUPERCUSPIDAL, label=label, omega=omega,
                        eps_sign=eps_sign, eps_twists=tuple(eps_twists), dihedral=dihedral)


def langlands_parameter(pi: WhittakerRep) -> WDRep:
    fld = pi.field
    if pi.kind == Kind.PRINCIPAL_SERIES:
        atoms = (CharSp(pi.alpha), CharSp(pi.beta))
    elif pi.kind == Kind.SIGMA:
        # Frobenius acts by diag(q^1/2, q^-1/2), no monodromy
        atoms = (CharSp(pi.chi * norm_power(fld, 1)), CharSp(pi.chi * norm_power(fld, -1)))
    elif pi.kind == Kind.STEINBERG:
        atoms = (CharSp(pi.chi, 2),)
    elif pi.dihedral is not None:
        ext, theta = pi.dihedral
        atoms = (Induced(ext, theta),)
    else:
        atoms = (Opaque(pi.label or "sc", 2, pi.omega, pi.eps_sign),)
    return WDRep(fld, atoms)


def central_character(pi: WhittakerRep) -> MultChar:
    if pi.kind == Kind.PRINCIPAL_SERIES:
        return pi.alpha * pi.beta
    if pi.kind in (Kind.SIGMA, Kind.STEINBERG):
        return pi.chi * pi.chi
    if pi.omega is None:
        raise ValidationError(f"supercuspidal {pi.label} needs its central character")
    return pi.omega


def check_central(pi: WhittakerRep) -> None:
    """The central character must be the determinant of the parameter."""
    if pi.kind == Kind.SUPERCUSPIDAL and pi.dihedral is None:
        return
    if wd_det(langlands_parameter(pi)) != central_character(pi):
        raise AssertionError("central character differs from det of the parameter")


def jl_exists(pi: WhittakerRep) -> bool:
    return pi.kind in (Kind.STEINBERG, Kind.SUPERCUSPIDAL)


def twist(pi: WhittakerRep, mu: MultChar) -> WhittakerRep:
    """pi x (mu o det)."""
    if pi.kind == Kind.PRINCIPAL_SERIES:
        return principal_series(pi.alpha * mu, pi.beta * mu)
    if pi.kind == Kind.SIGMA:
        return sigma_twist(pi.chi * mu)
    if pi.kind == Kind.STEINBERG:
        return steinberg_twist(pi.chi * mu)
    if pi.dihedral is not None:
        from .localfield import norm_lift

        ext, theta = pi.dihedral
        return supercuspidal(pi.field, f"{pi.label}*mu", dihedral=(ext, theta * norm_lift(mu, ext)))
    # opaque: shift the known twisted signs
    known = dict(eps_for_twists(pi))
    shifted = tuple((nu, s) for nu0, s in known.items() for nu in [nu0 * mu.inverse()])
    base = known.get(mu)
    return WhittakerRep(pi.field, Kind.SUPERCUSPIDAL, label=f"{pi.label}*mu",
                        omega=pi.omega * mu * mu if pi.omega is not None else None,
                        eps_sign=base, eps_twists=shifted)


def eps_for_twists(pi: WhittakerRep) -> list:
    """Known (mu, eps(sigma x mu)) pairs for an opaque supercuspidal."""
    from .localfield import trivial_character

    out = list(pi.eps_twists)
    if pi.eps_sign is not None:
        out.append((trivial_character(pi.field), pi.eps_sign))
    return out
