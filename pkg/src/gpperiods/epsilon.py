"""Exact tame epsilon factors at s = 1/2 (Langlands' normalization).

The additive character psi_F has level 0: trivial on O_F, nontrivial on
p_F^-1, with residual character y -> zeta_p^Tr(y).  On an extension L we use
psi_L = psi_F o Tr_{L/F}, whose level is the different exponent e - 1.

For a character chi of L^x with value u at w_L:

    a(chi) = 0:  eps(chi) = u^n
    a(chi) = 1:  eps(chi) = u^(1+n) q_L^-1/2 G(chi^-1, psi_t)

where n = n(psi_L), G is the Gauss sum over the residue field and
psi_t(y) = zeta_p^Tr(t y) with t = e / nu (the residue of w_L^-e w_F^-1 times
the trace).  Both the duality identity eps(chi) eps(chi^-1) = chi(-1) and
the unramified twist rule eps(chi mu) = eps(chi) mu(w)^(a + n) hold; the
test suite checks them exhaustively for small q.
"""

from __future__ import annotations

import math
from functools import lru_cache

import flint

from .algnum import ONE, AlgNumber, _modulus, sqrt_int
from .localfield import (
    ExtKind,
    GPError,
    LocalField,
    MultChar,
    UnsupportedCase,
    cubic_norm_characters,
    quadratic_character,
    trivial_character,
)
from .weildeligne import CharSp, Induced, WDRep


class NotSelfDual(GPError):
    """An epsilon value expected to be +-1 is not."""


def psi_level(fld: LocalField) -> int:
    return fld.different_exponent


def _twist_log(fld: LocalField) -> int | None:
    """log of the residual twist t = e / nu, or None when t = 1."""
    if fld.base is None or fld.kind == ExtKind.UNRAMIFIED:
        return None
    res = fld.residue
    return (res.log_int(fld.ram_index) - fld.nu_log) % res.order


@lru_cache(maxsize=4096)
def _gauss(p: int, f_total: int, base_f: int, dd: int, k: int, twist_log: int | None) -> AlgNumber:
    from .residue import compatible_extension

    res = compatible_extension(p, base_f, dd)
    n = res.order
    m = math.lcm(p, n)
    step_chi, step_psi = m // n, m // p
    counts = [0] * m
    shift = twist_log or 0
    for j in range(n):
        e = (k * j * step_chi + res.trace[(j + shift) % n] * step_psi) % m
        counts[e] += 1
    poly = flint.fmpq_poly(counts) % _modulus(m)
    return AlgNumber(m, poly)


def gauss_sum(fld: LocalField, k: int, twist_log: int | None = None) -> AlgNumber:
    """sum over x in F_{q_L}^x of chibar(x) psibar(t x), chibar(g^j) = zeta^(k j).

    The residual additive character is y -> zeta_p^Tr(y); ``twist_log`` is
    log_g(t) (None for t = 1).
    """
    k %= fld.q - 1
    return _gauss(fld.p, fld.f * fld.res_degree, fld.f, fld.res_degree, k, twist_log)


def epsilon_character(chi: MultChar) -> AlgNumber:
    """eps(chi, psi_L, 1/2) for a tame character chi of L^x."""
    fld = chi.field
    n = psi_level(fld)
    if chi.is_unramified:
        return chi.u**n
    g = gauss_sum(fld, -chi.k, _twist_log(fld))
    return chi.u ** (1 + n) * g / sqrt_int(fld.q)


def _expansion(ext: LocalField) -> list[MultChar]:
    """Characters of F^x whose sum is Ind_{L}^{F}(1)."""
    if ext.degree == 2:
        return [trivial_character(ext.base), quadratic_character(ext)]
    if not ext.is_galois:
        raise UnsupportedCase("lambda factor for a non-Galois cubic extension")
    return cubic_norm_characters(ext)


@lru_cache(maxsize=256)
def lambda_factor(ext: LocalField) -> AlgNumber:
    """Langlands' constant lambda(L/F, psi) = eps(Ind 1_L) / eps_L(1_L)."""
    if ext.base is None:
        raise UnsupportedCase("lambda factor needs an extension")
    out = ONE
    for mu in _expansion(ext):
        out = out * epsilon_character(mu)
    return out / epsilon_character(trivial_character(ext))


def _eps_charsp(chi: MultChar, n: int) -> AlgNumber:
    # eps of the semisimplification is eps(chi)^n (the |.|-shifts cancel);
    # det(-Frob | V^I / ker N) at s = 1/2 contributes (-u)^(n-1) if unramified
    out = epsilon_character(chi) ** n
    if chi.is_unramified and n > 1:
        out = out * (-chi.u) ** (n - 1)
    return out


def _eps_atom(atom) -> AlgNumber:
    if isinstance(atom, CharSp):
        return _eps_charsp(atom.chi, atom.n)
    if isinstance(atom, Induced):
        return lambda_factor(atom.ext) ** atom.n * _eps_charsp(atom.theta, atom.n)
    if atom.eps_sign is None:
        raise UnsupportedCase(f"supply supercuspidal epsilon data: opaque atom {atom.label} has no eps_sign")
    return AlgNumber.rational(atom.eps_sign)


def epsilon_wd(rho: WDRep) -> AlgNumber:
    """eps(rho, psi, 1/2) as a product over atoms."""
    out = ONE
    for a in rho.atoms:
        out = out * _eps_atom(a)
    return out


def epsilon_sign(x: AlgNumber) -> int:
    if x == 1:
        return 1
    if x == -1:
        return -1
    raise NotSelfDual(f"epsilon value {x} is not exactly +1 or -1 (not self-dual-normalized)")
