"""Asai (multiplicative induction) of GL_2 parameters along a cubic etale algebra.

For a field factor L/F of degree d the Asai parameter of rho is the tensor
induction of rho from W_L to W_F.  On the atom calculus this comes down to
three facts, each checked against explicit matrices in the test suite:

* a character chi tensor-induces to chi|_F (transfer = inclusion F^x in L^x);
* for rho = a + b a sum of two characters the basis vectors of rho^(x d)
  split into Galois orbits: the constant ones give a|_F, b|_F and each free
  orbit gives an induced character;
* rho = chi sp(2) is a twist of a parameter restricted from F, so As is
  chi|_F times sp(2)^(x d) with Gal(L/F) permuting the factors.
"""

from __future__ import annotations

from .langlands import WhittakerRep, langlands_parameter
from .localfield import (
    EtaleCubicAlgebra,
    LocalField,
    UnsupportedCase,
    ValidationError,
    cubic_norm_characters,
    galois_conjugate,
    quadratic_character,
    restrict_character,
    trivial_character,
)
from .weildeligne import CharSp, Induced, Opaque, StructuralPathRequired, WDRep, wd_tensor


def _two_dim_shape(rho: WDRep):
    atoms = rho.atoms
    if any(isinstance(a, Opaque) for a in atoms):
        raise StructuralPathRequired("opaque component: structural path required")
    if len(atoms) == 2 and all(isinstance(a, CharSp) and a.n == 1 for a in atoms):
        return "sum", atoms[0].chi, atoms[1].chi
    if len(atoms) == 1 and isinstance(atoms[0], CharSp) and atoms[0].n == 2:
        return "special", atoms[0].chi, None
    raise UnsupportedCase("Asai of an induced (dihedral) parameter from a field factor")


def asai_quadratic(rho: WDRep, ext: LocalField) -> WDRep:
    """As_{E/F}(rho) for a two-dimensional parameter rho of W_E."""
    if rho.field != ext or ext.degree != 2:
        raise ValidationError("parameter must live on the quadratic extension")
    F = ext.base
    shape, a, b = _two_dim_shape(rho)
    if shape == "sum":
        atoms = (
            CharSp(restrict_character(a, F)),
            CharSp(restrict_character(b, F)),
            Induced(ext, a * galois_conjugate(b)),
        )
        return WDRep(F, atoms)
    chi = restrict_character(a, F)
    # sp(2) x sp(2) = Sym^2 + wedge^2; the swap acts by -1 on wedge^2
    return WDRep(F, (CharSp(chi, 3), CharSp(chi * quadratic_character(ext))))


def asai_cubic(rho: WDRep, ext: LocalField) -> WDRep:
    """Tensor induction from a cyclic cubic extension."""
    if rho.field != ext or ext.degree != 3:
        raise ValidationError("parameter must live on the cubic extension")
    if not ext.is_galois:
        raise UnsupportedCase("tensor induction from a non-Galois cubic field")
    F = ext.base
    shape, a, b = _two_dim_shape(rho)
    if shape == "sum":
        s1, s2 = galois_conjugate(a, 1), galois_conjugate(b, 1)
        t2 = galois_conjugate(b, 2)
        atoms = (
            CharSp(restrict_character(a, F)),
            CharSp(restrict_character(b, F)),
            Induced(ext, a * s1 * t2),
            Induced(ext, a * s2 * t2),
        )
        return WDRep(F, atoms)
    chi = restrict_character(a, F)
    # sp(2)^(x3) = sp(4) + 2 sp(2); Z/3 acts on the multiplicity space by nu, nu^2
    nus = [n for n in cubic_norm_characters(ext) if not n.is_trivial()]
    return WDRep(F, (CharSp(chi, 4),) + tuple(CharSp(chi * n, 2) for n in nus))


def asai_of_component(pi: WhittakerRep) -> WDRep:
    """As_{L/F} of a single component over a field factor L (F itself: identity)."""
    L = pi.field
    rho = langlands_parameter(pi)
    if L.base is None:
        return rho
    if L.degree == 2:
        return asai_quadratic(rho, L)
    return asai_cubic(rho, L)


def asai_parameter(A: EtaleCubicAlgebra, components) -> WDRep:
    """The 8-dimensional Asai parameter of Pi = (x) components over F."""
    comps = list(components)
    fields = A.component_fields
    if len(comps) != len(fields) or any(c.field != f for c, f in zip(comps, fields)):
        raise ValidationError(f"components do not match the {A.shape.value} shape")
    out = WDRep(A.base, (CharSp(trivial_character(A.base)),))
    for pi in comps:
        out = wd_tensor(out, asai_of_component(pi))
    if out.dim != 8:
        raise AssertionError("Asai parameter is not 8-dimensional")
    return out
