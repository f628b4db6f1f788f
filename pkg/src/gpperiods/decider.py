"""Period dimensions for GL_2(A) restricted to GL_2(F) and to D^x.

Two independent routes:

* structural: dispatch on the shape of A and on which components are
  reducible, reduce by twisting, and apply the cited case rule;
* constructive: compute eps(As Pi) omega_A(-1) with the atom calculus.

Where both run they must agree, otherwise InconsistencyError is raised.
Every report carries the rule anchors it used (``RULES`` keys).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from enum import Enum

from .asai import asai_parameter
from .epsilon import epsilon_sign, epsilon_wd
from .langlands import (
    Kind,
    WhittakerRep,
    central_character,
    eps_for_twists,
    jl_exists,
    langlands_parameter,
    principal_series,
    sigma_twist,
    steinberg_twist,
    supercuspidal,
    twist,
)
from .localfield import (
    EtaleCubicAlgebra,
    ExtKind,
    GPError,
    LocalField,
    MultChar,
    Shape,
    UnsupportedCase,
    ValidationError,
    build_character,
    conjugate_character,
    discriminant_character,
    evaluate_at_minus_one,
    galois_conjugate,
    quadratic_character,
    restrict_character,
    trivial_character,
)
from .weildeligne import wd_det


class InconsistencyError(GPError):
    """The structural and constructive routes disagree."""


RULES: dict[str, str] = {
    "main": "Main Theorem: dim Hom_H(Pi, 1) + dim Hom_H'(Pi', 1) = 1; dim Hom_H(Pi, 1) = 1 iff eps(As Pi) omega_A(-1) = 1",
    "jl": "Jacquet-Langlands: Pi' = 0 unless the components over the non-split factors of D x A are discrete series",
    "twist": "Reduction by twisting: Hom_H(Pi x (mu o det), 1) with mu restricted to F^x",
    "split.sigma": "Split algebra, some component a twist of Sigma: the epsilon factor is +1 and dim Hom_H = 1",
    "split.irreducible": "Split algebra, irreducible components: trilinear forms exist iff eps(pi1 x pi2 x pi3) = +1",
    "quad.A": "Theorem A: dim Hom_H(pi x Sigma_F, 1) = 1 for irreducible generic pi with central character trivial on F^x",
    "quad.A.steinberg": "Steinberg rule: Hom_H(I_E(a, b) x St_F, 1) is zero if a b^c = 1 and one-dimensional otherwise",
    "quad.A.trivial": "Trivial-target rule: Hom_H(I_E(a, b) x 1, 1) is one-dimensional if a b^c = 1 or a|_F = b|_F = 1, else zero",
    "quad.A.tempered": "Tempered rule: dim Hom of an irreducible tempered pi under the mirabolic of GL_2(F) is 1",
    "quad.B": "Theorem B(i)/(ii): dim Hom_H(Sigma_E x sigma, 1) = 1 iff eps(sigma) eps(sigma x omega_E/F) = omega_E/F(-1)",
    "quad.B.steinberg": "Theorem B(ii), Steinberg case: Mackey theory gives Hom_H(Sigma_E x St_F, 1) = 0",
    "quad.B.claim": "Theorem B, twisted Steinberg: eta St_F with eta quadratic, eta not in {1, omega_E/F} gives dim 1",
    "quad.C": "Theorem C: dim Hom_H(Sigma_E x Sigma_F, eta) = 1 for quadratic or trivial eta",
    "quad.irreducible": "Irreducible pi x sigma: dim Hom_H = 1 iff eps(As(pi) x sigma) omega_E/F(-1) = 1",
    "cubic.sigma": "Cubic field, Sigma twist: eps(As(Sigma_K) x lambda) omega_A(-1) is always +1",
    "cubic.steinberg": "Cubic field, Steinberg twist: sign +1 if lambda = eta|_F is nontrivial quadratic, -1 if lambda = 1",
    "cubic.irreducible": "Cubic field, irreducible generic pi: dim Hom_H = 1 iff eps(As pi) omega_A(-1) = 1",
    "lemma": "eps(As(Sigma_E) x sigma) = eps(sigma) eps(sigma x omega_E/F) for irreducible sigma with trivial central character",
}


class Relevance(str, Enum):
    QUOTIENT = "factors-through-quotient"
    SUBREP = "carried-by-subrepresentation"
    NOT_APPLICABLE = "not-applicable"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class GPInput:
    algebra: EtaleCubicAlgebra
    components: tuple
    # eps(As Pi) omega_A(-1) supplied by the caller when opaque data blocks both routes
    asai_eps_sign: int | None = None
    psi_level: int = 0

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if self.psi_level != 0:
            raise ValidationError("psi_level must be 0")
        fields = self.algebra.component_fields
        if len(fields) != len(self.components):
            raise ValidationError(f"{self.algebra.shape.value} needs {len(fields)} components")
        for pi, fld in zip(self.components, fields):
            if pi.field != fld:
                raise ValidationError(f"component {pi} lives on {pi.field}, expected {fld}")
        if self.asai_eps_sign not in (None, 1, -1):
            raise ValidationError("asai_eps_sign must be +1 or -1")
        F = self.algebra.base
        total = trivial_character(F)
        for pi in self.components:
            total = total * restrict_character(central_character(pi), F)
        if not total.is_trivial():
            raise ValidationError("central character condition fails: omega_Pi is not trivial on F^x")


@dataclass(frozen=True)
class PeriodReport:
    dim_H: int
    dim_Hprime: int
    eps_sign: int | None
    jl_nonzero: bool
    case_tag: str
    citations: tuple
    relevance: str
    eps_source: str = "constructive"

    def to_dict(self) -> dict:
        return {
            "dim_H": self.dim_H,
            "dim_Hprime": self.dim_Hprime,
            "eps_sign": self.eps_sign if self.eps_sign is not None else "unknown",
            "jl_nonzero": self.jl_nonzero,
            "case_tag": self.case_tag,
            "citations": [{"rule": r, "text": RULES[r]} for r in self.citations],
            "relevance": self.relevance,
            "eps_source": self.eps_source,
        }

    @classmethod
    def from_dict(cls, d: dict) -> PeriodReport:
        eps = d["eps_sign"]
        return cls(
            dim_H=d["dim_H"],
            dim_Hprime=d["dim_Hprime"],
            eps_sign=None if eps == "unknown" else int(eps),
            jl_nonzero=bool(d["jl_nonzero"]),
            case_tag=d["case_tag"],
            citations=tuple(c["rule"] if isinstance(c, dict) else c for c in d["citations"]),
            relevance=d["relevance"],
            eps_source=d.get("eps_source", "constructive"),
        )


@dataclass
class _Verdict:
    dim_H: int | None
    tag: str
    rules: list = field(default_factory=list)
    relevance: Relevance = Relevance.UNKNOWN


# -- helpers -----------------------------------------------------------------


def _is_untwisted_steinberg(pi: WhittakerRep) -> bool:
    return pi.kind == Kind.STEINBERG and pi.chi.is_trivial()


def extend_character(chi: MultChar, ext: LocalField) -> MultChar | None:
    """Some character of ext^x restricting to chi on F^x, if one is found."""
    if ext.kind == ExtKind.UNRAMIFIED:
        return MultChar(ext, chi.k, chi.u)
    # ramified: need u_E^e = chi(w_F) * chi_E(nu)
    cand = MultChar(ext, chi.k, 1)
    target = chi.u * cand.on_unit_log(ext.nu_log)
    r = target.root(ext.ram_index)
    if r is None:
        return None
    out = MultChar(ext, chi.k, r)
    return out if restrict_character(out, ext.base) == chi else None


def exceptional_overlap(pi: WhittakerRep) -> bool:
    """alpha|_F = beta|_F = 1 while alpha beta^c != 1: both rules fire."""
    F = pi.field.base
    a, b = pi.alpha, pi.beta
    return (
        restrict_character(a, F).is_trivial()
        and restrict_character(b, F).is_trivial()
        and not (a * conjugate_character(b)).is_trivial()
    )


def hom_dim_component(pi: WhittakerRep, target: str) -> int:
    """dim Hom_H(pi x tau, 1) for pi = I_E(alpha, beta), tau = St_F or the trivial rep."""
    if pi.kind != Kind.PRINCIPAL_SERIES or pi.field.base is None or pi.field.degree != 2:
        raise UnsupportedCase("hom_dim_component needs a principal series of GL_2(E)")
    F = pi.field.base
    if not restrict_character(central_character(pi), F).is_trivial():
        raise ValidationError("central character condition fails: omega_pi is not trivial on F^x")
    a, b = pi.alpha, pi.beta
    dual_pair = (a * conjugate_character(b)).is_trivial()
    if target == "steinberg":
        return 0 if dual_pair else 1
    if target == "trivial":
        both = restrict_character(a, F).is_trivial() and restrict_character(b, F).is_trivial()
        return 1 if dual_pair or both else 0
    raise ValidationError(f"unknown target {target!r}")


def _eps2(pi: WhittakerRep, mu: MultChar | None = None) -> int:
    """eps(pi x mu) for a component over F, computed or looked up."""
    F = pi.field
    mu = mu or trivial_character(F)
    if pi.kind == Kind.SUPERCUSPIDAL and pi.dihedral is None:
        known = dict(eps_for_twists(pi))
        if mu not in known:
            raise UnsupportedCase(
                f"supply supercuspidal epsilon data: eps({pi.label} x mu) for mu = {mu}")
        return known[mu]
    from .weildeligne import wd_twist

    return epsilon_sign(epsilon_wd(wd_twist(langlands_parameter(pi), mu)))


# -- structural route ------------------------------------------------------------


def _structural_split(comps) -> _Verdict:
    sig = [p for p in comps if p.kind == Kind.SIGMA]
    if not sig:
        return _Verdict(None, "split.irreducible", ["split.irreducible"], Relevance.NOT_APPLICABLE)
    rel = Relevance.UNKNOWN
    if len(sig) == 3:
        eta = sig[0].chi * sig[1].chi * sig[2].chi
        # by twisting: (Sigma x eta, Sigma, Sigma) with eta^2 = 1
        rel = Relevance.QUOTIENT if eta.is_trivial() else Relevance.SUBREP
    return _Verdict(1, "split.sigma", ["split.sigma"] + (["twist"] if len(sig) == 3 else []), rel)


def _structural_quad(A: EtaleCubicAlgebra, pi: WhittakerRep, sigma: WhittakerRep) -> _Verdict:
    E, F = A.ext, A.base
    omega = quadratic_character(E)
    if pi.kind != Kind.SIGMA and sigma.kind == Kind.SIGMA:
        rules = ["quad.A"]
        rel = Relevance.UNKNOWN
        if pi.kind == Kind.PRINCIPAL_SERIES:
            lift = extend_character(sigma.chi, E)
            if lift is not None:
                pi0 = twist(pi, lift)
                rules.append("twist")
                if exceptional_overlap(pi0):
                    rules.append("quad.A.tempered")
                else:
                    st = hom_dim_component(pi0, "steinberg")
                    tr = hom_dim_component(pi0, "trivial")
                    if st + tr != 1:
                        raise InconsistencyError("Theorem A dichotomy violated outside the tempered overlap")
                    rules += ["quad.A.steinberg", "quad.A.trivial"]
                    rel = Relevance.QUOTIENT if tr else Relevance.SUBREP
        return _Verdict(1, "quad.a", rules, rel)
    if pi.kind == Kind.SIGMA and sigma.kind == Kind.SIGMA:
        eta = restrict_character(pi.chi, F) * sigma.chi
        rel = Relevance.QUOTIENT if eta.is_trivial() else Relevance.SUBREP
        return _Verdict(1, "quad.c", ["twist", "quad.C"], rel)
    if pi.kind == Kind.SIGMA:
        lam = restrict_character(pi.chi, F)
        s0 = twist(sigma, lam)
        rules = ["twist"] if not lam.is_trivial() else []
        if _is_untwisted_steinberg(s0):
            return _Verdict(0, "quad.b.steinberg", rules + ["quad.B.steinberg"], Relevance.SUBREP)
        if s0.kind == Kind.STEINBERG and s0.chi.is_quadratic() and s0.chi != omega:
            return _Verdict(1, "quad.b.twisted_steinberg", rules + ["quad.B.claim"], Relevance.SUBREP)
        test = _eps2(s0) * _eps2(s0, omega)
        ok = test == int(evaluate_at_minus_one(omega).to_fraction())
        return _Verdict(1 if ok else 0, "quad.b", rules + ["quad.B", "lemma"], Relevance.UNKNOWN)
    # both irreducible
    if pi.kind == Kind.PRINCIPAL_SERIES and sigma.kind == Kind.STEINBERG:
        lift = extend_character(sigma.chi, E)
        if lift is not None:
            pi0 = twist(pi, lift)
            st = hom_dim_component(pi0, "steinberg")
            rules = (["twist"] if not sigma.chi.is_trivial() else []) + ["quad.A.steinberg"]
            return _Verdict(st, "quad.irreducible.steinberg", rules, Relevance.NOT_APPLICABLE)
    return _Verdict(None, "quad.irreducible", ["quad.irreducible"], Relevance.NOT_APPLICABLE)


def _structural_cubic(A: EtaleCubicAlgebra, pi: WhittakerRep) -> _Verdict:
    F = A.base
    if pi.kind == Kind.SIGMA:
        lam = restrict_character(pi.chi, F)
        rel = Relevance.QUOTIENT if lam.is_trivial() else Relevance.SUBREP
        return _Verdict(1, "cubic.sigma", ["cubic.sigma"], rel)
    if pi.kind == Kind.STEINBERG:
        lam = restrict_character(pi.chi, F)
        if lam.is_trivial():
            return _Verdict(0, "cubic.steinberg", ["cubic.steinberg"], Relevance.NOT_APPLICABLE)
        if lam.is_quadratic():
            return _Verdict(1, "cubic.steinberg", ["cubic.steinberg"], Relevance.NOT_APPLICABLE)
        raise ValidationError("central character condition fails: lambda is not quadratic")
    return _Verdict(None, "cubic.irreducible", ["cubic.irreducible"], Relevance.NOT_APPLICABLE)


def structural_verdict(inp: GPInput) -> _Verdict:
    A = inp.algebra
    comps = inp.components
    if A.shape == Shape.SPLIT3:
        return _structural_split(comps)
    if A.shape == Shape.QUAD_TIMES_F:
        return _structural_quad(A, comps[0], comps[1])
    return _structural_cubic(A, comps[0])


# -- constructive route --------------------------------------------------------


def asai_sign(inp: GPInput) -> int:
    """epsilon_sign(eps(As Pi) omega_A(-1)); raises UnsupportedCase if not computable."""
    A = inp.algebra
    rho = asai_parameter(A, inp.components)
    # psi-independence needs det As(Pi) = 1
    if not wd_det(rho).is_trivial():
        raise InconsistencyError("det As(Pi) is not trivial for a central-trivial Pi")
    w = evaluate_at_minus_one(discriminant_character(A))
    return epsilon_sign(epsilon_wd(rho) * w)


def constructive_sign(inp: GPInput) -> int | None:
    try:
        return asai_sign(inp)
    except (UnsupportedCase, ValidationError) as exc:
        if isinstance(exc, ValidationError) and "opaque" not in str(exc):
            raise
        return None


def jl_nonzero(inp: GPInput) -> bool:
    A = inp.algebra
    if A.shape == Shape.SPLIT3:
        return all(jl_exists(p) for p in inp.components)
    if A.shape == Shape.QUAD_TIMES_F:
        # D splits over E, so only the F-component must transfer
        return jl_exists(inp.components[1])
    return jl_exists(inp.components[0])


def decide_period(inp: GPInput) -> PeriodReport:
    verdict = structural_verdict(inp)
    sign = constructive_sign(inp)
    source = "constructive"
    rules = list(verdict.rules)
    dim_H = verdict.dim_H
    if dim_H is None:
        if sign is None:
            if inp.asai_eps_sign is None:
                raise UnsupportedCase(
                    "supply supercuspidal epsilon data: the Asai sign cannot be computed (asai_eps_sign)")
            sign, source = inp.asai_eps_sign, "supplied"
        dim_H = 1 if sign == 1 else 0
    elif sign is None:
        sign, source = (1 if dim_H == 1 else -1), "structural"
    elif (sign == 1) != (dim_H == 1):
        raise InconsistencyError(
            f"{verdict.tag}: structural dim_H = {dim_H} but eps(As Pi) omega_A(-1) = {sign}")
    jl = jl_nonzero(inp)
    dim_Hp = 1 - dim_H
    if dim_Hp and not jl:
        raise InconsistencyError(f"{verdict.tag}: dim_H' = 1 but the Jacquet-Langlands transfer vanishes")
    rules += ["main"] + ([] if jl else ["jl"])
    return PeriodReport(dim_H, dim_Hp, sign, jl, verdict.tag, tuple(dict.fromkeys(rules)),
                        verdict.relevance.value, source)


# -- enumeration -----------------------------------------------------------------


_Q_TABLE = {3: (3, 1), 5: (5, 1), 7: (7, 1), 9: (3, 2)}


@dataclass(frozen=True)
class EnumBounds:
    """Pools used to build components.

    ``unit_values`` are the values at the uniformizer; ``max_exponents``
    caps how many tame exponents are used per field; ``max_per_algebra``
    thins each algebra's instance list to evenly spaced picks.
    """

    unit_values: tuple = (1, -1)
    max_exponents: int = 4
    max_per_algebra: int | None = None
    dihedral: bool = True


def base_field(q: int) -> LocalField:
    if q not in _Q_TABLE:
        raise ValidationError(f"q = {q} not in {sorted(_Q_TABLE)}")
    p, f = _Q_TABLE[q]
    return LocalField(p, f)


def _exponents(L: LocalField, cap: int) -> list[int]:
    n = L.q - 1
    ok = [k for k in range(n) if L.level % (n // math.gcd(k, n)) == 0]
    # small orders first, so the trivial and quadratic exponents always survive
    ok.sort(key=lambda k: (n // math.gcd(k, n), k))
    return ok[:cap]


def character_pool(L: LocalField, bounds: EnumBounds) -> list[MultChar]:
    return [build_character(L, k, u) for k in _exponents(L, bounds.max_exponents) for u in bounds.unit_values]


def component_pool(L: LocalField, bounds: EnumBounds, dihedral_ext: LocalField | None = None) -> list[WhittakerRep]:
    """Components over L; dihedral supercuspidals (L = F only) come from ``dihedral_ext``."""
    chars = character_pool(L, bounds)
    out = [sigma_twist(c) for c in chars] + [steinberg_twist(c) for c in chars]
    for a, b in itertools.combinations_with_replacement(chars, 2):
        out.append(principal_series(a, b))
    if bounds.dihedral and L.base is None:
        E = dihedral_ext or L.extension(2, "unramified")
        for th in character_pool(E, EnumBounds(bounds.unit_values, bounds.max_exponents + 4)):
            if galois_conjugate(th) != th and th.k < galois_conjugate(th).k:
                out.append(supercuspidal(L, f"dihedral({th.k},{th.u})", dihedral=(E, th)))
    return out


def algebras(F: LocalField, shapes) -> list[EtaleCubicAlgebra]:
    out = []
    for s in shapes:
        s = Shape(s)
        if s == Shape.SPLIT3:
            out.append(EtaleCubicAlgebra(s, F))
        elif s == Shape.QUAD_TIMES_F:
            out.append(EtaleCubicAlgebra(s, F, F.extension(2, "unramified")))
            out.append(EtaleCubicAlgebra(s, F, F.extension(2, "ramified", "square")))
            out.append(EtaleCubicAlgebra(s, F, F.extension(2, "ramified", "nonsquare")))
        else:
            out.append(EtaleCubicAlgebra(s, F, F.extension(3, "unramified")))
    return out


def _central_ok(F, comps) -> bool:
    total = trivial_character(F)
    for pi in comps:
        total = total * restrict_character(central_character(pi), F)
    return total.is_trivial()


def enumerate_cases(q: int, shapes=("split3", "quad_times_f", "cubic_field"), bounds: EnumBounds | None = None):
    """Every central-trivial instance built from the pools, in a fixed order."""
    bounds = bounds or EnumBounds()
    F = base_field(q)
    pools: dict = {}

    # tensoring parameters induced from two different quadratic fields is
    # outside the atom calculus, so F-side dihedrals reuse E when there is one
    def pool(L, dih=None):
        if (L, dih) not in pools:
            pools[L, dih] = component_pool(L, bounds, dih)
        return pools[L, dih]

    for A in algebras(F, shapes):
        found = []
        if A.shape == Shape.SPLIT3:
            P = pool(F)
            for i, j, k in itertools.combinations_with_replacement(range(len(P)), 3):
                comps = (P[i], P[j], P[k])
                if _central_ok(F, comps):
                    found.append(comps)
        elif A.shape == Shape.QUAD_TIMES_F:
            for pi in pool(A.ext):
                for sigma in pool(F, A.ext):
                    if _central_ok(F, (pi, sigma)):
                        found.append((pi, sigma))
        else:
            for pi in pool(A.ext):
                if _central_ok(F, (pi,)):
                    found.append((pi,))
        cap = bounds.max_per_algebra
        if cap is not None and len(found) > cap:
            step = len(found) / cap
            found = [found[int(i * step)] for i in range(cap)]
        for comps in found:
            yield GPInput(A, comps)
