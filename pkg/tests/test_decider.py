import pytest

from conftest import quadratic_extensions
from gpperiods.algnum import zeta
from gpperiods import decider
from gpperiods.decider import (
    RULES,
    EnumBounds,
    GPInput,
    InconsistencyError,
    PeriodReport,
    Relevance,
    base_field,
    decide_period,
    enumerate_cases,
    exceptional_overlap,
    extend_character,
    hom_dim_component,
)
from gpperiods.langlands import Kind, principal_series, sigma_twist, steinberg_twist, supercuspidal
from gpperiods.localfield import (
    EtaleCubicAlgebra,
    MultChar,
    Shape,
    UnsupportedCase,
    ValidationError,
    conjugate_character,
    quadratic_character,
    restrict_character,
    trivial_character,
)


def quad(F, E, pi, sigma, **kw):
    return GPInput(EtaleCubicAlgebra(Shape.QUAD_TIMES_F, F, E), [pi, sigma], **kw)


def dims(inp):
    r = decide_period(inp)
    return r.dim_H, r.dim_Hprime


def test_sigmaE_stF():
    F = base_field(5)
    E = F.extension(2, "unramified")
    r = decide_period(quad(F, E, sigma_twist(trivial_character(E)), steinberg_twist(trivial_character(F))))
    assert (r.dim_H, r.dim_Hprime, r.eps_sign) == (0, 1, -1)
    assert "quad.B.steinberg" in r.citations
    assert r.relevance == Relevance.SUBREP.value


def test_stE_stF(F):
    for E in quadratic_extensions(F):
        inp = quad(F, E, steinberg_twist(trivial_character(E)), steinberg_twist(trivial_character(F)))
        assert dims(inp) == (1, 0)


@pytest.mark.parametrize("twisted", [False, True])
def test_theorem_c(F, twisted):
    for E in quadratic_extensions(F):
        eta = quadratic_character(E) if twisted else trivial_character(F)
        r = decide_period(quad(F, E, sigma_twist(trivial_character(E)), sigma_twist(eta)))
        assert (r.dim_H, r.dim_Hprime) == (1, 0) and "quad.C" in r.citations
        assert r.relevance == (Relevance.SUBREP if twisted else Relevance.QUOTIENT).value


def test_split_sigma_cases(F):
    A = EtaleCubicAlgebra(Shape.SPLIT3, F)
    one = trivial_character(F)
    eta = MultChar(F, 0, -1)
    r = decide_period(GPInput(A, [sigma_twist(one)] * 3))
    assert (r.dim_H, r.dim_Hprime, r.eps_sign) == (1, 0, 1) and r.relevance == Relevance.QUOTIENT.value
    r = decide_period(GPInput(A, [sigma_twist(eta), sigma_twist(one), sigma_twist(one)]))
    assert (r.dim_H, r.dim_Hprime) == (1, 0) and r.relevance == Relevance.SUBREP.value


def test_split_steinberg_triple(F):
    A = EtaleCubicAlgebra(Shape.SPLIT3, F)
    st = steinberg_twist(trivial_character(F))
    # eps(sp2 x sp2 x sp2) = eps(sp4) eps(sp2)^2 = -1
    assert dims(GPInput(A, [st] * 3)) == (0, 1)


def test_cubic_cases(F):
    K = F.extension(3, "unramified")
    A = EtaleCubicAlgebra(Shape.CUBIC_FIELD, F, K)
    assert dims(GPInput(A, [steinberg_twist(trivial_character(K))])) == (0, 1)
    # lambda = eta|_F nontrivial quadratic
    assert dims(GPInput(A, [steinberg_twist(MultChar(K, 0, -1))])) == (1, 0)
    for u in (1, -1):
        r = decide_period(GPInput(A, [sigma_twist(MultChar(K, 0, u))]))
        assert (r.dim_H, r.dim_Hprime) == (1, 0)
        assert r.relevance == (Relevance.QUOTIENT if u == 1 else Relevance.SUBREP).value


def test_central_character_condition(F):
    E = F.extension(2, "unramified")
    with pytest.raises(ValidationError, match="central character condition"):
        quad(F, E, sigma_twist(MultChar(E, 0, zeta(3))), steinberg_twist(trivial_character(F)))


def test_hom_dim_rules():
    F = base_field(5)
    E = F.extension(2, "unramified")
    a = MultChar(E, 1, 1)
    # a b^c = 1
    pi = principal_series(a, conjugate_character(a).inverse())
    assert hom_dim_component(pi, "steinberg") == 0
    assert hom_dim_component(pi, "trivial") == 1
    # a b^c != 1 and a|_F != 1
    b = MultChar(E, 3, 1)
    pi = principal_series(b, b.inverse())
    assert (b * conjugate_character(b.inverse())).is_trivial() is False
    assert not restrict_character(b, F).is_trivial()
    assert hom_dim_component(pi, "steinberg") == 1
    assert hom_dim_component(pi, "trivial") == 0
    with pytest.raises(ValidationError):
        hom_dim_component(pi, "other")
    with pytest.raises(UnsupportedCase):
        hom_dim_component(steinberg_twist(trivial_character(E)), "trivial")


def test_exceptional_overlap_flagged():
    F = base_field(5)
    E = F.extension(2, "unramified")
    # characters trivial on F^x but with a b^c != 1
    a = MultChar(E, F.q - 1, 1)
    b = MultChar(E, 2 * (F.q - 1), 1)
    pi = principal_series(a, b)
    assert exceptional_overlap(pi)
    assert hom_dim_component(pi, "steinberg") + hom_dim_component(pi, "trivial") == 2


def test_extend_character(F):
    for E in quadratic_extensions(F):
        for k in range(F.q - 1):
            chi = MultChar(F, k, -1)
            assert restrict_character(extend_character(chi, E), F) == chi


def test_opaque_supercuspidal_branches():
    F = base_field(5)
    E = F.extension(2, "unramified")
    one = trivial_character(F)
    om = quadratic_character(E)
    sc = supercuspidal(F, "s", omega=one, eps_sign=-1, eps_twists=[(om, -1)])
    r = decide_period(quad(F, E, sigma_twist(trivial_character(E)), sc))
    assert (r.dim_H, r.eps_source) == (1, "structural") and "quad.B" in r.citations
    bare = supercuspidal(F, "s", omega=one)
    with pytest.raises(UnsupportedCase, match="supply supercuspidal epsilon data"):
        decide_period(quad(F, E, sigma_twist(trivial_character(E)), bare))
    # irreducible x opaque: only a supplied Asai sign decides it
    pi = steinberg_twist(trivial_character(E))
    with pytest.raises(UnsupportedCase):
        decide_period(quad(F, E, pi, bare))
    r = decide_period(quad(F, E, pi, bare, asai_eps_sign=-1))
    assert (r.dim_H, r.dim_Hprime, r.eps_source) == (0, 1, "supplied")


def test_dihedral_supercuspidal_decided_constructively():
    F = base_field(3)
    E = F.extension(2, "unramified")
    sc = supercuspidal(F, "d", dihedral=(E, MultChar(E, F.q - 1, -1)))
    A = EtaleCubicAlgebra(Shape.SPLIT3, F)
    st = steinberg_twist(trivial_character(F))
    # theta restricts to omega_{E/F}, so det Ind theta = omega theta|_F = 1
    assert sc.omega.is_trivial()
    r = decide_period(GPInput(A, [sc, st, st]))
    assert r.eps_source == "constructive" and r.dim_H + r.dim_Hprime == 1


def test_inconsistency_is_fatal(monkeypatch):
    F = base_field(5)
    E = F.extension(2, "unramified")
    inp = quad(F, E, sigma_twist(trivial_character(E)), steinberg_twist(trivial_character(F)))
    monkeypatch.setattr(decider, "constructive_sign", lambda _: 1)
    with pytest.raises(InconsistencyError):
        decide_period(inp)


def test_report_round_trip_and_citations(F):
    A = EtaleCubicAlgebra(Shape.SPLIT3, F)
    r = decide_period(GPInput(A, [sigma_twist(trivial_character(F))] * 3))
    assert PeriodReport.from_dict(r.to_dict()) == r
    assert all(c in RULES for c in r.citations) and "main" in r.citations


def test_enumeration_contract():
    bounds = EnumBounds(max_exponents=2)
    cases = list(enumerate_cases(3, ["split3"], bounds))
    kinds = {tuple(p.kind for p in c.components) for c in cases}
    assert (Kind.STEINBERG,) * 3 in kinds and (Kind.SIGMA,) * 3 in kinds
    for c in cases:
        sig = [p for p in c.components if p.kind == Kind.SIGMA]
        if len(sig) == 3:
            eta = sig[0].chi * sig[1].chi * sig[2].chi
            assert (eta * eta).is_trivial()
    again = list(enumerate_cases(3, ["split3"], bounds))
    assert [tuple(map(str, c.components)) for c in again] == [tuple(map(str, c.components)) for c in cases]


def test_enumeration_invariants_small():
    n = 0
    for q in (3, 5):
        for inp in enumerate_cases(q, bounds=EnumBounds(max_per_algebra=25)):
            r = decide_period(inp)
            assert r.dim_H + r.dim_Hprime == 1
            assert r.jl_nonzero or r.dim_Hprime == 0
            if r.case_tag == "split.sigma":
                assert r.eps_sign == 1
            n += 1
    assert n >= 150
