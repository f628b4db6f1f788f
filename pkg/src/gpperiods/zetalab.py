"""The unramified Asai zeta integral, summed exactly.

For E/F unramified quadratic, pi = I_E(a, b) spherical with Satake
parameters a, b, the spherical Whittaker function on diag(w^n, 1) is
(Casselman-Shalika)

    w_n = q_E^(-n/2) (a^(n+1) - b^(n+1)) / (a - b),    q_E = q^2.

With Phi the characteristic function of O_F^2 and vol(GL_2(O_F)) = 1, the
Iwasawa decomposition h = n z diag(w^n, 1) k turns Z(W, Phi, s) into

    sum_{m, n >= 0} (ab)^m w_n q^n X^(2m + n),    X = q^-s,

since the central character of pi at w_F is ab and the modulus factor is
q^n.  Reconstruction recovers 1 / L(As pi, s) as a polynomial in X.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algnum import ONE, ZERO, AlgNumber, as_alg
from .asai import asai_quadratic
from .localfield import GPError, LocalField, MultChar, ValidationError
from .weildeligne import CharSp, WDRep, frobenius_charpoly


class ReconstructionError(GPError):
    """No rational function of the allowed shape reproduces the series."""


@dataclass(frozen=True)
class SatakeData:
    a: AlgNumber
    b: AlgNumber
    q: int

    def __post_init__(self):
        object.__setattr__(self, "a", as_alg(self.a))
        object.__setattr__(self, "b", as_alg(self.b))
        if self.a.is_zero() or self.b.is_zero():
            raise ValidationError("Satake parameters must be nonzero")
        if self.q < 2:
            raise ValidationError("q must be a prime power")

    @property
    def central_value(self) -> AlgNumber:
        return self.a * self.b

    @property
    def unitary(self) -> bool:
        return self.a * self.a.conj() == ONE and self.b * self.b.conj() == ONE


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple
    q: int

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1


def _schur(a: AlgNumber, b: AlgNumber, n: int) -> AlgNumber:
    if a == b:
        return (n + 1) * a**n
    return (a ** (n + 1) - b ** (n + 1)) / (a - b)


def whittaker_value(sd: SatakeData, n: int) -> AlgNumber:
    if n < 0:
        raise ValidationError("n must be nonnegative")
    # q_E^(-n/2) = q^-n for the unramified quadratic extension
    return _schur(sd.a, sd.b, n) / sd.q**n


def zeta_series(sd: SatakeData, M: int) -> TruncatedSeries:
    if M < 1:
        raise ValidationError("need at least one term")
    c = [ZERO] * (M + 1)
    ab = sd.central_value
    for n in range(M + 1):
        wn = whittaker_value(sd, n) * sd.q**n
        zm = ONE
        for m in range((M - n) // 2 + 1):
            c[2 * m + n] = c[2 * m + n] + zm * wn
            zm = zm * ab
    return TruncatedSeries(tuple(c), sd.q)


def series_inverse(c, k: int) -> list:
    """First k+1 coefficients of 1 / sum c_i X^i (triangular solve)."""
    if c[0].is_zero():
        raise ReconstructionError("constant term vanishes")
    inv0 = c[0].inverse()
    d = [inv0]
    for n in range(1, k + 1):
        s = ZERO
        for j in range(1, min(n, len(c) - 1) + 1):
            s = s + c[j] * d[n - j]
        d.append(-s * inv0)
    return d


def _mul_trunc(a, b, M: int) -> list:
    out = [ZERO] * (M + 1)
    for i, x in enumerate(a):
        if i > M or x.is_zero():
            continue
        for j, y in enumerate(b[: M + 1 - i]):
            out[i + j] = out[i + j] + x * y
    return out


@dataclass(frozen=True)
class LFactor:
    """1 / denominator(X), with the denominator normalized to constant term 1."""

    denominator: tuple
    checked_terms: int

    @property
    def degree(self) -> int:
        return len(self.denominator) - 1

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.denominator):
            if c.is_zero():
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            coef = str(c)
            if mono and coef in ("1", "-1"):
                coef = coef[:-1]
            elif mono:
                coef = f"{coef}*" if c.is_rational() else f"({coef})*"
            terms.append(f"{coef}{mono}")
        return "1 / (" + " + ".join(terms).replace("+ -", "- ") + ")"


def reconstruct_L_factor(ts: TruncatedSeries, max_deg: int = 4) -> LFactor:
    """Smallest-degree D with D * Z = 1 through order M; raises if none fits."""
    M = ts.order
    if M < 2 * max_deg + 2:
        raise ValidationError(f"need at least {2 * max_deg + 2} terms for degree {max_deg}")
    c = list(ts.coeffs)
    scale = c[0]
    for k in range(max_deg + 1):
        d = series_inverse(c, k)
        prod = _mul_trunc(d, c, M)
        if all(x.is_zero() for x in prod[1:]):
            d = [x * scale for x in d]
            while len(d) > 1 and d[-1].is_zero():
                d.pop()
            return LFactor(tuple(d), M)
    raise ReconstructionError(f"no denominator of degree <= {max_deg} reproduces {M + 1} coefficients")


def asai_denominator(sd: SatakeData) -> list:
    """det(1 - Frob X) on As(a + b), read off the asai module."""
    F = LocalField(*_pf(sd.q))
    E = F.extension(2, "unramified")
    rho = WDRep(E, (CharSp(MultChar(E, 0, sd.a)), CharSp(MultChar(E, 0, sd.b))))
    return frobenius_charpoly(asai_quadratic(rho, E))


def _pf(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            f, r = 0, q
            while r % p == 0:
                r //= p
                f += 1
            if r != 1:
                break
            return p, f
    raise ValidationError(f"{q} is not a prime power")


def matches_asai(sd: SatakeData, L: LFactor) -> bool:
    """Reciprocal roots of L equal the Frobenius eigenvalues of As(a + b)."""
    target = list(asai_denominator(sd))
    while len(target) > 1 and target[-1].is_zero():
        target.pop()
    return list(L.denominator) == target


def value_at_one(L: LFactor) -> tuple[int, AlgNumber]:
    """(pole order at X = 1, leading value of (1 - X)^order / D(X) there)."""
    d = list(L.denominator)
    order = 0
    while sum(d, ZERO).is_zero():
        # synthetic division by (1 - X)
        quo, carry = [], ZERO
        for x in d[:-1]:
            carry = carry + x
            quo.append(carry)
        d = quo
        order += 1
    return order, sum(d, ZERO).inverse()
