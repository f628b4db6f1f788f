"""Brute-force oracles, independent of the atom calculus.

Tame Weil group model.  For F with residue size q and an unramified
extension L of degree d (Q = q^d), the relevant quotient of W_F is

    Gamma = <tau> x| <Phi>,   tau^(Q-1) = 1,   Phi tau Phi^-1 = tau^q

with W_L = <tau> x| <Phi^d>.  tau corresponds to the residue generator g_L
(and to g_F = Nm g_L for characters of F), Phi^d to the uniformizer of L.

A WD representation is a triple (T, P, N) of matrices for tau, Phi and the
monodromy.  Two Frobenius-semisimple ones are isomorphic iff the Gamma-
representations on ker N^j agree for every j; we compare the trace functions
(a, b) -> tr(tau^a Phi^b) on each ker N^j.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from gpperiods.algnum import ONE, ZERO, as_alg, sqrt_int
from gpperiods.localfield import ExtKind
from gpperiods.weildeligne import CharSp, Induced


# -- exact linear algebra over any field with ==, +, *, / --------------------


def zeros(n, m, z=ZERO):
    return [[z] * m for _ in range(n)]


def eye(n, one=ONE, z=ZERO):
    out = zeros(n, n, z)
    for i in range(n):
        out[i][i] = one
    return out


def matmul(a, b):
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = None
            for k in range(m):
                x = a[i][k]
                if x == 0:
                    continue
                y = b[k][j]
                if y == 0:
                    continue
                acc = x * y if acc is None else acc + x * y
            row.append(acc if acc is not None else a[0][0] * 0)
        out.append(row)
    return out


def kron(a, b):
    n, m = len(a), len(b)
    out = zeros(n * m, n * m, a[0][0] * 0)
    for i in range(n):
        for j in range(n):
            if a[i][j] == 0:
                continue
            for k in range(m):
                for l in range(m):
                    out[i * m + k][j * m + l] = a[i][j] * b[k][l]
    return out


def madd(a, b):
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mscale(c, a):
    return [[c * x for x in r] for r in a]


def block_diag(blocks, z=ZERO):
    n = sum(len(b) for b in blocks)
    out = zeros(n, n, z)
    off = 0
    for b in blocks:
        for i in range(len(b)):
            for j in range(len(b)):
                out[off + i][off + j] = b[i][j]
        off += len(b)
    return out


def rref(mat):
    """Row-reduced echelon form; returns (rows, pivot columns)."""
    m = [list(r) for r in mat]
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(mat) -> int:
    return len(rref(mat)[1])


def nullspace(mat, z=ZERO, one=ONE):
    """Basis of {v : mat v = 0} as a list of column vectors."""
    cols = len(mat[0])
    red, piv = rref(mat)
    free = [c for c in range(cols) if c not in piv]
    basis = []
    for f in free:
        v = [z] * cols
        v[f] = one
        for i, p in enumerate(piv):
            v[p] = -red[i][f]
        basis.append(v)
    return basis


# -- nilpotent Jordan types (for sp(m) x sp(n)) -----------------------------


def shift_matrix(n):
    """The nilpotent Jordan block of sp(n), rational entries."""
    out = zeros(n, n, Fraction(0))
    for j in range(1, n):
        out[j - 1][j] = Fraction(1)
    return out


def jordan_type(nmat) -> list[int]:
    """Block sizes of a nilpotent matrix from the ranks of its powers."""
    n = len(nmat)
    ranks = [n]
    power = eye(n, Fraction(1), Fraction(0))
    while ranks[-1] > 0:
        power = matmul(power, nmat)
        ranks.append(rank(power))
    # number of blocks of size >= k is rank(N^(k-1)) - rank(N^k)
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    sizes = []
    for k in range(len(at_least), 0, -1):
        exact = at_least[k - 1] - (at_least[k] if k < len(at_least) else 0)
        sizes.extend([k] * exact)
    return sorted(sizes, reverse=True)


def tensor_nilpotent(ns):
    """N on sp(n1) x ... x sp(nk) acting as a derivation."""
    out = None
    for n in ns:
        nm = shift_matrix(n)
        if out is None:
            out = nm
            continue
        out = madd(kron(out, eye(n, Fraction(1), Fraction(0))), kron(eye(len(out), Fraction(1), Fraction(0)), nm))
    return out


# -- Weil group model -------------------------------------------------------


@dataclass
class MatRep:
    """(T, P, N): tau, Phi (or Phi^d for a rep of W_L), monodromy."""

    T: list
    P: list
    N: list

    @property
    def dim(self) -> int:
        return len(self.T)


def _sp_frobenius(u, n, q):
    s = sqrt_int(q)
    return [u * s ** (1 - n + 2 * j) for j in range(n)]


def char_sp_rep(chi, n: int = 1) -> MatRep:
    """chi x sp(n) on W of chi's field (P is that field's Frobenius)."""
    t = chi.on_unit_log(1)
    T = eye(n, t)
    P = zeros(n, n)
    for j, e in enumerate(_sp_frobenius(chi.u, n, chi.field.q)):
        P[j][j] = e
    N = zeros(n, n)
    for j in range(1, n):
        N[j - 1][j] = ONE
    return MatRep(T, P, N)


def _tau_power(q: int, i: int, d: int, order: int) -> int:
    # Phi^-i tau Phi^i = tau^(q^-i); q^d = 1 on the inertia quotient
    return pow(q, (d - i) % d, order)


def induce(rep_l: MatRep, q: int, d: int, order: int) -> MatRep:
    """Ind from W_L (index d, unramified) to W_F of a rep given by (T, Phi^d, N)."""
    m = rep_l.dim
    n = m * d
    T = zeros(n, n)
    P = zeros(n, n)
    N = zeros(n, n)
    for i in range(d):
        Ti = mpow(rep_l.T, _tau_power(q, i, d, order))
        for a in range(m):
            for b in range(m):
                T[i * m + a][i * m + b] = Ti[a][b]
                N[i * m + a][i * m + b] = rep_l.N[a][b] * q**i
        for a in range(m):
            if i < d - 1:
                P[(i + 1) * m + a][i * m + a] = ONE
            else:
                for b in range(m):
                    P[a][i * m + b] = rep_l.P[a][b]
    return MatRep(T, P, N)


def tensor_induce(rep_l: MatRep, q: int, d: int, order: int) -> MatRep:
    """Tensor induction from W_L (index d, unramified) to W_F.

    Slots are indexed by cosets Phi^i W_L.  tau acts on slot i through
    Phi^-i tau Phi^i; Phi shifts slot i to i + 1 and slot d - 1 to slot 0
    through Phi^d; monodromy acts as a derivation with weights q^i.
    """
    m = rep_l.dim
    n = m**d
    idx = _multi_indices(m, d)
    pos = {t: k for k, t in enumerate(idx)}
    Ts = [mpow(rep_l.T, _tau_power(q, i, d, order)) for i in range(d)]
    T = zeros(n, n)
    P = zeros(n, n)
    N = zeros(n, n)
    for col, src in enumerate(idx):
        # T: product over slots
        for row, dst in enumerate(idx):
            v = ONE
            for i in range(d):
                v = v * Ts[i][dst[i]][src[i]]
                if v == 0:
                    break
            T[row][col] = v
        # P: (v_0, ..., v_{d-1}) -> (P_L v_{d-1}, v_0, ..., v_{d-2})
        for a in range(m):
            c = rep_l.P[a][src[d - 1]]
            if c != 0:
                dst = (a,) + src[: d - 1]
                P[pos[dst]][col] = P[pos[dst]][col] + c
        for i in range(d):
            for a in range(m):
                c = rep_l.N[a][src[i]]
                if c != 0:
                    dst = src[:i] + (a,) + src[i + 1 :]
                    N[pos[dst]][col] = N[pos[dst]][col] + c * q**i
    return MatRep(T, P, N)


def _multi_indices(m, d):
    out = [()]
    for _ in range(d):
        out = [t + (a,) for t in out for a in range(m)]
    return out


def tensor(r1: MatRep, r2: MatRep) -> MatRep:
    n1, n2 = r1.dim, r2.dim
    return MatRep(
        kron(r1.T, r2.T),
        kron(r1.P, r2.P),
        madd(kron(r1.N, eye(n2)), kron(eye(n1), r2.N)),
    )


def direct_sum(reps) -> MatRep:
    return MatRep(
        block_diag([r.T for r in reps]),
        block_diag([r.P for r in reps]),
        block_diag([r.N for r in reps]),
    )


def mpow(a, e: int):
    out = eye(len(a))
    base = a
    while e:
        if e & 1:
            out = matmul(out, base)
        base = matmul(base, base)
        e >>= 1
    return out


def rep_of_wd(rho, q: int, d: int, order: int) -> MatRep:
    """Matrix model over W_F of a WDRep whose induced atoms are unramified of degree d."""
    blocks = []
    for a in rho.atoms:
        if isinstance(a, CharSp):
            blocks.append(char_sp_rep(a.chi, a.n))
        elif isinstance(a, Induced):
            if a.ext.kind != ExtKind.UNRAMIFIED or a.ext.degree != d:
                raise ValueError("oracle handles unramified inductions of the chosen degree")
            blocks.append(induce(char_sp_rep(a.theta, a.n), q, d, order))
        else:
            raise ValueError("opaque atoms have no matrix model")
    return direct_sum(blocks)


def check_relations(r: MatRep, q: int, order: int) -> bool:
    """P T P^-1 = T^q and P N = q^-1 N P."""
    lhs = matmul(r.P, r.T)
    rhs = matmul(mpow(r.T, q % order), r.P)
    if lhs != rhs:
        return False
    return matmul(r.P, r.N) == mscale(as_alg(1) / q, matmul(r.N, r.P))


def _is_diagonal(m) -> bool:
    return all(m[i][j] == 0 for i in range(len(m)) for j in range(len(m)) if i != j)


def _eigen_kernel(r: MatRep, npow):
    """Basis of ker N^j made of tau-eigenvectors (T is diagonal and commutes with N)."""
    n = r.dim
    groups: dict = {}
    for i in range(n):
        groups.setdefault(r.T[i][i], []).append(i)
    basis, values = [], []
    for t, idx in groups.items():
        sub = [[npow[i][j] for j in idx] for i in idx]
        for v in nullspace(sub):
            full = [ZERO] * n
            for pos, c in zip(idx, v):
                full[pos] = c
            basis.append(full)
            values.append(t)
    return basis, values


def _restricted_frobenius(r: MatRep, basis):
    k, n = len(basis), r.dim
    B = [[basis[j][i] for j in range(k)] for i in range(n)]
    img = matmul(r.P, B)
    red, piv = rref([B[i] + img[i] for i in range(n)])
    if any(p >= k for p in piv):
        raise AssertionError("ker N^j is not Frobenius-stable")
    return [red[i][k:] for i in range(k)]


def trace_table(r: MatRep, q: int, d: int, order: int):
    """tr(tau^a Phi^b) on ker N^j for every j, a mod order, 0 <= b < 2 dim d."""
    if not _is_diagonal(r.T):
        raise AssertionError("inertia must act diagonally in the model")
    n = r.dim
    out = []
    npow = eye(n)
    for j in range(1, n + 1):
        npow = matmul(npow, r.N)
        basis, values = _eigen_kernel(r, npow)
        if not basis:
            out.append(())
            continue
        P = _restricted_frobenius(r, basis)
        tpow = [[ONE] for _ in values]
        for i, t in enumerate(values):
            for _ in range(order - 1):
                tpow[i].append(tpow[i][-1] * t)
        tab = []
        Pb = eye(len(P))
        for b in range(2 * n * d):
            diag = [Pb[i][i] for i in range(len(P))]
            for a in range(order):
                tab.append(sum((tpow[i][a] * diag[i] for i in range(len(P)) if diag[i] != 0), ZERO))
            Pb = matmul(Pb, P)
        out.append(tuple(tab))
        if len(basis) == n:
            break
    return out


def same_rep(r1: MatRep, r2: MatRep, q: int, d: int, order: int) -> bool:
    if r1.dim != r2.dim:
        return False
    return trace_table(r1, q, d, order) == trace_table(r2, q, d, order)
