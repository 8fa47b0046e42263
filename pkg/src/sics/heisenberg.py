"""Weyl-Heisenberg displacement operators and the metaplectic representation.

Displacements are D_{i,j} = tau^{ij} X^i Z^j with tau = -e^{i pi / d}.
For prime d the metaplectic unitary follows the quadratic-Gauss-sum formula
with the theta prefactor that makes the representation faithful; composite
d = 15, 195 are assembled as tensor products of the kappa-twisted CRT
factors, with C^13 (x) C^3 (x) C^5 index order given by residues.
"""

from dataclasses import dataclass

import gmpy2
import mpmath as mp

from . import bignum
from .modarith import (ModInt, SymplecticMatrix, is_odd_prime, legendre,
                       split_to_primes)


def clock_shift(d, prec):
    if d < 2:
        raise ValueError("d must be at least 2")
    z = [[bignum.root_of_unity(d, r, prec) if r == c else mp.mpc(0)
          for c in range(d)] for r in range(d)]
    x = [[mp.mpc(1 if r == (c + 1) % d else 0) for c in range(d)]
         for r in range(d)]
    return z, x


def displacement(i, j, d, prec):
    """Dense matrix of D_{i,j}; nonzero entries D[(s+i)%d, s] = tau^{ij} w^{js}."""
    i %= d
    j %= d
    with mp.workdps(prec):
        tau_pow = bignum.root_of_unity(2 * d, (d + 1) * i * j, prec)  # (-e^{i pi/d})^{ij}
        m = [[mp.mpc(0)] * d for _ in range(d)]
        for s in range(d):
            m[(s + i) % d][s] = tau_pow * bignum.root_of_unity(d, j * s, prec)
    return m


def displace_vector(v, i, j, prec):
    """D_{i,j} v in O(d): (Dv)[r] = tau^{ij} w^{j(r-i)} v[(r-i) % d]."""
    d = len(v)
    i %= d
    j %= d
    tau_pow = bignum.root_of_unity(2 * d, (d + 1) * i * j, prec)
    with mp.workdps(prec):
        return [tau_pow * bignum.root_of_unity(d, (j * ((r - i) % d)) % d, prec)
                * v[(r - i) % d] for r in range(d)]


def displacement_split_index(i, j, d):
    """Per-prime-factor displacement indices under the twisted CRT map.

    Returns [(prime, i_f, j_f), ...] largest prime first, for d in {15, 195}.
    """
    if d == 15:
        k = 2   # (5-1)/2
        return [(3, i % 3, (k * j) % 3), (5, i % 5, (k * j) % 5)]
    if d == 195:
        k15 = 7  # (15-1)/2
        out = [(13, i % 13, (k15 * j) % 13)]
        out += displacement_split_index(i % 15, (k15 * j) % 15, 15)
        return out
    raise ValueError("unsupported composite d")


@dataclass
class MetaplecticUnitary:
    source: SymplecticMatrix
    matrix: list
    phase_theta: object


def metaplectic(f, prec):
    """Faithful metaplectic unitary of a symplectic matrix, prime modulus."""
    d = f.modulus
    if not is_odd_prime(d):
        raise ValueError("modulus must be an odd prime")
    a, b, g, dd = f.entries()
    inv2 = pow(2, -1, d)
    with mp.workdps(prec):
        if b != 0:
            binv = pow(b, -1, d)
            # theta = -(1/i^{(d+3)/2}) * legendre(-b | d), a power of i times +-1
            k = ((d + 3) // 2) % 4
            ipow = [mp.mpc(1), mp.mpc(0, 1), mp.mpc(-1), mp.mpc(0, -1)]
            theta = -ipow[(-k) % 4] * legendre(ModInt(-b, d))
            pref = theta / mp.sqrt(d)
            u = [[pref * bignum.root_of_unity(
                    d, (inv2 * binv * (dd * r * r - 2 * r * s + a * s * s)) % d,
                    prec)
                  for s in range(d)] for r in range(d)]
        else:
            theta = mp.mpc(legendre(ModInt(a, d)))
            u = [[mp.mpc(0)] * d for _ in range(d)]
            for s in range(d):
                u[(a * s) % d][s] = theta * bignum.root_of_unity(
                    d, (inv2 * a * g * s * s) % d, prec)
    return MetaplecticUnitary(f, u, theta)


def metaplectic_any(f, prec):
    """Metaplectic unitary for prime or ladder-composite modulus (15, 195).

    Composite matrices are split into kappa-twisted prime factors and the
    factor unitaries are glued with the residue index map r -> (r mod p_f).
    """
    d = f.modulus
    if is_odd_prime(d):
        return metaplectic(f, prec)
    factors = split_to_primes(f)
    mats = [metaplectic(ff, prec).matrix for ff in factors]
    primes = [ff.modulus for ff in factors]
    with mp.workdps(prec):
        u = [[mp.mpc(1)] * d for _ in range(d)]
        for m, p in zip(mats, primes):
            for r in range(d):
                row = m[r % p]
                for s in range(d):
                    u[r][s] *= row[s % p]
    return MetaplecticUnitary(f, u, None)


# ---- gmpy2 helpers for the O(d^2) hot loops ----

def _gm(z, prec):
    digits = prec + 5
    # the workdps matters: mp.mpf() re-rounds to the ambient context
    with mp.workdps(digits):
        return gmpy2.mpc(gmpy2.mpfr(mp.nstr(mp.mpf(z.real), digits)),
                         gmpy2.mpfr(mp.nstr(mp.mpf(z.imag), digits)))


def _gm_matrix(m, prec):
    return [[_gm(z, prec) for z in row] for row in m]


def _gm_roots(d, prec):
    with mp.workdps(prec):
        return [_gm(bignum.root_of_unity(d, k, prec), prec) for k in range(d)]


def covariance_check(f, p, prec, u=None):
    """max-norm residual of U_F D_p - D_{Fp} U_F for a single index pair.

    Works entirely with the monomial structure of D, O(d^2) scalar ops.
    """
    return covariance_check_many(f, [p], prec, u=u)


def covariance_check_many(f, points, prec, u=None):
    """Worst covariance residual over many index pairs; the unitary is
    converted to gmpy2 once, each point then costs O(d^2)."""
    d = f.modulus
    if u is None:
        u = metaplectic_any(f, prec).matrix
    old = gmpy2.get_context().precision
    gmpy2.get_context().precision = int(prec * 3.33) + 20
    try:
        gu = _gm_matrix(u, prec)
        w = _gm_roots(d, prec)
        tau = _gm(bignum.root_of_unity(2 * d, d + 1, prec), prec)  # -e^{i pi/d}
        worst = gmpy2.mpfr(0)
        for p in points:
            i, j = p[0] % d, p[1] % d
            ip, jp = f.apply(i, j)
            tl = tau ** ((i * j) % (2 * d))
            tr = tau ** ((ip * jp) % (2 * d))
            for r in range(d):
                gur = gu[r]
                gro = gu[(r - ip) % d]
                for s in range(d):
                    lhs = gur[(s + i) % d] * tl * w[(j * s) % d]
                    rhs = tr * w[(jp * ((r - ip) % d)) % d] * gro[s]
                    dv = abs(lhs - rhs)
                    if dv > worst:
                        worst = dv
        return mp.mpf(str(worst))
    finally:
        gmpy2.get_context().precision = old


def zauner_unitary(d, rep, prec):
    """Unitary of an order-3 (Zauner-type) symplectic representative."""
    if rep.modulus != d:
        raise ValueError("modulus mismatch")
    if not (rep ** 3 == SymplecticMatrix.identity(d)):
        raise ValueError("representative is not order 3")
    u = metaplectic_any(rep, prec)
    lam, res = unitary_order_phase(u.matrix, 3, prec)
    if res > mp.mpf(10) ** (-(prec - 10)):
        raise ValueError("unitary is not order 3 up to a cube-root phase")
    return u


def unitary_order_phase(u, n, prec):
    """Best root-of-unity lambda with u^n = lambda * I; returns (lambda, resid)."""
    d = len(u)
    un = u
    for _ in range(n - 1):
        un = bignum.matmul(un, u, prec)
    best = None
    for k in range(n):
        lam = bignum.root_of_unity(n, k, prec)
        res = max(abs(un[r][c] - (lam if r == c else 0))
                  for r in range(d) for c in range(d))
        if best is None or res < best[1]:
            best = (lam, res)
    return best


def subspace_projector(u, n, eigenvalue, prec):
    """P = (1/n) sum_k conj(lambda)^k u^k for a unitary of finite order n."""
    d = len(u)
    lam, res = unitary_order_phase(u, n, prec)
    if res > mp.mpf(10) ** (-(prec - 10)) or abs(lam - 1) > mp.mpf(10) ** (-(prec - 10)):
        raise ValueError("u is not of order %d within tolerance" % n)
    with mp.workdps(prec):
        proj = bignum.mat_identity(d)
        pk = bignum.mat_identity(d)
        lbar = mp.conj(eigenvalue)
        acc = [[mp.mpc(x) for x in row] for row in proj]
        for k in range(1, n):
            pk = bignum.matmul(pk, u, prec)
            c = lbar ** k
            for r in range(d):
                for s in range(d):
                    acc[r][s] += c * pk[r][s]
        inv_n = mp.mpf(1) / n
        return [[x * inv_n for x in row] for row in acc]


def sector_trace(factors_a, na, lam_a, factors_b, nb, lam_b, prec):
    """Trace of P_{lam_a}(A) P_{lam_b}(B) for commuting tensor products
    A = (x)_f A_f, B = (x)_f B_f, using per-factor traces only."""
    with mp.workdps(prec):
        pow_a = [_matrix_powers(m, na, prec) for m in factors_a]
        pow_b = [_matrix_powers(m, nb, prec) for m in factors_b]
        total = mp.mpc(0)
        for k in range(na):
            for m2 in range(nb):
                term = mp.conj(lam_a) ** k * mp.conj(lam_b) ** m2
                for pa, pb in zip(pow_a, pow_b):
                    term *= _trace_of_product(pa[k], pb[m2], prec)
                total += term
        return total / (na * nb)


def _matrix_powers(m, n, prec):
    out = [bignum.mat_identity(len(m))]
    for _ in range(n - 1):
        out.append(bignum.matmul(out[-1], m, prec))
    return out


def _trace_of_product(a, b, prec):
    d = len(a)
    with mp.workdps(prec):
        return mp.fsum(a[r][s] * b[s][r] for r in range(d) for s in range(d))
