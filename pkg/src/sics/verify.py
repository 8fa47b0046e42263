"""High-precision verification of the SIC condition and symmetry certificates.

The overlap sweep works with the monomial structure of the displacements:
for each shift i the overlaps over all j are d values of one twisted
correlation sum, O(d) each, never a dense matrix product.  The inner loop
runs on gmpy2 floats.
"""

from dataclasses import dataclass

import gmpy2
import mpmath as mp

from . import bignum
from .heisenberg import metaplectic_any
from .modarith import SymplecticMatrix


@dataclass
class OverlapReport:
    dim: int
    max_violation: object
    worst_index: tuple
    checked_count: int
    precision: int

    def render(self):
        return ("dim=%d precision=%d checked=%d max_violation=%s worst=%s"
                % (self.dim, self.precision, self.checked_count,
                   mp.nstr(self.max_violation, 4), (self.worst_index,)))

    def passes(self):
        return self.max_violation < mp.mpf(10) ** (-self.precision // 2)


def _orbits(d, generators):
    """Orbit representatives of the index set under p -> Fp."""
    seen = set()
    reps = []
    for i in range(d):
        for j in range(d):
            if (i, j) == (0, 0) or (i, j) in seen:
                continue
            reps.append((i, j))
            stack = [(i, j)]
            seen.add((i, j))
            while stack:
                q = stack.pop()
                for g in generators:
                    q2 = g.apply(*q)
                    if q2 not in seen:
                        seen.add(q2)
                        stack.append(q2)
    return reps


def sic_check(v, prec, reduce_by_symmetry=False, symmetry=None):
    """Full (or orbit-reduced) sweep of | (d+1)|<v|D_p v>|^2 - 1 | over p != 0."""
    d = len(v)
    nv = bignum.norm(v, prec)
    if abs(nv - 1) > mp.mpf(10) ** (-(prec - 10)):
        raise ValueError("input vector is not unit norm")
    wanted = None
    if reduce_by_symmetry and symmetry:
        wanted = set(_orbits(d, symmetry))
    old = gmpy2.get_context().precision
    gmpy2.get_context().precision = int(prec * 3.33) + 20
    try:
        digits = prec + 5
        def g(z):
            return gmpy2.mpc(gmpy2.mpfr(mp.nstr(mp.mpf(z.real), digits)),
                             gmpy2.mpfr(mp.nstr(mp.mpf(z.imag), digits)))
        with mp.workdps(prec):
            gv = [g(mp.mpc(z)) for z in v]
            w = [g(bignum.root_of_unity(d, k, prec)) for k in range(d)]
        gcv = [gmpy2.mpc(z.real, -z.imag) for z in gv]
        worst = gmpy2.mpfr(-1)
        worst_p = None
        count = 0
        for i in range(d):
            a = [gcv[r] * gv[(r - i) % d] for r in range(d)]
            for j in range(d):
                if (i, j) == (0, 0):
                    continue
                if wanted is not None and (i, j) not in wanted:
                    continue
                acc = gmpy2.mpc(0)
                for r in range(d):
                    acc += a[r] * w[(j * ((r - i) % d)) % d]
                viol = abs((d + 1) * (acc.real * acc.real
                                      + acc.imag * acc.imag) - 1)
                count += 1
                if viol > worst:
                    worst, worst_p = viol, (i, j)
        return OverlapReport(d, mp.mpf(str(worst)), worst_p, count, prec)
    finally:
        gmpy2.get_context().precision = old


def symmetry_certificate(v, generators, prec):
    """For each symplectic generator, the root-of-unity eigenvalue (order
    up to 12) best explaining U_g v = lambda v, with the max-norm residual."""
    out = []
    with mp.workdps(prec):
        for g in generators:
            u = metaplectic_any(g, prec)
            uv = bignum.matvec(u.matrix, v, prec)
            best = None
            for k in range(12):
                lam = bignum.root_of_unity(12, k, prec)
                res = max(abs(x - lam * y) for x, y in zip(uv, v))
                if best is None or res < best[1]:
                    best = (lam, res)
            out.append((g, best[0], best[1]))
    return out
