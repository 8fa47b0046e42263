"""Numerical fiducial search: frame-potential minimization restricted to a
symmetry sector, in two stages -- machine-precision exploration with scipy,
then high-precision Levenberg-Marquardt polishing on the overlap equations.
"""

from dataclasses import dataclass, field

import mpmath as mp
import numpy as np
from scipy.optimize import minimize

from . import bignum, fiducials


@dataclass
class SolverConfig:
    dim: int
    sector: str = 'full'
    seed: int = 0
    restarts: int = 20
    max_iters: int = 2000
    target_exponent: int = 30    # converged when residual < 10^-target
    stage2_prec: int = 80


def sector_basis(dim, sector, prec):
    """Named search sectors as lists of basis vectors."""
    if sector == 'full':
        return [[mp.mpc(1 if r == c else 0) for r in range(dim)]
                for c in range(dim)]
    if dim == 5:
        b5 = fiducials.adapted_basis_5(prec)
        pick = {'zauner-w3': (0, 1), 'zauner-w3^2': (2, 3), 'zauner-1': (4,)}
        if sector in pick:
            return [b5[i].vector for i in pick[sector]]
    if dim == 15 and sector == 'zauner6':
        return [e.vector for e in fiducials.assemble_basis('dim15-zauner6',
                                                           prec)]
    if dim == 195 and sector in ('sym19', 'zauner36'):
        bid = 'dim195-19' if sector == 'sym19' else 'dim195-36'
        return [e.vector for e in fiducials.assemble_basis(bid, prec)]
    raise ValueError("unknown sector %r for dim %d" % (sector, dim))


def frame_residual(v, prec):
    """sum_{p != 0} ((d+1)|<v|D_p v>|^2 - 1)^2 at the given precision."""
    return mp.fsum(x ** 2 for x in _overlap_residuals(v, prec))


def _overlap_residuals(v, prec):
    d = len(v)
    out = []
    with mp.workdps(prec):
        w = [bignum.root_of_unity(d, k, prec) for k in range(d)]
        cv = [mp.conj(x) for x in v]
        for i in range(d):
            a = [cv[r] * v[(r - i) % d] for r in range(d)]
            for j in range(d):
                if (i, j) == (0, 0):
                    continue
                o = mp.fsum(a[r] * w[(j * ((r - i) % d)) % d]
                            for r in range(d))
                out.append((d + 1) * abs(o) ** 2 - 1)
    return out


def _np_objective(E):
    k, d = E.shape
    idx = np.arange(d)
    shift = np.stack([(idx - i) % d for i in range(d)])

    def f(x):
        c = x[:k] + 1j * x[k:]
        v = c @ E
        v = v / np.linalg.norm(v)
        a = v.conj()[None, :] * v[shift]
        o = np.fft.ifft(a, axis=1) * d
        viol = ((d + 1) * np.abs(o) ** 2 - 1) ** 2
        viol[0, 0] = 0.0
        return viol.sum()

    return f


def _refine(c, basis, dim, prec, target_exponent, max_steps=60):
    """Levenberg-Marquardt on the overlap equations, sector coordinates."""
    k = len(c)
    with mp.workdps(prec):
        x = [mp.mpf(v) for v in list(c.real) + list(c.imag)]

        def vec(xx):
            cc = [mp.mpc(xx[t], xx[t + k]) for t in range(k)]
            v = bignum.zeros(dim)
            for ct, e in zip(cc, basis):
                v = bignum.add(v, bignum.scale(ct, e))
            return bignum.normalize(v, prec)

        def res(xx):
            return _overlap_residuals(vec(xx), prec)

        lam = mp.mpf('1e-6')
        r = res(x)
        rn = mp.sqrt(mp.fsum(t ** 2 for t in r))
        h = mp.mpf(10) ** (-prec // 3)
        for _ in range(max_steps):
            if max(abs(t) for t in r) < mp.mpf(10) ** (-target_exponent - 5):
                break
            m = len(r)
            jac = []
            for t in range(2 * k):
                xp = list(x)
                xp[t] += h
                rp = res(xp)
                jac.append([(a - b) / h for a, b in zip(rp, r)])
            # normal equations with Levenberg damping
            jtj = mp.matrix(2 * k, 2 * k)
            jtr = mp.matrix(2 * k, 1)
            for a in range(2 * k):
                for b2 in range(a, 2 * k):
                    s = mp.fsum(jac[a][i] * jac[b2][i] for i in range(m))
                    jtj[a, b2] = jtj[b2, a] = s
                jtr[a] = mp.fsum(jac[a][i] * r[i] for i in range(m))
            stepped = False
            for _try in range(8):
                jd = jtj.copy()
                for a in range(2 * k):
                    jd[a, a] += lam * (1 + jtj[a, a])
                try:
                    delta = mp.lu_solve(jd, -jtr)
                except Exception:
                    lam *= 10
                    continue
                xn = [x[t] + delta[t] for t in range(2 * k)]
                r2 = res(xn)
                rn2 = mp.sqrt(mp.fsum(t ** 2 for t in r2))
                if rn2 < rn:
                    x, r, rn = xn, r2, rn2
                    lam = max(lam / 10, mp.mpf('1e-30'))
                    stepped = True
                    break
                lam *= 10
            if not stepped:
                break
        return vec(x), max(abs(t) for t in r)


def search(config):
    """Seeded multi-restart search; returns (vector, residual, converged).

    residual is the worst single overlap violation of the returned vector;
    converged means it is below 10^-target_exponent.
    """
    prec = config.stage2_prec
    basis = sector_basis(config.dim, config.sector, prec)
    k = len(basis)
    E = np.array([[complex(z) for z in e] for e in basis])
    f = _np_objective(E)
    rng = np.random.default_rng(config.seed)
    best = None
    for _ in range(config.restarts):
        x0 = rng.standard_normal(2 * k)
        r = minimize(f, x0, method='L-BFGS-B',
                     options={'maxiter': config.max_iters})
        if best is None or r.fun < best.fun:
            best = r
        if best.fun < 1e-18:
            break
    c = best.x[:k] + 1j * best.x[k:]
    if best.fun < 1e-10:
        v, worst = _refine(c, basis, config.dim, prec,
                           config.target_exponent)
    else:
        with mp.workdps(prec):
            v = bignum.zeros(config.dim)
            for ct, e in zip(c, basis):
                v = bignum.add(v, bignum.scale(mp.mpc(ct), e))
            v = bignum.normalize(v, prec)
            worst = max(abs(t) for t in _overlap_residuals(v, prec))
    converged = worst < mp.mpf(10) ** (-config.target_exponent)
    return v, worst, converged
