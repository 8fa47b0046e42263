import random

import mpmath as mp
import pytest

from sics import bignum
from sics.heisenberg import (clock_shift, covariance_check,
                             covariance_check_many, displace_vector,
                             displacement, displacement_split_index,
                             metaplectic, metaplectic_any,
                             subspace_projector, unitary_order_phase,
                             zauner_unitary)
from conftest import rand_symplectic
from sics.modarith import SymplecticMatrix, split_to_primes

PREC = 30
TOL = mp.mpf(10) ** -(PREC - 8)


def test_clock_shift_commutation():
    d = 7
    z, x = clock_shift(d, PREC)
    with mp.workdps(PREC):
        zx = bignum.matmul(z, x, PREC)
        xz = bignum.matmul(x, z, PREC)
        w = bignum.root_of_unity(d, 1, PREC)
        scaled = [[w * e for e in row] for row in xz]
        assert bignum.max_abs_diff(zx, scaled) < TOL


def test_displacement_matches_clock_shift_product():
    d = 5
    z, x = clock_shift(d, PREC)
    with mp.workdps(PREC):
        for (i, j) in [(1, 0), (0, 1), (2, 3), (4, 4)]:
            m = bignum.mat_identity(d)
            for _ in range(i):
                m = bignum.matmul(x, m, PREC)
            for _ in range(j):
                m = bignum.matmul(m, z, PREC)
            tau = bignum.root_of_unity(2 * d, (d + 1) * i * j, PREC)
            m = [[tau * e for e in row] for row in m]
            assert bignum.max_abs_diff(displacement(i, j, d, PREC), m) < TOL


def test_displace_vector_agrees_with_dense():
    d = 13
    rng = random.Random(0)
    with mp.workdps(PREC):
        v = bignum.normalize([mp.mpc(rng.random(), rng.random())
                              for _ in range(d)], PREC)
        for _ in range(5):
            i, j = rng.randrange(d), rng.randrange(d)
            dense = bignum.matvec(displacement(i, j, d, PREC), v, PREC)
            fast = displace_vector(v, i, j, PREC)
            assert max(abs(a - b) for a, b in zip(dense, fast)) < TOL


def test_displacement_index_split_consistency():
    # the twisted residue map sends D_p at d=195 to the product of factor
    # displacements; check on the matrix entries at a few index pairs
    rng = random.Random(2)
    with mp.workdps(PREC):
        for _ in range(5):
            i, j = rng.randrange(195), rng.randrange(195)
            parts = displacement_split_index(i, j, 195)
            assert [p for p, _, _ in parts] == [13, 3, 5]
            mats = {p: displacement(ii, jj, p, PREC)
                    for p, ii, jj in parts}
            d195 = displacement(i, j, 195, PREC)
            # tensor of factor displacements equals D up to one global
            # phase; the ratio on the nonzero support must be constant
            ratios = []
            for s in [rng.randrange(195) for _ in range(8)]:
                r = (s + i) % 195
                prod = mats[13][r % 13][s % 13] \
                    * mats[3][r % 3][s % 3] * mats[5][r % 5][s % 5]
                ratios.append(d195[r][s] / prod)
            assert max(abs(x - ratios[0]) for x in ratios) < TOL


def test_metaplectic_is_unitary_and_faithful():
    rng = random.Random(4)
    for d in (5, 13):
        for _ in range(5):
            f, g = rand_symplectic(d, rng), rand_symplectic(d, rng)
            uf = metaplectic(f, PREC)
            assert bignum.is_unitary(uf.matrix, PREC)
            prod = bignum.matmul(uf.matrix, metaplectic(g, PREC).matrix, PREC)
            up = metaplectic(f * g, PREC).matrix
            with mp.workdps(PREC):
                assert bignum.max_abs_diff(prod, up) < TOL


def test_metaplectic_rejects_composite():
    with pytest.raises(ValueError):
        metaplectic(SymplecticMatrix.identity(15), PREC)


def test_metaplectic_any_is_tensor_of_factors():
    rng = random.Random(5)
    f = rand_symplectic(15, rng)
    u = metaplectic_any(f, PREC).matrix
    mats = {ff.modulus: metaplectic(ff, PREC).matrix
            for ff in split_to_primes(f)}
    with mp.workdps(PREC):
        for r in range(15):
            for s in range(15):
                assert abs(u[r][s] - mats[3][r % 3][s % 3]
                           * mats[5][r % 5][s % 5]) < TOL


def test_zauner_unitary_has_order_three():
    for d in (5, 13, 15):
        rep = SymplecticMatrix.make(0, -1, 1, -1, d)
        u = zauner_unitary(d, rep, PREC)
        lam, res = unitary_order_phase(u.matrix, 3, PREC)
        assert res < TOL
        assert abs(lam - 1) < TOL


def test_zauner_unitary_rejects_wrong_order():
    with pytest.raises(ValueError):
        zauner_unitary(5, SymplecticMatrix.make(2, 0, 0, 3, 5), PREC)


def test_covariance_prime_and_composite():
    rng = random.Random(6)
    for d in (5, 13, 15):
        rep = SymplecticMatrix.make(0, -1, 1, -1, d)
        u = metaplectic_any(rep, PREC)
        pts = [(rng.randrange(d), rng.randrange(d)) for _ in range(8)]
        pts = [p for p in pts if p != (0, 0)]
        assert covariance_check_many(rep, pts, PREC, u=u.matrix) < TOL
        assert covariance_check(rep, pts[0], PREC, u=u.matrix) < TOL


def test_subspace_projector_idempotent():
    d = 5
    rep = SymplecticMatrix.make(0, -1, 1, -1, d)
    u = zauner_unitary(d, rep, PREC)
    dims = []
    with mp.workdps(PREC):
        for k in range(3):
            lam = bignum.root_of_unity(3, k, PREC)
            p = subspace_projector(u.matrix, 3, lam, PREC)
            p2 = bignum.matmul(p, p, PREC)
            assert bignum.max_abs_diff(p, p2) < TOL
            tr = mp.fsum(p[r][r] for r in range(d))
            assert abs(tr - mp.nint(tr.real)) < TOL
            dims.append(int(mp.nint(tr.real)))
    assert sorted(dims) == [1, 2, 2]
    assert sum(dims) == d
