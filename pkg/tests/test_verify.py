import random

import mpmath as mp
import pytest

from sics import bignum
from sics.fiducials import SPECS, build_fiducial
from sics.modarith import CrtSplit, ModInt, SymplecticMatrix, crt_join
from sics.verify import _orbits, sic_check, symmetry_certificate

PREC = 50


def test_sic_check_passes_on_known_fiducial():
    v = build_fiducial(SPECS['5a'], PREC)
    report = sic_check(v, PREC)
    assert report.dim == 5
    assert report.checked_count == 24
    assert report.passes()
    assert report.max_violation < mp.mpf(10) ** -(PREC - 10)


def test_sic_check_fails_on_perturbed_vector():
    v = build_fiducial(SPECS['5a'], PREC)
    with mp.workdps(PREC):
        v[2] = v[2] + mp.mpf(10) ** -8
        v = bignum.normalize(v, PREC)
    report = sic_check(v, PREC)
    assert not report.passes()


def test_sic_check_fails_on_random_vector():
    rng = random.Random(1)
    with mp.workdps(PREC):
        v = bignum.normalize([mp.mpc(rng.random(), rng.random())
                              for _ in range(5)], PREC)
    report = sic_check(v, PREC)
    assert not report.passes()
    assert report.max_violation > mp.mpf(10) ** -3


def test_sic_check_rejects_non_unit_norm():
    with mp.workdps(PREC):
        v = [mp.mpc(1)] * 5
    with pytest.raises(ValueError):
        sic_check(v, PREC)


def test_orbit_reduction_consistent_with_full_sweep():
    z = SymplecticMatrix.make(0, -1, 1, -1, 5)
    reps = _orbits(5, [z])
    # orbits of order-3 action on 24 nonzero points: sizes divide 3
    assert sum(1 for _ in reps) <= 24
    v = build_fiducial(SPECS['5a'], PREC)
    full = sic_check(v, PREC)
    reduced = sic_check(v, PREC, reduce_by_symmetry=True, symmetry=[z])
    assert reduced.checked_count < full.checked_count
    assert reduced.passes()


def test_symmetry_certificate_on_composite_fiducial():
    v = build_fiducial(SPECS['15d'], PREC)
    # the order-3 element diagonal on the adapted product basis: its twisted
    # residues are (1,0;2,1) mod 3 and (0,-1;1,-1) mod 5
    z = crt_join(CrtSplit(SymplecticMatrix.make(1, 0, 2, 1, 3),
                          SymplecticMatrix.make(0, -1, 1, -1, 5),
                          ModInt(2, 5)))
    certs = symmetry_certificate(v, [z], PREC)
    (g, lam, res), = certs
    assert g is z
    assert res < mp.mpf(10) ** -(PREC - 12)
    with mp.workdps(PREC):
        assert abs(lam ** 12 - 1) < mp.mpf(10) ** -(PREC - 12)


def test_symmetry_certificate_large_residual_for_random_vector():
    rng = random.Random(2)
    with mp.workdps(PREC):
        v = bignum.normalize([mp.mpc(rng.random(), rng.random())
                              for _ in range(15)], PREC)
    z = SymplecticMatrix.make(0, -1, 1, -1, 15)
    (_, _, res), = symmetry_certificate(v, [z], PREC)
    assert res > mp.mpf(10) ** -3
