from fractions import Fraction

import mpmath as mp
import pytest

from sics import bignum
from sics.fiducials import (SPECS, adapted_basis_3, adapted_basis_5,
                            adapted_basis_13, assemble_basis, build_fiducial,
                            change_representative, read_spec, sum_moduli,
                            to_adapted, write_spec)
from sics.modarith import SymplecticMatrix
from sics.phases import eval_phase, eval_quadratic
from sics.verify import sic_check

PREC = 40
TOL = mp.mpf(10) ** -(PREC - 8)


def assert_orthonormal(basis, prec):
    with mp.workdps(prec):
        for i, a in enumerate(basis):
            for j, b in enumerate(basis):
                ip = bignum.inner(a.vector, b.vector, prec)
                assert abs(ip - (1 if i == j else 0)) < TOL, (i, j)


def test_component_bases_orthonormal():
    assert_orthonormal(adapted_basis_3(PREC), PREC)
    assert_orthonormal(adapted_basis_5(PREC), PREC)
    assert_orthonormal(adapted_basis_13(PREC), PREC)


def test_basis_sizes_and_labels():
    assert len(assemble_basis('dim5-zauner2', PREC)) == 2
    assert len(assemble_basis('dim15-sym4', PREC)) == 4
    assert len(assemble_basis('dim15-zauner6', PREC)) == 6
    assert len(assemble_basis('dim195-19', PREC)) == 19
    assert len(assemble_basis('dim195-36', PREC)) == 36
    with pytest.raises(ValueError):
        assemble_basis('dim7-zauner', PREC)
    labels5 = [e.labels for e in adapted_basis_5(PREC)]
    assert len(set(labels5)) == 5


def test_tensor_bases_orthonormal():
    assert_orthonormal(assemble_basis('dim15-zauner6', PREC), PREC)


def test_exact_norm_factors():
    for e in adapted_basis_5(PREC)[:4]:
        assert e.norm_factor_sq > 0
    for e in adapted_basis_13(PREC):
        assert e.norm_factor_sq in (Fraction(1), Fraction(12))


def test_sum_moduli_exactly_one_for_all_specs():
    for name, spec in SPECS.items():
        s = sum_moduli(spec)
        assert (s.q1, s.q2) == (Fraction(1), Fraction(0)), name


def test_moduli_nonnegative_numerically():
    for name, spec in SPECS.items():
        with mp.workdps(30):
            for p, _ in spec.entries:
                assert eval_quadratic(p, 30) > -mp.mpf(10) ** -25, name


def test_build_unit_norm():
    for name in ('5a', '15d', '15b'):
        v = build_fiducial(SPECS[name], PREC)
        with mp.workdps(PREC):
            assert abs(bignum.norm(v, PREC) - 1) < TOL


def test_build_and_adapt_round_trip():
    for name in ('5a', '15d', '15b'):
        spec = SPECS[name]
        v = build_fiducial(spec, PREC)
        pairs, residual = to_adapted(v, spec.basis_id, PREC)
        assert abs(residual) < TOL
        with mp.workdps(PREC):
            for (p, ang), (pw, fw) in zip(pairs, spec.entries):
                assert abs(p - eval_quadratic(pw, PREC)) < TOL
                if fw is not None and p > mp.mpf(10) ** -10:
                    got = mp.expj(ang)
                    want = eval_phase(fw, PREC)
                    assert abs(got - want) < TOL


def test_to_adapted_rejects_zero_gauge():
    basis = assemble_basis('dim5-zauner2', PREC)
    # a vector orthogonal to the first basis vector has no usable gauge
    v = basis[1].vector
    with pytest.raises(ValueError):
        to_adapted(v, 'dim5-zauner2', PREC)


def test_change_representative_preserves_sic():
    v = build_fiducial(SPECS['5a'], PREC)
    g = SymplecticMatrix.make(1, 1, 0, 1, 5)
    w = change_representative(v, g, PREC)
    with mp.workdps(PREC):
        w = bignum.normalize(w, PREC)
    assert sic_check(w, PREC).passes()


def test_spec_file_round_trip(tmp_path):
    for name in ('15d', '195b'):
        spec = SPECS[name]
        path = str(tmp_path / (name + ".spec"))
        write_spec(path, spec)
        back = read_spec(path)
        assert back.dim == spec.dim and back.basis_id == spec.basis_id
        assert len(back.entries) == len(spec.entries)
        with mp.workdps(60):
            for (p1, f1), (p2, f2) in zip(back.entries, spec.entries):
                assert (p1.q1, p1.q2) == (p2.q1, p2.q2)
                if f2 is None:
                    assert f1 is None
                else:
                    assert abs(eval_phase(f1, 60) - eval_phase(f2, 60)) \
                        < mp.mpf(10) ** -55
