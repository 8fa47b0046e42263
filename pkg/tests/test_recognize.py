import random
from fractions import Fraction

import mpmath as mp
import pytest

from sics import bignum
from sics.fiducials import SPECS, build_fiducial, to_adapted
from sics.phases import eval_phase, eval_quadratic, parse_phase
from sics.recognize import (DICTIONARIES, _spec_matches, convert,
                            find_relation, lll_reduce, phases_match,
                            recognize_phase, recognize_quadratic)


def test_lll_reduce_shortens_basis():
    basis = [[1, 0, 0, 10000], [0, 1, 0, 9999], [0, 0, 1, 1]]
    red = lll_reduce(basis)
    norms = [sum(x * x for x in row) for row in red]
    assert min(norms) <= 3   # contains a short relation like (1,-1,1,*) area
    # reduction preserves the lattice: every output row is integral
    assert all(isinstance(x, int) or x == int(x) for row in red for x in row)


def test_find_relation_quadratic():
    with mp.workdps(60):
        vals = [mp.mpf(1), mp.sqrt(3), mp.sqrt(3) / 4]
    rel = find_relation(vals, 100, 50)
    assert rel is not None
    a, b, c = rel.coefficients
    assert a == 0 and (b, c) in ((1, -4), (-1, 4))


def test_find_relation_rational():
    with mp.workdps(60):
        vals = [mp.mpf(1), mp.mpf(1) / 2]
    rel = find_relation(vals, 100, 50)
    assert rel is not None
    a, b = rel.coefficients
    assert (a, b) in ((1, -2), (-1, 2))


def test_find_relation_none_for_transcendental():
    with mp.workdps(60):
        vals = [mp.mpf(1), mp.pi, mp.sqrt(2)]
    assert find_relation(vals, 50, 50) is None


def test_find_relation_rejects_low_precision():
    with pytest.raises(ValueError):
        find_relation([mp.mpf(1), mp.mpf(2)], 10, 5)


def test_recognize_quadratic_known_values():
    cases = [(Fraction(3, 4), Fraction(-1, 4)), (Fraction(19, 182),
             Fraction(-4, 91)), (Fraction(0), Fraction(1, 84))]
    for q1, q2 in cases:
        with mp.workdps(60):
            x = mp.mpf(q1.numerator) / q1.denominator \
                + mp.mpf(q2.numerator) / q2.denominator * mp.sqrt(3)
        got = recognize_quadratic(x, 3, 1200, 50)
        assert got is not None and (got.q1, got.q2) == (q1, q2)


def test_recognize_quadratic_fails_on_random_real():
    rng = random.Random(5)
    with mp.workdps(60):
        x = mp.mpf(rng.random())
    assert recognize_quadratic(x, 3, 1200, 50) is None


def test_recognize_phase_zero_angle():
    got = recognize_phase(mp.mpf(0), DICTIONARIES[5])
    assert got is not None
    with mp.workdps(50):
        assert abs(eval_phase(got.expression, 50) - 1) < mp.mpf(10) ** -40


def test_recognize_phase_samples():
    samples = ["P5^(1/4)", "-i * P5^(1/4)",
               "w3 * P5^(1/12) * (-Q13*P13)^(-1/4)"]
    for s in samples:
        want = parse_phase(s)
        with mp.workdps(80):
            ang = mp.arg(eval_phase(want, 80))
        got = recognize_phase(ang, DICTIONARIES[15], 24, 60)
        assert got is not None, s
        assert phases_match(got.expression, want), s


def test_recognize_phase_rejects_random_angle():
    rng = random.Random(6)
    with mp.workdps(60):
        ang = mp.mpf(rng.random()) * 3
    assert recognize_phase(ang, DICTIONARIES[15], 24, 50) is None


def test_recognize_phase_rejects_nan():
    with pytest.raises(ValueError):
        recognize_phase(mp.nan, DICTIONARIES[5])


def test_convert_round_trips_embedded_specs():
    for name in ('5a', '15d', '15b'):
        spec = SPECS[name]
        v = build_fiducial(spec, 150)
        report = convert(v, spec.basis_id, prec=50)
        assert report.ok(), name
        assert _spec_matches(report.spec, spec), name


def test_convert_fails_cleanly_on_random_vector():
    rng = random.Random(7)
    with mp.workdps(60):
        v = bignum.normalize([mp.mpc(rng.random(), rng.random())
                              for _ in range(5)], 60)
    report = convert(v, 'dim5-zauner2', prec=50)
    assert not report.ok()
    assert report.spec is None
    assert any(e['status'] == 'failed' for e in report.entries)


def test_convert_never_emits_unnormalized_spec():
    # feed moduli pairs that recognize fine but sum to 1/2, not 1
    spec = SPECS['5a']
    v = build_fiducial(spec, 120)
    pairs, _ = to_adapted(v, spec.basis_id, 120)
    with mp.workdps(120):   # halving at ambient dps would round to 15 digits
        halved = [(p / 2, ang) for p, ang in pairs]
    from sics.recognize import convert_pairs
    report = convert_pairs(halved, spec.basis_id, 5, 3,
                           DICTIONARIES[5], 50)
    assert all(e['status'] == 'ok' for e in report.entries)
    assert report.spec is None
