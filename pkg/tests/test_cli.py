import random

import mpmath as mp

from sics import bignum
from sics.cli import run
from sics.fiducials import SPECS, read_spec
from sics.recognize import _spec_matches


def test_build_then_verify_passes(tmp_path, capsys):
    out = str(tmp_path / "f5a.txt")
    assert run(['build', '--fiducial', '5a', '--precision', '60',
                '--out', out]) == 0
    assert run(['verify', '--in', out]) == 0
    text = capsys.readouterr().out
    assert 'max_violation' in text


def test_verify_fails_on_random_vector(tmp_path):
    rng = random.Random(0)
    path = str(tmp_path / "rand.txt")
    with mp.workdps(60):
        v = bignum.normalize([mp.mpc(rng.random(), rng.random())
                              for _ in range(5)], 60)
    bignum.write_vector(path, v, 60)
    assert run(['verify', '--in', path]) == 1


def test_adapt_prints_rows(tmp_path, capsys):
    out = str(tmp_path / "f.txt")
    run(['build', '--fiducial', '5a', '--precision', '60', '--out', out])
    assert run(['adapt', '--in', out, '--basis', 'dim5-zauner2']) == 0
    text = capsys.readouterr().out
    assert 'off-span residual' in text


def test_recognize_round_trip(tmp_path, capsys):
    vec = str(tmp_path / "f.txt")
    spc = str(tmp_path / "f.spec")
    run(['build', '--fiducial', '5a', '--precision', '80', '--out', vec])
    assert run(['recognize', '--in', vec, '--basis', 'dim5-zauner2',
                '--precision', '50', '--out', spc]) == 0
    text = capsys.readouterr().out
    assert 'sum of moduli-squared' in text
    assert _spec_matches(read_spec(spc), SPECS['5a'])


def test_recognize_fails_on_random_vector(tmp_path):
    rng = random.Random(1)
    path = str(tmp_path / "rand.txt")
    with mp.workdps(60):
        v = bignum.normalize([mp.mpc(rng.random(), rng.random())
                              for _ in range(5)], 60)
    bignum.write_vector(path, v, 60)
    assert run(['recognize', '--in', path, '--basis', 'dim5-zauner2',
                '--precision', '50']) == 1


def test_solve_writes_verifiable_vector(tmp_path):
    out = str(tmp_path / "solved.txt")
    assert run(['solve', '--dim', '5', '--sector', 'zauner-w3',
                '--seed', '3', '--restarts', '6', '--precision', '60',
                '--out', out]) == 0
    assert run(['verify', '--in', out]) == 0


def test_usage_errors_exit_2(capsys):
    assert run(['frobnicate']) == 2
    assert run([]) == 2
    assert run(['build', '--fiducial', 'nope', '--out', 'x']) == 2
    capsys.readouterr()


def test_missing_file_exits_1(capsys):
    assert run(['verify', '--in', '/nonexistent/path.txt']) == 1
    assert 'error' in capsys.readouterr().err
