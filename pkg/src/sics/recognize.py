"""Numeric-to-exact recognition: integer relations by lattice reduction,
quadratic-field moduli, Pythagorean-dictionary phases, and the precision
sweep that measures the minimum digits needed for full recovery.

Phase recognition works in argument space.  Pure roots of unity (including
Q2 = w3) are kept out of the relation columns -- their contribution is
commensurate with 2 pi and would make the lattice degenerate -- so the
relation is sought over the arguments of the non-root generators plus a
2 pi column, with the target angle scaled by 3 * max_exp_den to clear the
root-of-unity denominators that the w3-content of the tables introduces.
"""

from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from . import bignum
from .fiducials import FiducialSpec, SPECS, build_fiducial, to_adapted
from .phases import (BaseProduct, PhaseExpression, QuadraticElement,
                     eval_phase, eval_pythagorean, eval_quadratic, quad)


@dataclass
class IntegerRelation:
    coefficients: list
    residual: object
    input_precision: int


@dataclass
class RecognizedPhase:
    expression: PhaseExpression
    residual: object


def lll_reduce(basis, delta=Fraction(99, 100)):
    """Integer LLL with exact rational Gram-Schmidt data, kept incrementally:
    size reductions only touch the mu rows, swaps only the two affected
    Gram-Schmidt norms (the rows of [I | N x] are always independent)."""
    b = [list(row) for row in basis]
    n = len(b)

    def dot(u, v):
        return sum(x * y for x, y in zip(u, v))

    mu = [[Fraction(0)] * n for _ in range(n)]
    B = [Fraction(0)] * n
    gs = []
    for i in range(n):
        w = [Fraction(x) for x in b[i]]
        for j in range(i):
            mu[i][j] = Fraction(dot(b[i], gs[j])) / B[j]
            w = [a - mu[i][j] * c for a, c in zip(w, gs[j])]
        gs.append(w)
        B[i] = dot(w, w)

    def size_reduce(k, l):
        q = round(mu[k][l])
        if q != 0:
            b[k] = [x - q * y for x, y in zip(b[k], b[l])]
            for j in range(l):
                mu[k][j] -= q * mu[l][j]
            mu[k][l] -= q

    k = 1
    while k < n:
        size_reduce(k, k - 1)
        if B[k] >= (delta - mu[k][k - 1] ** 2) * B[k - 1]:
            for l in range(k - 2, -1, -1):
                size_reduce(k, l)
            k += 1
        else:
            m = mu[k][k - 1]
            Bk1 = B[k] + m * m * B[k - 1]
            b[k], b[k - 1] = b[k - 1], b[k]
            mu[k][k - 1] = m * B[k - 1] / Bk1
            B[k] = B[k - 1] * B[k] / Bk1
            B[k - 1] = Bk1
            for j in range(k - 1):
                mu[k - 1][j], mu[k][j] = mu[k][j], mu[k - 1][j]
            for i in range(k + 1, n):
                t = mu[i][k]
                mu[i][k] = mu[i][k - 1] - m * t
                mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]
            k = max(k - 1, 1)
    return b


def find_relation(values, coeff_bound, prec):
    """Smallest integer relation sum c_i x_i = 0 found by lattice reduction.

    Returns IntegerRelation or None; requires prec >= 10 working digits.
    """
    if prec < 10:
        raise ValueError("precision below 10 digits is not usable")
    k = len(values)
    scale = mp.mpf(10) ** (prec - 2)
    with mp.workdps(prec + 10):
        ints = [int(mp.nint(mp.mpf(x) * scale)) for x in values]
    rows = [[1 if c == r else 0 for c in range(k)] + [ints[r]]
            for r in range(k)]
    red = lll_reduce(rows)
    best = None
    with mp.workdps(prec + 10):
        for row in red:
            coeffs = row[:k]
            if all(c == 0 for c in coeffs):
                continue
            resid = abs(mp.fsum(c * mp.mpf(x) for c, x in zip(coeffs, values)))
            if max(abs(c) for c in coeffs) > coeff_bound:
                continue
            if resid > mp.mpf(10) ** (-(prec * 6) // 10):
                continue
            size = sum(c * c for c in coeffs)
            if best is None or size < best[0]:
                best = (size, coeffs, resid)
    if best is None:
        return None
    return IntegerRelation(list(best[1]), best[2], prec)


def recognize_quadratic(x, D, max_den, prec):
    """x = q1 + q2 sqrt(D) with denominators <= max_den, or None."""
    with mp.workdps(prec + 10):
        vals = [mp.mpf(1), mp.sqrt(D), mp.mpf(x)]
    rel = find_relation(vals, 2 * max_den, prec)
    if rel is None:
        return None
    a, b, c = rel.coefficients
    if c == 0:
        return None
    q1, q2 = Fraction(-a, c), Fraction(-b, c)
    if q1.denominator > max_den or q2.denominator > max_den:
        return None
    cand = QuadraticElement(q1, q2, D)
    with mp.workdps(prec + 10):
        if abs(eval_quadratic(cand, prec + 10) - mp.mpf(x)) \
                > mp.mpf(10) ** (-(prec - 4)):
            return None
    return cand


DICTIONARIES = {
    5: ('P5',),
    15: ('P5', 'P13', 'Q13'),
    195: ('P5', 'P13', 'Q13', 'P37', 'Q37', 'P241', 'Q241'),
}


def recognize_phase(angle, dictionary, max_exp_den=24, prec=50):
    """Express angle as sum of rational multiples of generator arguments plus
    a rational multiple of 2 pi; returns RecognizedPhase or None."""
    if mp.isnan(mp.mpf(angle)):
        raise ValueError("gauge-undefined angle")
    scale = 3 * max_exp_den
    with mp.workdps(prec + 10):
        if abs(mp.mpf(angle)) < mp.mpf(10) ** (-(prec - 6)):
            return RecognizedPhase(PhaseExpression(), abs(mp.mpf(angle)))
        args = [mp.arg(eval_pythagorean(kind, prec + 10))
                for kind in dictionary]
        vals = args + [2 * mp.pi, scale * mp.mpf(angle)]
    rel = find_relation(vals, 40 * scale, prec)
    if rel is None:
        return None
    *cs, c2pi, cang = rel.coefficients
    if cang == 0:
        return None
    den = -cang * scale
    exps = [Fraction(c, den) for c in cs]
    root = Fraction(c2pi, den)
    if any(e.denominator > max_exp_den for e in exps):
        return None
    factors = tuple((BaseProduct(1, Fraction(0), ((kind, 1),)), e)
                    for kind, e in zip(dictionary, exps) if e != 0)
    expr = PhaseExpression(1, root % 1, factors)
    with mp.workdps(prec + 10):
        got = eval_phase(expr, prec + 10)
        target = mp.expj(mp.mpf(angle))
        resid = abs(got - target)
    if resid > mp.mpf(10) ** (-(prec - 6)):
        return None
    return RecognizedPhase(expr, resid)


@dataclass
class ConvertReport:
    entries: list        # per entry dicts: index, status, modulus, phase, residual
    spec: object         # FiducialSpec when every entry succeeded, else None

    def ok(self):
        return self.spec is not None

    def render(self):
        from .phases import format_phase
        lines = []
        for e in self.entries:
            if e['status'] == 'ok':
                ph = '---' if e['phase'] is None else format_phase(e['phase'])
                lines.append("{index: %d, status: ok, modulus: \"%s\", "
                             "phase: \"%s\", residual: %s}"
                             % (e['index'], e['modulus'], ph,
                                mp.nstr(e['residual'], 3)))
            else:
                lines.append("{index: %d, status: failed, stage: %s}"
                             % (e['index'], e['stage']))
        return "\n".join(lines)


def convert(v, basis_id, D=3, dictionary=None, prec=50, max_den=1200,
            max_exp_den=24, name='candidate'):
    """to_adapted + per-entry recognition; failures are data, not errors."""
    d = len(v)
    if dictionary is None:
        dictionary = DICTIONARIES.get(d, DICTIONARIES[195])
    pairs, _residual = to_adapted(v, basis_id, prec)
    return convert_pairs(pairs, basis_id, d, D, dictionary, prec,
                         max_den, max_exp_den, name)


def convert_pairs(pairs, basis_id, dim, D, dictionary, prec, max_den=1200,
                  max_exp_den=24, name='candidate'):
    entries = []
    spec_rows = []
    all_ok = True
    with mp.workdps(prec + 10):
        zero_cut = mp.mpf(10) ** (-prec // 2)
    for idx, (p, ang) in enumerate(pairs):
        if p < zero_cut:
            entries.append({'index': idx, 'status': 'ok',
                            'modulus': quad(0, 0, D), 'phase': None,
                            'residual': mp.mpf(p)})
            spec_rows.append((quad(0, 0, D), None))
            continue
        q = recognize_quadratic(p, D, max_den, prec)
        if q is None:
            entries.append({'index': idx, 'status': 'failed',
                            'stage': 'modulus'})
            all_ok = False
            continue
        ph = recognize_phase(ang, dictionary, max_exp_den, prec)
        if ph is None:
            entries.append({'index': idx, 'status': 'failed',
                            'stage': 'phase'})
            all_ok = False
            continue
        entries.append({'index': idx, 'status': 'ok', 'modulus': q,
                        'phase': ph.expression, 'residual': ph.residual})
        spec_rows.append((q, ph.expression))
    spec = None
    if all_ok:
        spec = FiducialSpec(name, dim, basis_id, tuple(spec_rows))
        if sum(p.q1 for p, _ in spec.entries) != 1 \
                or sum(p.q2 for p, _ in spec.entries) != 0:
            spec = None   # never emit a spec violating exact normalization
    return ConvertReport(entries, spec)


def phases_match(a, b, prec=60):
    """Semantic equality of two phase expressions at high precision."""
    if a is None or b is None:
        return a is None and b is None
    with mp.workdps(prec):
        return abs(eval_phase(a, prec) - eval_phase(b, prec)) \
            < mp.mpf(10) ** (-(prec - 10))


def _spec_matches(got, want):
    if got is None or len(got.entries) != len(want.entries):
        return False
    for (p1, f1), (p2, f2) in zip(got.entries, want.entries):
        if p1.q1 != p2.q1 or p1.q2 != p2.q2:
            return False
        if not phases_match(f1, f2):
            return False
    return True


def precision_sweep(name, step=5, build_prec=150, moduli_start=30,
                    phase_start=100):
    """Minimum truncation digits at which moduli and phases of the embedded
    fiducial are still fully recovered; sweeps downward in the given step."""
    spec = SPECS[name]
    v = build_fiducial(spec, build_prec)
    pairs, _ = to_adapted(v, spec.basis_id, build_prec)
    dictionary = DICTIONARIES.get(spec.dim, DICTIONARIES[195])

    def moduli_ok(q):
        try:
            for (p, _), (pw, _) in zip(pairs, spec.entries):
                if eval_quadratic(pw, 20) < mp.mpf(10) ** -10:
                    continue
                got = recognize_quadratic(bignum.truncate(p, q), 3, 1200, q)
                if got is None or got.q1 != pw.q1 or got.q2 != pw.q2:
                    return False
            return True
        except ValueError:
            return False

    def phases_ok(q):
        try:
            for (p, ang), (pw, fw) in zip(pairs, spec.entries):
                if fw is None:
                    continue
                got = recognize_phase(bignum.truncate(ang, q), dictionary,
                                      24, q)
                if got is None or not phases_match(got.expression, fw):
                    return False
            return True
        except ValueError:
            return False

    def min_digits(ok, start):
        best = None
        q = start
        while q >= 5:
            if ok(q):
                best = q
            else:
                if best is not None:
                    break
            q -= step
        return best

    return min_digits(moduli_ok, moduli_start), \
        min_digits(phases_ok, phase_start)
