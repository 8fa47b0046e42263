"""Embedded exact fiducial data (5a, 15d, 15b, 195d, 195b), symmetry-adapted
bases in dimensions 3, 5, 13 and their tensor assemblies in 15 and 195, and
fiducial vector construction in the standard basis.

Basis label conventions: each basis vector is tagged with its eigenvalues
under the order-3 unitary (written 1, w3, w3^2) and the secondary generator
(parity or the order-12 centralizer generator), written + or -.  In d = 13
the two (1,-) vectors are disambiguated a/b, with a the lone C^1 summand.

Two table entries required branch calibration against the SIC property (see
the phase strings marked below); everything else is the principal branch.
"""

from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from . import bignum
from .heisenberg import metaplectic_any
from .phases import (PhaseExpression, QuadraticElement, eval_phase,
                     eval_quadratic, format_phase, parse_phase, quad)


@dataclass
class AdaptedBasisVector:
    labels: tuple
    vector: list
    norm_factor_sq: object   # exact: |unnormalized|^2


@dataclass(frozen=True)
class FiducialSpec:
    name: str
    dim: int
    basis_id: str
    entries: tuple           # of (QuadraticElement, PhaseExpression or None)


# ---- dimension 5: the five centralizer eigenvectors, hard-coded ----

def _raw5(prec):
    with mp.workdps(prec):
        w5 = [bignum.root_of_unity(5, k, prec) for k in range(5)]
        w3 = bignum.root_of_unity(3, 1, prec)
        s5 = mp.sqrt(5)
        raw = [
            [4*w5[1] - 2*w5[4] + 2*w3*(w5[3] - w5[4]),
             w5[3] + w5[4] + w3*(1 + 2*w5[3] + 2*w5[4]),
             4*w5[2] + 3*w5[4] + 3*w3*(w5[4] - 1),
             4*w5[2] + 3*w5[4] + 3*w3*(w5[4] - 1),
             w5[3] + w5[4] + w3*(1 + 2*w5[3] + 2*w5[4])],
            [mp.mpc(0), w5[1] - w5[3] + s5*w3, 1 - w5[4], -1 + w5[4],
             -w5[1] + w5[3] - s5*w3],
            [4*w5[1] - 2*w5[4] + 2*w3*(w5[3] - w5[4]),
             4 + 3*w5[2] + 3*w3*(w5[2] - w5[3]),
             1 + w5[1] - w3*(2*w5[3] + 2*w5[4] + w5[2]),
             1 + w5[1] - w3*(2*w5[3] + 2*w5[4] + w5[2]),
             4 + 3*w5[2] + 3*w3*(w5[2] - w5[3])],
            [mp.mpc(0), w5[3] - w5[2], w5[1] - w5[4] + s5*w3**2*w5[2],
             w5[4] - w5[1] - s5*w3**2*w5[2], w5[2] - w5[3]],
        ]
        e4 = [(w3**2 - w3)/15 * z for z in
              [4 + 3*w5[1] + 2*w5[2] + 6*w5[3],
               -1 - 2*w5[1] - 3*w5[2] + w5[3],
               4 + 3*w5[1] + 2*w5[2] + w5[3],
               4 + 3*w5[1] + 2*w5[2] + w5[3],
               -1 - 2*w5[1] - 3*w5[2] + w5[3]]]
        return raw, e4


_LABELS5 = [('w3', '+'), ('w3', '-'), ('w3^2', '+'), ('w3^2', '-'), ('1', '+')]


def adapted_basis_5(prec):
    raw, e4 = _raw5(prec)
    out = []
    with mp.workdps(prec):
        for lab, v in zip(_LABELS5[:4], raw):
            n2 = mp.fsum(abs(z)**2 for z in v)
            n2_exact = int(mp.nint(n2))
            nv = mp.sqrt(n2)
            out.append(AdaptedBasisVector(lab, [z / nv for z in v],
                                          Fraction(n2_exact)))
        out.append(AdaptedBasisVector(_LABELS5[4], e4, Fraction(1)))
    return out


# ---- dimension 3 ----

_LABELS3 = [('w3', '-'), ('w3', '+'), ('1', '-')]


def adapted_basis_3(prec):
    with mp.workdps(prec):
        r2 = 1 / mp.sqrt(2)
        vs = [[mp.mpc(0), r2, r2], [mp.mpc(0), r2, -r2],
              [mp.mpc(1), mp.mpc(0), mp.mpc(0)]]
    return [AdaptedBasisVector(lab, v, Fraction(n))
            for lab, v, n in zip(_LABELS3, vs, (2, 2, 1))]


# ---- dimension 13: eigenvectors of the order-12 centralizer generator ----
#
# The generator is -(permutation s -> 2s); its eigenvectors on the C^12
# complement of |0> are v_k[2^m mod 13] = w12^{-km} / sqrt(12).  Labels below
# were fixed once by checking which assignment makes the 195d table a SIC.

_K13 = [None, 0, 2, 4, 6, 8, 10]
_LABELS13 = [('1', '-', 'a'), ('1', '-', 'b'), ('w3^2', '+'), ('w3', '-'),
             ('1', '+'), ('w3^2', '-'), ('w3', '+')]


def adapted_basis_13(prec):
    out = []
    with mp.workdps(prec):
        r12 = 1 / mp.sqrt(12)
        e0 = [mp.mpc(1 if r == 0 else 0) for r in range(13)]
        out.append(AdaptedBasisVector(_LABELS13[0], e0, Fraction(1)))
        for lab, k in zip(_LABELS13[1:], _K13[1:]):
            v = [mp.mpc(0)] * 13
            for m in range(12):
                v[pow(2, m, 13)] = bignum.root_of_unity(12, -k * m, prec) * r12
            out.append(AdaptedBasisVector(lab, v, Fraction(12)))
    return out


# ---- tensor assemblies ----

# the product pairs (i3, i5) for the six d=15 Zauner-sector vectors, the
# parity-symmetric four first
_PAIRS15 = [(0, 0), (0, 1), (2, 2), (2, 3), (1, 0), (1, 1)]

# the nineteen d=195 products (i13, i3, i5), lexicographic
TRIPLES19 = [(0, 0, 0), (0, 0, 1), (0, 2, 2), (0, 2, 3), (1, 0, 0),
             (1, 0, 1), (1, 2, 2), (1, 2, 3), (2, 1, 2), (2, 1, 3),
             (3, 0, 4), (3, 2, 0), (3, 2, 1), (4, 1, 0), (4, 1, 1),
             (5, 0, 2), (5, 0, 3), (5, 2, 4), (6, 1, 4)]

_Z_EXP = {'1': 0, 'w3': 1, 'w3^2': 2}


def _triples36():
    """All products in the w3^2 Zauner sector: the 19 symmetric ones first,
    then the 17 with centralizer eigenvalue -1, each group lexicographic."""
    plus, minus = [], []
    for i13, l13 in enumerate(_LABELS13):
        for i3, l3 in enumerate(_LABELS3):
            for i5, l5 in enumerate(_LABELS5):
                if (_Z_EXP[l13[0]] + _Z_EXP[l3[0]] + _Z_EXP[l5[0]]) % 3 != 2:
                    continue
                s = (1 if l13[1] == '+' else -1) * (1 if l3[1] == '+' else -1)
                (plus if s == 1 else minus).append((i13, i3, i5))
    plus.sort()
    minus.sort()
    assert plus == TRIPLES19 and len(minus) == 17
    return plus + minus


def assemble_basis(basis_id, prec):
    with mp.workdps(prec):
        return _assemble_basis(basis_id, prec)


def _assemble_basis(basis_id, prec):
    if basis_id == 'dim5-zauner2':
        return adapted_basis_5(prec)[:2]
    if basis_id in ('dim15-sym4', 'dim15-zauner6'):
        b3 = adapted_basis_3(prec)
        b5 = adapted_basis_5(prec)
        pairs = _PAIRS15[:4] if basis_id == 'dim15-sym4' else _PAIRS15
        out = []
        for i3, i5 in pairs:
            v = [b3[i3].vector[r % 3] * b5[i5].vector[r % 5]
                 for r in range(15)]
            out.append(AdaptedBasisVector(
                (b3[i3].labels, b5[i5].labels), v,
                b3[i3].norm_factor_sq * b5[i5].norm_factor_sq))
        return out
    if basis_id in ('dim195-19', 'dim195-36'):
        b13 = adapted_basis_13(prec)
        b3 = adapted_basis_3(prec)
        b5 = adapted_basis_5(prec)
        triples = TRIPLES19 if basis_id == 'dim195-19' else _triples36()
        out = []
        for i13, i3, i5 in triples:
            v = [b13[i13].vector[r % 13] * b3[i3].vector[r % 3]
                 * b5[i5].vector[r % 5] for r in range(195)]
            out.append(AdaptedBasisVector(
                (b13[i13].labels, b3[i3].labels, b5[i5].labels), v,
                b13[i13].norm_factor_sq * b3[i3].norm_factor_sq
                * b5[i5].norm_factor_sq))
        return out
    raise ValueError("unknown basis_id %r" % basis_id)


# ---- embedded specs ----

def _spec(name, dim, basis_id, rows):
    entries = tuple(
        (quad(Fraction(q1), Fraction(q2)),
         parse_phase(ph) if ph is not None else None)
        for q1, q2, ph in rows)
    return FiducialSpec(name, dim, basis_id, entries)


SPECS = {}

SPECS['5a'] = _spec('5a', 5, 'dim5-zauner2', [
    (Fraction(3, 4), Fraction(-1, 4), "1"),
    (Fraction(1, 4), Fraction(1, 4), "P5^(1/4)"),
])

SPECS['15d'] = _spec('15d', 15, 'dim15-sym4', [
    (0, Fraction(1, 4), "1"),
    (Fraction(1, 2), Fraction(-1, 4), "-i * P5^(1/4)"),
    (0, Fraction(1, 8), "w12 * P5^(1/3)"),
    (Fraction(1, 2), Fraction(-1, 8), "w3 * P5^(1/12) * (-Q13*P13)^(-1/4)"),
])

SPECS['15b'] = _spec('15b', 15, 'dim15-zauner6', [
    (0, Fraction(1, 8), "1"),
    (Fraction(1, 2), Fraction(-1, 8), "-i * P5^(-1/4) * (-Q13*P13)^(1/4)"),
    (Fraction(-3, 8), Fraction(1, 4), "w12^5 * P5^(-1/3)"),
    (Fraction(1, 8), 0, "w12^11 * P5^(-1/12)"),
    (Fraction(3, 4), Fraction(-3, 8), "-1"),
    (0, Fraction(1, 8), "P5^(-1/4)"),
])

SPECS['195d'] = _spec('195d', 195, 'dim195-19', [
    (Fraction(-9, 182), Fraction(6, 91), "1"),
    (Fraction(19, 182), Fraction(-4, 91), "P5^(1/4) * (-Q13*P13)^(1/4)"),
    (Fraction(-9, 364), Fraction(3, 91), "w3^2 * P5^(1/3)"),
    (Fraction(41, 364), Fraction(-5, 91),
     "-w24 * P5^(1/12) * (i*P37*Q37)^(1/4)"),
    (Fraction(-15, 91), Fraction(55, 546), "-i * w24 * P5^(-1/2)"),
    (Fraction(10, 91), Fraction(-5, 182), "w24 * P5^(3/4)"),
    (Fraction(-1, 91), Fraction(4, 273), "w3^2 * P5^(1/3)"),
    (Fraction(19, 91), Fraction(-8, 91),
     "w12^2 * P5^(1/12) * (-Q13*P13)^(-1/4)"),
    (Fraction(5, 14), Fraction(-1, 7),
     "w12^10 * P5^(1/3) * (-w3*Q13/P13)^(1/12)"),
    (Fraction(-3, 14), Fraction(1, 7),
     "w12^2 * P5^(1/12) * (-P13/w3/Q13)^(1/6)"),
    (Fraction(-1, 7), Fraction(2, 21),
     "w12^7 * P5^(1/6) * (-P13/w3/Q13)^(1/12)"),
    (0, Fraction(1, 21), "w24 * w12^2 * (-P13/w3/Q13)^(1/12)"),
    (Fraction(2, 7), Fraction(-1, 7),
     "w24 * w3^2 * P5^(1/4) * (-P13/w3/Q13)^(1/12)"),
    (Fraction(1, 7), Fraction(-1, 14), "w24"),
    (0, Fraction(1, 14), "i * w24 * P5^(1/4)"),
    (Fraction(-1, 14), Fraction(2, 21),
     "w12^5 * P5^(1/3) * Q13^(1/2) * (-P13/w3/Q13)^(1/6)"),
    (Fraction(1, 2), Fraction(-2, 7),
     "w12^7 * P5^(1/12) * (-w3*Q13/P13)^(1/12)"),
    # sign calibrated against the SIC property (branch offset -1)
    (Fraction(-2, 7), Fraction(4, 21), "-P5^(1/6) * (-w3*Q13/P13)^(1/12)"),
    (Fraction(1, 7), 0, "-P5^(1/6) * (-w3*Q13/P13)^(1/6)"),
])

SPECS['195b'] = _spec('195b', 195, 'dim195-36', [
    (Fraction(-3, 91), Fraction(4, 91), "1"),
    (Fraction(2, 7), Fraction(-1, 7), "w4^3 * (P5*P13/Q13)^(1/4)"),
    (Fraction(-15, 52), Fraction(31, 182), "w12 * (P5^4/P13^3/Q13^3)^(1/12)"),
    (Fraction(5, 364), Fraction(1, 182), "w12^4 * (-P5)^(1/12)"),
    (Fraction(-1, 364), Fraction(1, 273), "-1"),
    (Fraction(11, 28), Fraction(-3, 14), "w4^2 * (P5/Q13^2)^(1/4)"),
    (Fraction(-29, 91), Fraction(115, 546),
     "w12^3 * (i*P5^4*Q241^3/P241^3)^(1/12)"),
    (Fraction(2, 91), Fraction(-1, 182), "w12^10 * (-P5)^(1/12)"),
    (Fraction(1, 7), Fraction(-1, 14), "w12^5 * (P5^4*P13^2*Q2/Q13^2)^(1/12)"),
    (Fraction(-3, 14), Fraction(1, 7), "w12^2 * (-P5*P13^2*Q2/Q13^2)^(1/12)"),
    (0, Fraction(1, 21), "w12^5 * (-P5^2*P13/Q2/Q13)^(1/12)"),
    (0, Fraction(1, 42), "w12^4 * (P13/Q2/Q13)^(1/12)"),
    (Fraction(1, 7), Fraction(-1, 14), "w12^5 * (P5^3*P13/Q2/Q13)^(1/12)"),
    (Fraction(1, 28), 0, "-i"),
    (Fraction(-3, 28), Fraction(1, 14), "i * P5^(1/4)"),
    (Fraction(-1, 14), Fraction(1, 21), "w12^11 * (P5^4*Q2*Q13/P13)^(1/12)"),
    (Fraction(1, 7), Fraction(-1, 14), "w12^2 * (-P5*Q2*Q13/P13)^(1/12)"),
    (Fraction(-1, 7), Fraction(2, 21), "w12^4 * (-P5^2*Q2*Q13/P13)^(1/12)"),
    (1, Fraction(-4, 7), "w12^11 * (-P5^2*Q13^2/P13^2/Q2)^(1/12)"),
    (Fraction(33, 182), Fraction(-9, 91), "-(-i)^(1/2)"),
    (Fraction(-3, 182), Fraction(2, 91), "w4^2 * (-P5)^(1/4)"),
    (Fraction(3, 91), Fraction(-3, 364), "-(-i)^(1/2)"),
    (Fraction(3, 182), Fraction(5, 364), "w4^2 * (-P5)^(1/4)"),
    # base sign calibrated against the SIC property (printed -i reads as -1)
    (Fraction(-1, 7), Fraction(5, 42),
     "w12^4 * (-P5^4*P13^5*Q2/Q13^5)^(1/12)"),
    (Fraction(1, 2), Fraction(-2, 7), "w12^3 * (-P5*P13^2*Q2/Q13^2)^(1/12)"),
    (Fraction(-1, 7), Fraction(2, 21), "w12^2 * (P5^2*P13^2*Q2/Q13^2)^(1/12)"),
    (0, 0, None),
    (0, Fraction(1, 84), "(i)^(1/2)"),
    (Fraction(5, 14), Fraction(-5, 28), "w4^2 * (-P5^3)^(1/4)"),
    (Fraction(-2, 7), Fraction(1, 6), "w6^4 * (i*P5^2)^(1/6)"),
    (Fraction(1, 7), Fraction(-1, 14), "w12^4 * (-P5)^(1/12)"),
    (Fraction(3, 7), Fraction(-3, 14), "w12^7 * (-P5^4*Q2*Q13/P13)^(1/12)"),
    (Fraction(-3, 14), Fraction(1, 7), "w12^11 * (P5*Q2*Q13/P13)^(1/12)"),
    (Fraction(-2, 7), Fraction(4, 21), "w6^4 * (P5*Q2*Q13/P13)^(1/6)"),
    (Fraction(-9, 14), Fraction(8, 21), "(-Q13^5/P13^5/Q2)^(1/12)"),
    (Fraction(1, 14), 0, "w12^2 * (P5^3*Q13^2/P13^2/Q2)^(1/12)"),
])


def sum_moduli(spec):
    s = quad(0, 0)
    for p, _ in spec.entries:
        s = s + p
    return s


def build_fiducial(spec, prec):
    basis = assemble_basis(spec.basis_id, prec)
    if len(basis) != len(spec.entries):
        raise ValueError("spec entry count does not match basis size")
    with mp.workdps(prec):
        v = bignum.zeros(spec.dim)
        for (p, ph), e in zip(spec.entries, basis):
            pv = eval_quadratic(p, prec)
            if pv < -mp.mpf(10) ** (-(prec - 10)):
                raise ValueError("invalid spec: negative modulus squared")
            if ph is None or pv <= 0:
                continue
            c = mp.sqrt(pv) * eval_phase(ph, prec)
            v = bignum.add(v, bignum.scale(c, e.vector))
    return v


def to_adapted(v, basis_id, prec):
    """Coefficients in the adapted basis, gauged so the first phase is 0.

    Returns (pairs, residual): pairs is a list of (|c_r|^2, arg c_r - arg c_0)
    and residual is the norm-squared of v outside the basis span.
    """
    basis = assemble_basis(basis_id, prec)
    with mp.workdps(prec):
        cs = [bignum.inner(e.vector, v, prec) for e in basis]
        if abs(cs[0]) < mp.mpf(10) ** (-prec // 2):
            raise ValueError("phase gauge undefined: first coefficient is 0")
        gauge = mp.arg(cs[0])
        pairs = []
        for c in cs:
            ang = mp.arg(c) - gauge if abs(c) > 0 else mp.mpf(0)
            if ang <= -mp.pi:
                ang += 2 * mp.pi
            elif ang > mp.pi:
                ang -= 2 * mp.pi
            pairs.append((abs(c) ** 2, ang))
        residual = mp.mpf(1) - mp.fsum(abs(c) ** 2 for c in cs)
    return pairs, residual


def change_representative(v, g, prec):
    u = metaplectic_any(g, prec)
    return bignum.matvec(u.matrix, v, prec)


# ---- spec file IO ----

def write_spec(path, spec):
    with open(path, 'w') as fh:
        fh.write("fiducial %s dim %d basis %s\n"
                 % (spec.name, spec.dim, spec.basis_id))
        for p, ph in spec.entries:
            fh.write("p = %s ; phase = %s\n"
                     % (p, format_phase(ph) if ph is not None else "---"))


def read_spec(path):
    with open(path) as fh:
        lines = [l.strip() for l in fh if l.strip()]
    head = lines[0].split()
    if head[0] != 'fiducial' or head[2] != 'dim' or head[4] != 'basis':
        raise ValueError("bad spec header")
    name, dim, basis_id = head[1], int(head[3]), head[5]
    entries = []
    for line in lines[1:]:
        pside, phside = line.split(';')
        _, val = pside.split('=', 1)
        q1s, q2s = val.split('+')
        q1 = Fraction(q1s.strip())
        q2 = Fraction(q2s.strip().replace('*sqrt3', ''))
        _, phs = phside.split('=', 1)
        phs = phs.strip()
        ph = None if phs == '---' else parse_phase(phs)
        entries.append((quad(q1, q2), ph))
    return FiducialSpec(name, dim, basis_id, tuple(entries))
