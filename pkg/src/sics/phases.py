"""Exact phase algebra: Pythagorean unit factors, roots of unity, rational
powers, and quadratic-field scalars, with principal-branch evaluation.

A phase is sign * e^{2 pi i root} * prod_k base_k^{exponent_k}, where each
base is itself sign * e^{2 pi i root} * prod kind^int_power over the eight
Pythagorean constants, and fractional powers z^{a/b} always mean
exp((a/b) Log z) with Log the principal branch.

Text grammar (used by the CLI and by spec files):

    expr  := ['-'] term ('*' term)*
    term  := atom ['^' exp]
    atom  := '1' | 'i' | 'w'N['^'k] | KIND | '(' base ')'
    exp   := int | '(' int '/' int ')' | '(-' int '/' int ')'
    base  := ['-'] bfac (('*'|'/') bfac)*
    bfac  := 'i' | 'w'N['^'k] | KIND ['^' ['-'] int]

with KIND one of P5 Q2 P13 Q13 P37 Q37 P241 Q241.  Example:
    w12^5 * P5^(1/3) * Q13^(1/2) * (-P13/w3/Q13)^(1/6)
"""

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath as mp

from . import bignum


@dataclass(frozen=True)
class QuadraticElement:
    """q1 + q2 sqrt(D) with exact rational components."""
    q1: Fraction
    q2: Fraction
    D: int = 3

    def __post_init__(self):
        object.__setattr__(self, 'q1', Fraction(self.q1))
        object.__setattr__(self, 'q2', Fraction(self.q2))

    def __add__(self, o):
        assert self.D == o.D
        return QuadraticElement(self.q1 + o.q1, self.q2 + o.q2, self.D)

    def __sub__(self, o):
        assert self.D == o.D
        return QuadraticElement(self.q1 - o.q1, self.q2 - o.q2, self.D)

    def __mul__(self, o):
        if isinstance(o, QuadraticElement):
            assert self.D == o.D
            return QuadraticElement(self.q1 * o.q1 + self.D * self.q2 * o.q2,
                                    self.q1 * o.q2 + self.q2 * o.q1, self.D)
        return QuadraticElement(self.q1 * o, self.q2 * o, self.D)

    def __str__(self):
        return "%s + %s*sqrt%d" % (self.q1, self.q2, self.D)


def quad(q1, q2, D=3):
    return QuadraticElement(Fraction(q1), Fraction(q2), D)


def eval_quadratic(x, prec):
    with mp.workdps(prec):
        return mp.mpf(x.q1.numerator) / x.q1.denominator \
            + mp.mpf(x.q2.numerator) / x.q2.denominator * mp.sqrt(x.D)


# the eight Pythagorean unit constants: kind -> (re, im) as QuadraticElements
PYTHAGOREAN = {
    'P5':   (quad(Fraction(-3, 5), 0),    quad(Fraction(4, 5), 0)),
    'Q2':   (quad(Fraction(-1, 2), 0),    quad(0, Fraction(1, 2))),
    'P13':  (quad(Fraction(-5, 13), 0),   quad(Fraction(12, 13), 0)),
    'Q13':  (quad(Fraction(-11, 13), 0),  quad(0, Fraction(4, 13))),
    'P37':  (quad(Fraction(-12, 37), 0),  quad(Fraction(35, 37), 0)),
    'Q37':  (quad(Fraction(-13, 37), 0),  quad(0, Fraction(20, 37))),
    'P241': (quad(Fraction(-120, 241), 0), quad(Fraction(209, 241), 0)),
    'Q241': (quad(Fraction(-143, 241), 0), quad(0, Fraction(112, 241))),
}


def pythagorean(kind):
    """(re, im) components; raises on unknown kind."""
    if kind not in PYTHAGOREAN:
        raise ValueError("unknown Pythagorean kind %r" % kind)
    return PYTHAGOREAN[kind]


def unit_modulus_exact(kind):
    """re^2 + im^2 == 1 in Q(sqrt 3), exact rational arithmetic."""
    re, im = pythagorean(kind)
    s = re * re + im * im
    return s.q1 == 1 and s.q2 == 0


def eval_pythagorean(kind, prec):
    re, im = pythagorean(kind)
    with mp.workdps(prec):
        return mp.mpc(eval_quadratic(re, prec), eval_quadratic(im, prec))


@dataclass(frozen=True)
class BaseProduct:
    """sign * e^{2 pi i root} * prod kind^power, integer powers only."""
    sign: int = 1
    root: Fraction = Fraction(0)
    powers: tuple = ()      # sorted tuple of (kind, int)

    def value(self, prec):
        with mp.workdps(prec):
            z = mp.mpc(self.sign) * _root_value(self.root, prec)
            for kind, n in self.powers:
                z *= eval_pythagorean(kind, prec) ** n
            return z


@dataclass(frozen=True)
class PhaseExpression:
    sign: int = 1
    root: Fraction = Fraction(0)            # e^{2 pi i root}
    factors: tuple = ()                     # tuple of (BaseProduct, Fraction)

    def __bool__(self):
        return self.sign != 1 or self.root != 0 or bool(self.factors)


def _root_value(r, prec):
    r = Fraction(r) % 1
    return bignum.root_of_unity(r.denominator, r.numerator, prec)


def eval_phase(expr, prec):
    """Principal-branch numeric value of a PhaseExpression."""
    with mp.workdps(prec):
        z = mp.mpc(expr.sign) * _root_value(expr.root, prec)
        for base, e in expr.factors:
            e = Fraction(e)
            bv = base.value(prec)
            if e.denominator == 1:
                z *= bv ** e.numerator
            else:
                z *= mp.exp(mp.mpf(e.numerator) / e.denominator * mp.log(bv))
        return z


def phase_one():
    return PhaseExpression()


# ---- grammar ----

_KINDS = sorted(PYTHAGOREAN, key=len, reverse=True)


def _tokenize(s):
    toks = []
    i = 0
    while i < len(s):
        c = s[i]
        if c.isspace():
            i += 1
            continue
        if c in '*/()^':
            toks.append(c)
            i += 1
            continue
        if c == '-':
            toks.append('-')
            i += 1
            continue
        for k in _KINDS:
            if s.startswith(k, i):
                toks.append(k)
                i += len(k)
                break
        else:
            if c == 'w':
                j = i + 1
                while j < len(s) and s[j].isdigit():
                    j += 1
                if j == i + 1:
                    raise ValueError("bad token at %r" % s[i:])
                toks.append(s[i:j])
                i = j
            elif c == 'i':
                toks.append('i')
                i += 1
            elif c.isdigit():
                j = i
                while j < len(s) and s[j].isdigit():
                    j += 1
                toks.append(s[i:j])
                i = j
            else:
                raise ValueError("bad character %r in phase" % c)
    return toks


class _Parser:
    def __init__(self, toks):
        self.toks = toks
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self, expect=None):
        t = self.peek()
        if t is None or (expect is not None and t != expect):
            raise ValueError("expected %r, got %r" % (expect, t))
        self.pos += 1
        return t

    def parse_int(self):
        neg = False
        if self.peek() == '-':
            self.take()
            neg = True
        n = int(self.take())
        return -n if neg else n

    def parse_exponent(self):
        if self.peek() == '(':
            self.take('(')
            num = self.parse_int()
            self.take('/')
            den = int(self.take())
            self.take(')')
            return Fraction(num, den)
        return Fraction(self.parse_int())

    def parse_root_token(self, t):
        # 'i' or 'wN', optionally followed by ^k; returns a Fraction of a turn
        if t == 'i':
            base = Fraction(1, 4)
        else:
            base = Fraction(1, int(t[1:]))
        if self.peek() == '^':
            self.take('^')
            base *= self.parse_int()
        return base

    def parse_base(self):
        sign = 1
        if self.peek() == '-':
            self.take()
            sign = -1
        root = Fraction(0)
        powers = {}
        invert = False
        while True:
            t = self.take()
            if t == '1':
                pass
            elif t == 'i' or (t[0] == 'w' and t[1:].isdigit()):
                r = self.parse_root_token(t)
                root += -r if invert else r
            elif t in PYTHAGOREAN:
                n = 1
                if self.peek() == '^':
                    self.take('^')
                    n = self.parse_int()
                if invert:
                    n = -n
                powers[t] = powers.get(t, 0) + n
            else:
                raise ValueError("bad base factor %r" % t)
            nxt = self.peek()
            if nxt == '*':
                self.take()
                invert = False
            elif nxt == '/':
                self.take()
                invert = True
            else:
                break
        powers = tuple(sorted((k, v) for k, v in powers.items() if v != 0))
        return BaseProduct(sign, root % 1, powers)

    def parse_expr(self):
        sign = 1
        if self.peek() == '-':
            self.take()
            sign = -1
        root = Fraction(0)
        factors = []
        while True:
            t = self.peek()
            if t == '1':
                self.take()
            elif t == '(':
                self.take('(')
                base = self.parse_base()
                self.take(')')
                e = Fraction(1)
                if self.peek() == '^':
                    self.take('^')
                    e = self.parse_exponent()
                factors.append((base, e))
            elif t == 'i' or (t is not None and t[0] == 'w' and t[1:].isdigit()):
                self.take()
                root += self.parse_root_token(t)
            elif t in PYTHAGOREAN:
                self.take()
                e = Fraction(1)
                if self.peek() == '^':
                    self.take('^')
                    e = self.parse_exponent()
                bp = BaseProduct(1, Fraction(0), ((t, 1),))
                if e.denominator == 1:
                    bp = BaseProduct(1, Fraction(0), ((t, e.numerator),))
                    factors.append((bp, Fraction(1)))
                else:
                    factors.append((bp, e))
            else:
                raise ValueError("bad phase term %r" % t)
            if self.peek() == '*':
                self.take()
            else:
                break
        if self.peek() is not None:
            raise ValueError("trailing input %r" % self.toks[self.pos:])
        return PhaseExpression(sign, root % 1, tuple(factors))


def parse_phase(s):
    return _Parser(_tokenize(s)).parse_expr()


def format_root(r):
    r = Fraction(r) % 1
    if r == 0:
        return None
    if r == Fraction(1, 4):
        return "i"
    n, d = r.numerator, r.denominator
    return "w%d" % d if n == 1 else "w%d^%d" % (d, n)


def format_base(b):
    parts = []
    if b.root != 0:
        parts.append(format_root(b.root))
    for kind, n in b.powers:
        parts.append(kind if n == 1 else "%s^%d" % (kind, n))
    s = "*".join(parts) if parts else "1"
    return ("-" if b.sign < 0 else "") + s


def format_phase(expr):
    parts = []
    rt = format_root(expr.root)
    if rt:
        parts.append(rt)
    for base, e in expr.factors:
        bs = format_base(base)
        if len(base.powers) + (base.root != 0) > 1 or base.sign < 0 \
                or any(n != 1 for _, n in base.powers) \
                or (base.root != 0 and e.denominator != 1):
            bs = "(%s)" % bs
        if e == 1:
            parts.append(bs)
        elif e.denominator == 1:
            parts.append("%s^%d" % (bs, e.numerator))
        else:
            parts.append("%s^(%d/%d)" % (bs, e.numerator, e.denominator))
    s = " * ".join(parts) if parts else "1"
    return ("-" if expr.sign < 0 else "") + s
