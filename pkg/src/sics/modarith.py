"""Exact arithmetic over Z/dZ and 2x2 symplectic matrices.

Moduli are restricted to odd square-free integers.  The CRT splitting of a
symplectic matrix mod d(d-2) into factors mod d-2 and mod d carries the
kappa = (d-1)/2 twist on the off-diagonal entries.
"""

from dataclasses import dataclass
from math import gcd


def is_odd_prime(n):
    if n < 3 or n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _square_free_odd(n):
    if n < 1 or n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % (f * f) == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class ModInt:
    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1 or not _square_free_odd(self.modulus):
            raise ValueError("modulus must be odd and square-free")
        object.__setattr__(self, 'value', self.value % self.modulus)

    def _coerce(self, other):
        if isinstance(other, ModInt):
            if other.modulus != self.modulus:
                raise ValueError("modulus mismatch")
            return other.value
        return int(other)

    def __add__(self, other):
        return ModInt(self.value + self._coerce(other), self.modulus)

    def __sub__(self, other):
        return ModInt(self.value - self._coerce(other), self.modulus)

    def __mul__(self, other):
        return ModInt(self.value * self._coerce(other), self.modulus)

    def __neg__(self):
        return ModInt(-self.value, self.modulus)

    def inv(self):
        if gcd(self.value, self.modulus) != 1:
            raise ZeroDivisionError("not invertible mod %d" % self.modulus)
        return ModInt(pow(self.value, -1, self.modulus), self.modulus)

    def __int__(self):
        return self.value


def legendre(a):
    """Legendre symbol (a | modulus); modulus must be an odd prime."""
    p = a.modulus
    if not is_odd_prime(p):
        raise ValueError("modulus must be an odd prime")
    v = a.value % p
    if v == 0:
        return 0
    return 1 if pow(v, (p - 1) // 2, p) == 1 else -1


@dataclass(frozen=True)
class SymplecticMatrix:
    alpha: ModInt
    beta: ModInt
    gamma: ModInt
    delta: ModInt

    def __post_init__(self):
        d = self.modulus
        for x in (self.beta, self.gamma, self.delta):
            if x.modulus != d:
                raise ValueError("modulus mismatch")
        det = (self.alpha.value * self.delta.value
               - self.beta.value * self.gamma.value) % d
        if det != 1 % d:
            raise ValueError("determinant is not 1 mod %d" % d)

    @property
    def modulus(self):
        return self.alpha.modulus

    @classmethod
    def make(cls, a, b, c, dd, modulus):
        return cls(ModInt(a, modulus), ModInt(b, modulus),
                   ModInt(c, modulus), ModInt(dd, modulus))

    @classmethod
    def identity(cls, modulus):
        return cls.make(1, 0, 0, 1, modulus)

    def entries(self):
        return (self.alpha.value, self.beta.value,
                self.gamma.value, self.delta.value)

    def __mul__(self, other):
        if other.modulus != self.modulus:
            raise ValueError("modulus mismatch")
        a1, b1, c1, d1 = self.entries()
        a2, b2, c2, d2 = other.entries()
        return SymplecticMatrix.make(
            a1 * a2 + b1 * c2, a1 * b2 + b1 * d2,
            c1 * a2 + d1 * c2, c1 * b2 + d1 * d2, self.modulus)

    def inverse(self):
        a, b, c, dd = self.entries()
        return SymplecticMatrix.make(dd, -b, -c, a, self.modulus)

    def __pow__(self, n):
        r = SymplecticMatrix.identity(self.modulus)
        m = self if n >= 0 else self.inverse()
        for _ in range(abs(n)):
            r = r * m
        return r

    def trace(self):
        return ModInt(self.alpha.value + self.delta.value, self.modulus)

    def is_order3(self):
        return self ** 3 == SymplecticMatrix.identity(self.modulus) \
            and self != SymplecticMatrix.identity(self.modulus)

    def apply(self, i, j):
        """Image of the index pair (i, j) under the matrix."""
        a, b, c, dd = self.entries()
        d = self.modulus
        return ((a * i + b * j) % d, (c * i + dd * j) % d)


def sympl_mul(f1, f2):
    return f1 * f2


@dataclass(frozen=True)
class CrtSplit:
    left: SymplecticMatrix    # modulus d-2
    right: SymplecticMatrix   # modulus d
    kappa: ModInt             # (d-1)/2 mod d


def crt_split(f, d):
    """Split f (mod d(d-2)) into kappa-twisted factors mod d-2 and mod d."""
    if d % 2 == 0:
        raise ValueError("d must be odd")
    dl = d - 2
    if gcd(d, dl) != 1:
        raise ValueError("factors not coprime")
    if f.modulus != d * dl:
        raise ValueError("matrix modulus must be d(d-2)")
    a, b, c, dd = f.entries()
    kappa = (d - 1) // 2

    def factor(m):
        k = kappa % m
        kinv = pow(k, -1, m)
        return SymplecticMatrix.make(a, (kinv * b) % m, (k * c) % m, dd, m)

    return CrtSplit(factor(dl), factor(d), ModInt(kappa, d))


def crt_join(split):
    """Inverse of crt_split: recombine twisted factors mod d(d-2)."""
    dl = split.left.modulus
    d = split.right.modulus
    if gcd(d, dl) != 1:
        raise ValueError("factors not coprime")
    n = d * dl
    kappa = (d - 1) // 2

    def recomb(xl, xr):
        # CRT on a pair of residues
        ml = pow(d, -1, dl)
        mr = pow(dl, -1, d)
        return (xl * d * ml + xr * dl * mr) % n

    al, bl, cl, ddl = split.left.entries()
    ar, br, cr, ddr = split.right.entries()
    kl, kr = kappa % dl, kappa % d
    a = recomb(al, ar)
    b = recomb((kl * bl) % dl, (kr * br) % d)
    c = recomb((pow(kl, -1, dl) * cl) % dl, (pow(kr, -1, d) * cr) % d)
    dd = recomb(ddl, ddr)
    return SymplecticMatrix.make(a, b, c, dd, n)


def split_to_primes(f):
    """Full ladder split of a matrix mod 15 or 195 into prime-modulus factors.

    Returns a list of (SymplecticMatrix, prime) ordered largest prime first.
    """
    n = f.modulus
    if is_odd_prime(n):
        return [f]
    if n == 15:
        s = crt_split(f, 5)
        return [s.left, s.right]          # mod 3, mod 5
    if n == 195:
        s = crt_split(f, 15)
        return [s.left] + split_to_primes(s.right)   # mod 13, mod 3, mod 5
    raise ValueError("unsupported composite modulus %d" % n)


def join_from_primes(factors):
    """Inverse of split_to_primes for moduli 15 and 195."""
    if len(factors) == 1:
        return factors[0]
    if len(factors) == 2:
        f3, f5 = factors
        kappa = ModInt(2, 5)
        return crt_join(CrtSplit(f3, f5, kappa))
    if len(factors) == 3:
        f13, f3, f5 = factors
        f15 = join_from_primes([f3, f5])
        return crt_join(CrtSplit(f13, f15, ModInt(7, 15)))
    raise ValueError("expected 1, 2 or 3 factors")


def _all_symplectic(p):
    out = []
    for a in range(p):
        for b in range(p):
            for c in range(p):
                # a*dd - b*c = 1  =>  dd determined when a invertible
                if a % p != 0:
                    dd = (1 + b * c) * pow(a, -1, p) % p
                    out.append(SymplecticMatrix.make(a, b, c, dd, p))
                elif (-b * c) % p == 1:
                    for dd in range(p):
                        out.append(SymplecticMatrix.make(a, b, c, dd, p))
    return out


def find_conjugator(source, target):
    """G with G source G^-1 = target, by exhaustive search (prime modulus)
    or per-factor search glued by the twisted CRT join (composite)."""
    if source.modulus != target.modulus:
        raise ValueError("modulus mismatch")
    n = source.modulus
    if is_odd_prime(n):
        for g in _all_symplectic(n):
            if g * source == target * g:
                return g
        raise ValueError("not conjugate")
    sf = split_to_primes(source)
    tf = split_to_primes(target)
    gf = [find_conjugator(s, t) for s, t in zip(sf, tf)]
    return join_from_primes(gf)
