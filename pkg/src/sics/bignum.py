"""Arbitrary-precision complex vectors and matrices on top of mpmath.

Precision is always an explicit decimal-digit parameter; no function relies
on the ambient mpmath context.  Vectors are lists of mpc, matrices are lists
of rows.  gmpy2 is used internally by hot loops elsewhere; here everything
is plain mpmath.
"""

import mpmath as mp


def root_of_unity(n, k, prec):
    """e^{2 pi i k / n} at prec digits; exact (1, 0) when k = 0 mod n."""
    if n == 0:
        raise ValueError("n must be nonzero")
    k %= n
    if k == 0:
        return mp.mpc(1)
    with mp.workdps(prec):
        return mp.expjpi(mp.mpf(2 * k) / n)


def zeros(d):
    return [mp.mpc(0)] * d


def inner(u, v, prec):
    """<u|v>, conjugate-linear in the first slot."""
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    with mp.workdps(prec):
        return mp.mpc(mp.fsum(mp.conj(a) * b for a, b in zip(u, v)))


def norm(v, prec):
    with mp.workdps(prec):
        return mp.sqrt(mp.fsum(abs(x) ** 2 for x in v))


def normalize(v, prec):
    with mp.workdps(prec):
        nv = norm(v, prec)
        return [x / nv for x in v]


def kron(a, b):
    """Tensor product, left factor most significant: index i*len(b)+j."""
    return [x * y for x in a for y in b]


def scale(c, v):
    return [c * x for x in v]


def add(u, v):
    return [x + y for x, y in zip(u, v)]


def matvec(m, v, prec):
    with mp.workdps(prec):
        return [mp.fsum(m[r][s] * v[s] for s in range(len(v)))
                for r in range(len(m))]


def matmul(a, b, prec):
    n, k, m2 = len(a), len(b), len(b[0])
    with mp.workdps(prec):
        bt = [[b[s][c] for s in range(k)] for c in range(m2)]
        return [[mp.fsum(a[r][s] * bt[c][s] for s in range(k))
                 for c in range(m2)] for r in range(n)]


def conj_exact(z):
    # mp.conj and mpc.conjugate() both re-round to the ambient context
    if hasattr(z, '_mpc_'):
        return mp.make_mpc((z.real._mpf_, mp.fneg(z.imag, exact=True)._mpf_))
    return z   # reals (and ints) are their own conjugate


def dagger(m):
    return [[conj_exact(m[r][c]) for r in range(len(m))]
            for c in range(len(m[0]))]


def mat_identity(d):
    return [[mp.mpc(1 if r == c else 0) for c in range(d)] for r in range(d)]


def max_abs_diff(a, b):
    return max(abs(x - y) for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def mat_max_abs(m):
    return max(abs(x) for row in m for x in row)


def is_unitary(u, prec):
    d = len(u)
    p = matmul(dagger(u), u, prec)
    with mp.workdps(prec):
        return max_abs_diff(p, mat_identity(d)) < mp.mpf(10) ** (-(prec - 10))


def truncate(x, q):
    """Round a real or complex value to q significant digits."""
    with mp.workdps(q):
        return +x


def format_complex(z, digits):
    # the workdps matters: mp.mpf() re-rounds to the ambient context
    with mp.workdps(digits + 10):
        return "%s %s" % (mp.nstr(mp.mpf(z.real), digits, strip_zeros=False),
                          mp.nstr(mp.mpf(z.imag), digits, strip_zeros=False))


def write_vector(path, v, prec, extra_comment=None):
    with open(path, 'w') as fh:
        fh.write("# dim=%d precision=%d\n" % (len(v), prec))
        if extra_comment:
            fh.write("# %s\n" % extra_comment)
        with mp.workdps(prec + 10):
            rows = [format_complex(mp.mpc(z), prec) for z in v]
        for row in rows:
            fh.write(row + "\n")


def read_vector(path):
    """Returns (vector, precision)."""
    dim = prec = None
    v = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith('#'):
                for tok in line[1:].split():
                    if tok.startswith('dim='):
                        dim = int(tok[4:])
                    elif tok.startswith('precision='):
                        prec = int(tok[10:])
                continue
            re_s, im_s = line.split()
            with mp.workdps(prec or 50):
                v.append(mp.mpc(mp.mpf(re_s), mp.mpf(im_s)))
    if dim is not None and len(v) != dim:
        raise ValueError("vector file length does not match header dim")
    return v, (prec or 50)
