from sics.modarith import SymplecticMatrix


def rand_symplectic(d, rng):
    while True:
        a, b, c = (rng.randrange(d) for _ in range(3))
        try:
            ainv = pow(a, -1, d)
        except ValueError:
            continue
        return SymplecticMatrix.make(a, b, c, (ainv * (1 + b * c)) % d, d)
