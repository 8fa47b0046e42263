"""Exact SIC fiducials in dimensions 5, 15 and 195: construction from
embedded algebraic tables, high-precision verification, symmetry-adapted
coordinates, numeric-to-exact recognition, and a sector-restricted solver.
"""

from . import (bignum, fiducials, heisenberg, modarith, phases, recognize,
               solver, verify)

__all__ = ['bignum', 'fiducials', 'heisenberg', 'modarith', 'phases',
           'recognize', 'solver', 'verify']
