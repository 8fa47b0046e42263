"""Command-line front end.

Verbs: build, verify, adapt, recognize, solve, sweep.
Exit codes: 0 pass, 1 fail/diagnostic, 2 usage error.
"""

import argparse
import sys

import mpmath as mp

from . import bignum, recognize, solver
from .fiducials import SPECS, build_fiducial, sum_moduli, to_adapted, write_spec
from .verify import sic_check

DEFAULT_PRECISION = 150


def _parser():
    p = argparse.ArgumentParser(prog='sics',
                                description='exact SIC fiducial toolkit')
    sub = p.add_subparsers(dest='verb', required=True)

    b = sub.add_parser('build', help='write an embedded fiducial vector file')
    b.add_argument('--fiducial', required=True, choices=sorted(SPECS))
    b.add_argument('--precision', type=int, default=DEFAULT_PRECISION)
    b.add_argument('--out', required=True)

    v = sub.add_parser('verify', help='overlap sweep on a vector file')
    v.add_argument('--in', dest='infile', required=True)
    v.add_argument('--precision', type=int, default=None)
    v.add_argument('--reduce', action='store_true',
                   help='reserved; full sweep is always run')

    a = sub.add_parser('adapt', help='print adapted-basis moduli and angles')
    a.add_argument('--in', dest='infile', required=True)
    a.add_argument('--basis', required=True)
    a.add_argument('--precision', type=int, default=None)

    r = sub.add_parser('recognize', help='recover an exact spec from a vector')
    r.add_argument('--in', dest='infile', required=True)
    r.add_argument('--basis', required=True)
    r.add_argument('--field', default='sqrt3', choices=['sqrt3'])
    r.add_argument('--dict', dest='dictionary', default=None,
                   help='comma-separated Pythagorean kinds')
    r.add_argument('--max-den', type=int, default=1200)
    r.add_argument('--precision', type=int, default=None)
    r.add_argument('--out', default=None, help='write the spec here on success')

    s = sub.add_parser('solve', help='numerical fiducial search in a sector')
    s.add_argument('--dim', type=int, required=True)
    s.add_argument('--sector', required=True)
    s.add_argument('--seed', type=int, default=0)
    s.add_argument('--restarts', type=int, default=20)
    s.add_argument('--precision', type=int, default=80)
    s.add_argument('--out', required=True)

    w = sub.add_parser('sweep', help='minimum digits for full recognition')
    w.add_argument('--fiducial', required=True, choices=sorted(SPECS))
    return p


def run(argv=None):
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return _dispatch(args)
    except (ValueError, OSError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 1


def _dispatch(args):
    if args.verb == 'build':
        spec = SPECS[args.fiducial]
        v = build_fiducial(spec, args.precision)
        bignum.write_vector(args.out, v, args.precision,
                            extra_comment="fiducial=%s basis=%s"
                            % (spec.name, spec.basis_id))
        print("wrote %s (dim %d, %d digits)"
              % (args.out, spec.dim, args.precision))
        return 0

    if args.verb == 'verify':
        v, file_prec = bignum.read_vector(args.infile)
        prec = args.precision or file_prec
        report = sic_check(v, prec)
        print(report.render())
        return 0 if report.passes() else 1

    if args.verb == 'adapt':
        v, file_prec = bignum.read_vector(args.infile)
        prec = args.precision or file_prec
        pairs, residual = to_adapted(v, args.basis, prec)
        for idx, (p, ang) in enumerate(pairs):
            print("%3d  p=%s  angle=%s"
                  % (idx, mp.nstr(p, min(prec, 30)),
                     mp.nstr(ang, min(prec, 30))))
        print("off-span residual: %s" % mp.nstr(residual, 5))
        return 0

    if args.verb == 'recognize':
        v, file_prec = bignum.read_vector(args.infile)
        prec = args.precision or file_prec
        dictionary = None
        if args.dictionary:
            dictionary = tuple(args.dictionary.split(','))
        report = recognize.convert(v, args.basis, D=3, dictionary=dictionary,
                                   prec=prec, max_den=args.max_den)
        print(report.render())
        if not report.ok():
            return 1
        s = sum_moduli(report.spec)
        print("sum of moduli-squared: %s (exact)" % s)
        if args.out:
            write_spec(args.out, report.spec)
            print("wrote %s" % args.out)
        return 0

    if args.verb == 'solve':
        cfg = solver.SolverConfig(dim=args.dim, sector=args.sector,
                                  seed=args.seed, restarts=args.restarts,
                                  stage2_prec=args.precision)
        v, worst, converged = solver.search(cfg)
        bignum.write_vector(args.out, v, args.precision,
                            extra_comment="solver sector=%s seed=%d"
                            % (args.sector, args.seed))
        print("worst overlap violation: %s" % mp.nstr(worst, 5))
        print("wrote %s" % args.out)
        return 0 if converged else 1

    if args.verb == 'sweep':
        moduli, phases = recognize.precision_sweep(args.fiducial)
        if moduli is None or phases is None:
            print("recognition never succeeded in the sweep range")
            return 1
        print("moduli: <=%d digits, phases: <=%d digits" % (moduli, phases))
        return 0

    return 2


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
