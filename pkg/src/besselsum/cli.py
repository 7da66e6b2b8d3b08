"""besselsum command line: regenerate the truncation table and figure data,
or evaluate single sums, integrals and 2F1 values.

Exit status: 0 success, 1 bad arguments, 2 domain error, 3 convergence failure.
"""

import argparse
import csv
import math
import os
import sys

from . import figures
from .errors import ConvergenceError, DomainError
from .kernel import resolution_partial_sum
from .quadrature import DEFAULT_REL_TOL, integrate_bessel_product
from .series import corollary1_sum, hyp2f1_via_bessel_sum
from .special import hyp2f1
from .weber import IntegralSpec, integral_closed_form

TABLE_FMT = "%.2E"
DATA_FMT = "%.8E"
TOL_ENV = "BESSELSUM_TOL"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _tolerance(default):
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return default
    try:
        tol = float(raw)
    except ValueError:
        raise UsageError(f"{TOL_ENV} is not a number: {raw!r}")
    if not tol > 0:
        raise UsageError(f"{TOL_ENV} must be positive")
    return tol


def _open_out(path):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", newline=""), True


def _write_csv(path, header, rows, fmt):
    fh, close = _open_out(path)
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([c if isinstance(c, (int, str)) else fmt % c for c in row])
    finally:
        if close:
            fh.close()


def cmd_table1(args):
    _write_csv(args.out, ["N", "b_over_pi4", "R_N"], figures.table1_rows(), TABLE_FMT)


def cmd_fig1(args):
    a_values = None if args.a is None else [args.a]
    rows = figures.fig1_rows(a_values, args.b_max, args.samples)
    _write_csv(args.out, ["a", "b", "exact", "T_10"], rows, DATA_FMT)


def cmd_fig2(args):
    sweep = figures.fig2_sweep(args.grid)
    lim = 2 * math.pi
    rows = ((a, b, r, int(abs(a) + abs(b) < lim)) for a, b, r in sweep.cells())
    _write_csv(args.out, ["a", "b", "R_20", "inside_conjecture"], rows, DATA_FMT)


def cmd_sum(args):
    print("%.15g" % corollary1_sum(args.a, args.b, args.mu, args.nu, args.k, args.terms))


def cmd_integral(args):
    spec = IntegralSpec(args.a, args.b, args.mu, args.nu, args.lam)
    if args.closed:
        print("%.15g" % integral_closed_form(spec))
        return
    res = integrate_bessel_product(spec, _tolerance(DEFAULT_REL_TOL))
    print("%.15g %.3g" % (res.value, res.error))


def cmd_hyp2f1(args):
    if args.direct:
        print("%.15g" % hyp2f1(args.p, args.q, args.c, args.z))
    else:
        print("%.15g" % hyp2f1_via_bessel_sum(args.p, args.q, args.c, args.z, args.terms))


def cmd_resolve_kernel(args):
    rep = resolution_partial_sum(args.r, args.r_prime, args.l, args.terms)
    print("exact %.15g" % rep.exact)
    print("partial %.15g" % rep.partial_sum)
    print("error %.6g" % rep.error)


def build_parser():
    p = _Parser(prog="besselsum", description=" ".join(__doc__.split("\n\n")[0].split()))
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("table1", help="R_N(pi/2, b) for b = pi/4..6pi/4, N = 1..10^4")
    s.add_argument("--out", help="output CSV (default stdout)")
    s.set_defaults(func=cmd_table1)

    s = sub.add_parser("fig1", help="closed form and T_10 along b")
    s.add_argument("--a", type=float, help="single a (default pi/4, 2pi/4, 3pi/4)")
    s.add_argument("--b-max", type=float, default=2 * math.pi)
    s.add_argument("--samples", type=int, default=401)
    s.add_argument("--out")
    s.set_defaults(func=cmd_fig1)

    s = sub.add_parser("fig2", help="R_20 over [-2pi, 2pi]^2")
    s.add_argument("--grid", type=int, default=201, help="odd number of cells per axis")
    s.add_argument("--out")
    s.set_defaults(func=cmd_fig2)

    s = sub.add_parser("sum", help="sum eps_n J_mu(an) J_nu(bn) / n^(mu+nu-2k)")
    for name in ("a", "b", "mu", "nu"):
        s.add_argument(f"--{name}", type=float, required=True)
    s.add_argument("--k", type=int, default=0)
    s.add_argument("--terms", type=int, default=10_000)
    s.set_defaults(func=cmd_sum)

    s = sub.add_parser("integral", help="int_0^inf J_mu(at) J_nu(bt) t^-lambda dt")
    for name in ("a", "b", "mu", "nu"):
        s.add_argument(f"--{name}", type=float, required=True)
    s.add_argument("--lambda", dest="lam", type=float, required=True)
    s.add_argument("--closed", action="store_true", help="closed form instead of quadrature")
    s.set_defaults(func=cmd_integral)

    s = sub.add_parser("hyp2f1", help="2F1(p, q; c; z) through the Bessel sum")
    for name in ("p", "q", "c", "z"):
        s.add_argument(f"--{name}", type=float, required=True)
    s.add_argument("--terms", type=int, default=10_000)
    s.add_argument("--direct", action="store_true", help="power series instead")
    s.set_defaults(func=cmd_hyp2f1)

    s = sub.add_parser("resolve-kernel", help="radial kernel resolution at fixed l")
    s.add_argument("--r", "--a", dest="r", type=float, required=True)
    s.add_argument("--r-prime", "--b", dest="r_prime", type=float, required=True)
    s.add_argument("--l", type=int, default=0)
    s.add_argument("--terms", type=int, default=10_000)
    s.set_defaults(func=cmd_resolve_kernel)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except UsageError as e:
        print(f"besselsum: error: {e}", file=sys.stderr)
        return 1
    except DomainError as e:
        print(f"besselsum: domain error: {e}", file=sys.stderr)
        return 2
    except ConvergenceError as e:
        print(f"besselsum: no convergence: {e}", file=sys.stderr)
        return 3
    except OSError as e:
        print(f"besselsum: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
