"""Command-line entry point.

    galoiscensus classify --coeffs a1,...,an [--samples N]
    galoiscensus census --degree n --height H [--mode M] [--shards K] [--workers W]
                        [--budget B] [--checkpoint FILE] [--out PREFIX]
    galoiscensus resolvent --name {theta,f10,f15,psi,phi} [--verify] [--out FILE]
    galoiscensus newton --poly FILE
    galoiscensus points --poly FILE --box B1,B2[,B3] [--var NAME] [--budget B]

Exit status is 0 on success, 1 for domain errors (a reducible input, a
stale cache, a refused budget) and 2 for usage errors.  Errors go to
standard error as one line starting with ``error[usage]:``,
``error[domain]:`` or ``error[budget]:``.

Polynomial files for ``newton`` and ``points`` hold one expression such as
``y^6 - 40*y^5 + 3*e^4*y``.  Lines starting with ``#`` are comments.  A line
``variables: e, y`` fixes the variable order; otherwise the names are
sorted.  The first variable is the x axis of the Newton polygon.
"""

import argparse
import json
import os
import sys
import time

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2

RESOLVENT_NAMES = ("theta", "f10", "f15", "psi", "phi")
NEWTON_SCHEMA = "galoiscensus.newton/1"
POINTS_SCHEMA = "galoiscensus.points/1"


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text, what):
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t != ""]
    except ValueError:
        raise UsageError("%s must be comma-separated integers, got %r" % (what, text))


def _positive(name):
    def conv(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError("%s must be an integer, got %r" % (name, text))
        if v < 1:
            raise argparse.ArgumentTypeError("%s must be positive, got %d" % (name, v))
        return v
    return conv


def _nonnegative(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("height must be an integer, got %r" % text)
    if v < 0:
        raise argparse.ArgumentTypeError("height must be non-negative, got %d" % v)
    return v


def build_parser():
    p = _Parser(prog="galoiscensus", description="Galois groups of small-height polynomials.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    c = sub.add_parser("classify", help="classify one irreducible polynomial of degree 3 to 6")
    c.add_argument("--coeffs", required=True,
                   help="a1,...,an of X^n + a1 X^(n-1) + ... + an (use --coeffs=-1,... for a leading minus)")
    c.add_argument("--samples", type=_positive("--samples"), default=None,
                   help="primes to sample for cycle types")

    s = sub.add_parser("census", help="exhaustive census over a height box")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--height", type=_nonnegative, required=True)
    s.add_argument("--mode", default="full", choices=("full", "solvable_only", "reducible_only"))
    s.add_argument("--shards", type=_positive("--shards"), default=1)
    s.add_argument("--workers", type=_positive("--workers"), default=1)
    s.add_argument("--budget", type=_positive("--budget"), default=None,
                   help="maximum number of tuples (default from GALOIS_CENSUS_BUDGET or 2^30)")
    s.add_argument("--checkpoint", default=None, help="JSON sidecar for resuming")
    s.add_argument("--out", default=None,
                   help="output prefix; writes PREFIX.csv and PREFIX.json (default census_n<n>_H<H>)")

    r = sub.add_parser("resolvent", help="regenerate a resolvent, optionally diffing against the cache")
    r.add_argument("--name", required=True)
    r.add_argument("--verify", action="store_true")
    r.add_argument("--out", default=None, help="write the regenerated text here instead of stdout")

    n = sub.add_parser("newton", help="Newton polygon and absolute irreducibility verdict")
    n.add_argument("--poly", required=True)

    q = sub.add_parser("points", help="count integer points on a curve or surface in a box")
    q.add_argument("--poly", required=True)
    q.add_argument("--box", required=True, help="B1,B2 for a curve or B1,B2,B3 for a surface")
    q.add_argument("--var", default=None, help="distinguished (monic) variable of a surface")
    q.add_argument("--budget", type=_positive("--budget"), default=None)
    return p


def read_poly_file(path):
    from .symres import parse_mpoly
    if not os.path.isfile(path):
        raise UsageError("polynomial file %s does not exist" % path)
    variables = None
    body = []
    with open(path) as fh:
        for line in fh:
            s = line.strip()
            if not s or s.startswith("#"):
                continue
            if s.lower().startswith("variables:"):
                variables = [v.strip() for v in s.split(":", 1)[1].replace(",", " ").split()]
                continue
            body.append(s)
    if not body:
        raise UsageError("polynomial file %s holds no expression" % path)
    try:
        return parse_mpoly(" ".join(body), variables)
    except (ValueError, KeyError, IndexError) as exc:
        raise UsageError("cannot parse %s: %s" % (path, exc))


def _emit(doc, out):
    out.write(json.dumps(doc, sort_keys=True, indent=1) + "\n")


def cmd_classify(args, out):
    from .classify import classify, verdict_document, DEFAULT_SAMPLES
    from .polycore import IntPoly
    coeffs = _int_list(args.coeffs, "--coeffs")
    if not 3 <= len(coeffs) <= 6:
        raise UsageError("--coeffs needs 3 to 6 values (degree 3 to 6), got %d" % len(coeffs))
    f = IntPoly(coeffs)
    try:
        gclass, cert = classify(f, args.samples or DEFAULT_SAMPLES)
    except ValueError as exc:
        raise DomainError(str(exc))
    _emit(verdict_document(f, gclass, cert), out)


def cmd_census(args, out):
    from .census import run_census
    if args.degree not in (3, 4, 5, 6):
        raise UsageError("--degree must be 3, 4, 5 or 6, got %d" % args.degree)
    if args.mode == "solvable_only" and args.degree != 5:
        raise UsageError("--mode solvable_only needs --degree 5")
    prefix = args.out or "census_n%d_H%d" % (args.degree, args.height)
    report = run_census(args.degree, args.height, mode=args.mode, shards=args.shards,
                        workers=args.workers, budget=args.budget, checkpoint=args.checkpoint)
    text = report.to_csv()
    with open(prefix + ".csv", "w", newline="\n") as fh:
        fh.write(text)
    with open(prefix + ".json", "w", newline="\n") as fh:
        fh.write(report.to_json())
    out.write(text)


def cmd_resolvent(args, out):
    from .symres import generate, verify_cache
    if args.name not in RESOLVENT_NAMES:
        raise UsageError("unknown resolvent %r (choose from %s)" % (args.name, ", ".join(RESOLVENT_NAMES)))
    if args.verify:
        ok, diff = verify_cache(args.name)
        if not ok:
            for line in diff[:200]:
                sys.stderr.write(line + "\n")
            raise DomainError("cache for %s does not match the regenerated resolvent" % args.name)
        out.write("cache matches\n")
        return
    text = generate(args.name).to_text()
    if args.out:
        with open(args.out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)


def cmd_newton(args, out):
    from .geom import absolutely_irreducible_bcg, polygon_document
    P = read_poly_file(args.poly)
    if len(P.variables) != 2:
        raise UsageError("newton needs a polynomial in two variables, got %s" % (list(P.variables),))
    if P.is_zero():
        raise DomainError("the zero polynomial has no Newton polygon")
    doc = polygon_document(absolutely_irreducible_bcg(P))
    doc["schema"] = NEWTON_SCHEMA
    doc["variables"] = list(P.variables)
    _emit(doc, out)


def cmd_points(args, out):
    from .geom import count_points_curve, count_points_surface, point_count_document, DEFAULT_BUDGET
    box = _int_list(args.box, "--box")
    if len(box) not in (2, 3) or any(b < 1 for b in box):
        raise UsageError("--box needs two or three positive bounds, got %r" % args.box)
    P = read_poly_file(args.poly)
    if len(P.variables) != len(box):
        raise UsageError("the box has %d bounds but the polynomial has %d variables"
                         % (len(box), len(P.variables)))
    if args.var is not None and args.var not in P.variables:
        raise UsageError("--var %s is not a variable of the polynomial" % args.var)
    if P.is_zero():
        raise DomainError("the zero polynomial vanishes everywhere")
    budget = args.budget or DEFAULT_BUDGET
    start = time.time()
    try:
        if len(box) == 2:
            count = count_points_curve(P, box, budget=budget)
        else:
            count = count_points_surface(P, box, variable=args.var, budget=budget)
    except ValueError as exc:
        if type(exc).__name__ == "BudgetError":
            raise
        raise DomainError(str(exc))
    doc = point_count_document(P, box, count, time.time() - start)
    doc["schema"] = POINTS_SCHEMA
    _emit(doc, out)


COMMANDS = {
    "classify": cmd_classify,
    "census": cmd_census,
    "resolvent": cmd_resolvent,
    "newton": cmd_newton,
    "points": cmd_points,
}


def run(argv=None, out=None):
    """Run one command; returns the exit status instead of exiting."""
    from .census import BudgetExceeded
    from .geom import BudgetError
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        sys.stderr.write("error[usage]: %s\n" % exc)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    try:
        COMMANDS[args.command](args, out)
    except UsageError as exc:
        sys.stderr.write("error[usage]: %s\n" % exc)
        return EXIT_USAGE
    except (BudgetExceeded, BudgetError) as exc:
        sys.stderr.write("error[budget]: %s\n" % exc)
        return EXIT_DOMAIN
    except (DomainError, ValueError) as exc:
        sys.stderr.write("error[domain]: %s\n" % exc)
        return EXIT_DOMAIN
    return EXIT_OK


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
