"""``fresnelkit`` command-line tool.

Exit codes: 0 success, 2 spec/argument parse error, 3 precondition error,
4 no inverse or no wave (an informative result, not a failure).
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from fractions import Fraction

from . import report, specfile
from .dispersion import quartic_of
from .errors import GradeError, NoInverse, NotApplicable, PreconditionError, SpaceMismatch
from .exterior import one_form, scalar
from .media import random_recipe

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_NO_RESULT = 0, 2, 3, 4

GENERATE_KINDS = ("axion", "skewon-axion", "skewon", "p-axion", "p-medium", "special-p-axion",
                  "case2", "case1", "q-medium", "q-antisym", "raw")


def _rational(text: str):
    try:
        return scalar(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _finish(rep: dict, args, started: float) -> None:
    if getattr(args, "timing", False):
        rep["timing_seconds"] = Fraction(round(time.perf_counter() - started, 6)).limit_denominator(10 ** 6)
    render = report.render_json if args.json else report.render_text
    _emit(render(rep, as_float=args.float), args.out)


def cmd_classify(args) -> int:
    started = time.perf_counter()
    _finish(report.classify_report(specfile.load(args.spec)), args, started)
    return EXIT_OK


def cmd_invert(args) -> int:
    started = time.perf_counter()
    rep, found = report.invert_report(specfile.load(args.spec))
    _finish(rep, args, started)
    return EXIT_OK if found else EXIT_NO_RESULT


def cmd_wave(args) -> int:
    nu = one_form(*args.nu)
    if nu.is_zero():
        raise PreconditionError("wave one-form must be nonzero")
    started = time.perf_counter()
    rep, found = report.wave_report(specfile.load(args.spec), nu)
    _finish(rep, args, started)
    return EXIT_OK if found else EXIT_NO_RESULT


def cmd_surface(args) -> int:
    from .surface import sample_surface, to_csv  # numpy is only needed here

    q = quartic_of(specfile.load(args.spec).build())
    _emit(to_csv(sample_surface(q, args.frequency, args.resolution)), args.out)
    return EXIT_OK


def cmd_dump_conventions(args) -> int:
    rep = report.conventions_report()
    render = report.render_json if args.json else report.render_text
    _emit(render(rep), args.out)
    return EXIT_OK


def cmd_generate(args) -> int:
    recipe = random_recipe(args.kind, random.Random(args.seed), args.size)
    _emit(specfile.dumps(recipe), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fresnelkit",
                                description="Exact analysis of electromagnetic medium bidyadics.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=True):
        sp.add_argument("--out", help="write the result to this file instead of stdout")
        if formats:
            sp.add_argument("--json", action="store_true", help="machine-readable JSON report")
            sp.add_argument("--float", action="store_true", help="render rationals as floats")
            sp.add_argument("--timing", action="store_true", help="include wall-clock timing (not reproducible)")

    sp = sub.add_parser("classify", help="classify a medium and report its quartic, decomposition and inverse")
    sp.add_argument("spec")
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("invert", help="exact inverse (case-1 formula when applicable)")
    sp.add_argument("spec")
    common(sp)
    sp.set_defaults(func=cmd_invert)

    sp = sub.add_parser("wave", help="plane-wave potential and fields for a wave one-form")
    sp.add_argument("spec")
    sp.add_argument("--nu", nargs=4, type=_rational, required=True, metavar="X",
                    help="four rational components of the wave one-form")
    common(sp)
    sp.set_defaults(func=cmd_wave)

    sp = sub.add_parser("surface", help="float CSV samples of the Fresnel surface along rays")
    sp.add_argument("spec")
    sp.add_argument("--frequency", type=_rational, default=1)
    sp.add_argument("--resolution", type=int, default=8)
    common(sp, formats=False)
    sp.set_defaults(func=cmd_surface)

    sp = sub.add_parser("dump-conventions", help="print the frozen basis and sign conventions")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_dump_conventions)

    sp = sub.add_parser("generate", help="write a seeded random spec file")
    sp.add_argument("kind", choices=GENERATE_KINDS)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--size", type=int, default=3, help="integer entries are drawn from [-size, size]")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_generate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except specfile.SpecError as exc:
        print(f"fresnelkit: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"fresnelkit: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NoInverse as exc:
        print(f"fresnelkit: no inverse: {exc}", file=sys.stderr)
        return EXIT_NO_RESULT
    except (PreconditionError, SpaceMismatch, GradeError, NotApplicable) as exc:
        print(f"fresnelkit: precondition error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
