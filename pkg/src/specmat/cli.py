"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 spectrum failure, 4 numerical
guardrail under --strict, 5 singular matrix (log).  The result document
goes to stdout (or --output); human diagnostics go to stderr.
"""

import argparse
import os
import sys
import warnings

from . import __version__, io, matfun, spectral, vandermonde
from .exceptions import (
    ConditioningWarning,
    DegenerateSpectrum,
    NoConvergence,
    NonPrincipalWarning,
    SingularMatrix,
    SpecmatError,
    SpectrumMismatch,
)
from .hermite import Spectrum
from .matfun import BranchSelection
from .spectrum import SpectrumOptions, spectrum_of, validate_spectrum

EXIT_PARSE = 2
EXIT_SPECTRUM = 3
EXIT_GUARDRAIL = 4
EXIT_SINGULAR = 5

DEFAULT_TOL = 1e-6


def parse_spectrum_arg(text: str) -> Spectrum:
    """Parse "a+bi:m,a+bi:m,..." into a spectrum."""
    entries = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        if ":" in piece:
            value, mult = piece.rsplit(":", 1)
            mult = int(mult)
        else:
            value, mult = piece, 1
        alpha = complex(value.strip().replace(" ", "").replace("i", "j"))
        entries.append((alpha, mult))
    if not entries:
        raise ValueError("empty spectrum")
    return Spectrum(entries=tuple(entries))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specmat",
        description="Matrix functions via closed-form spectral decomposition.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("matrix_file", help="matrix document (JSON)")
        p.add_argument("--spectrum", help='eigenvalues as "a+bi:m,..."')
        p.add_argument("--tol", type=float, default=None,
                       help="spectrum validation tolerance")
        p.add_argument("--cluster-tol", type=float, default=1e-6,
                       help="root clustering threshold")
        p.add_argument("--strict", action="store_true",
                       help="escalate numerical guardrail warnings to exit 4")
        p.add_argument("--output", help="write the result document here")

    p_exp = sub.add_parser("exp", help="matrix exponential e^{tA}")
    p_exp.add_argument("-t", type=float, default=1.0)
    common(p_exp)

    p_pow = sub.add_parser("power", help="integer power A^n")
    p_pow.add_argument("-n", type=int, required=True)
    common(p_pow)

    p_drz = sub.add_parser("drazin", help="Drazin inverse power")
    p_drz.add_argument("-n", type=int, default=1)
    common(p_drz)

    p_log = sub.add_parser("log", help="matrix logarithm")
    p_log.add_argument("--branch", help="comma-separated per-eigenvalue offsets")
    common(p_log)

    p_dec = sub.add_parser("decompose", help="Jordan-Chevalley decomposition")
    common(p_dec)

    return parser


def _resolve_tol(args) -> float:
    if args.tol is not None:
        return args.tol
    env = os.environ.get("SPECMAT_TOL")
    if env:
        try:
            return float(env)
        except ValueError:
            pass
    return DEFAULT_TOL


def run(args) -> int:
    try:
        with open(args.matrix_file, encoding="utf-8") as fh:
            matrix = io.parse_matrix_document(fh.read())
    except OSError as exc:
        print(f"specmat: cannot read input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except io.DocumentError as exc:
        print(f"specmat: bad matrix document: {exc}", file=sys.stderr)
        return EXIT_PARSE

    tol = _resolve_tol(args)
    user_spectrum = None
    if args.spectrum:
        try:
            user_spectrum = parse_spectrum_arg(args.spectrum)
        except (ValueError, SpecmatError) as exc:
            print(f"specmat: bad --spectrum: {exc}", file=sys.stderr)
            return EXIT_PARSE

    opts = SpectrumOptions(cluster_tol=args.cluster_tol,
                           user_spectrum=user_spectrum)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            spec = spectrum_of(matrix, opts, validation_tol=tol)
            vandermonde.conditioning_check(spec, spec.total_degree)
            cs = spectral.component_matrices(matrix, spec)
        except (NoConvergence, SpectrumMismatch, DegenerateSpectrum) as exc:
            print(f"specmat: spectrum failure: {exc}", file=sys.stderr)
            return EXIT_SPECTRUM

        diagnostics = {
            "validation_residual": cs.validation_residual,
            "projector_sum_residual": spectral.projector_sum_residual(cs),
        }
        extras = None
        try:
            if args.command == "exp":
                result = matfun.matrix_exponential(cs, args.t)
            elif args.command == "power":
                if args.n < 0:
                    print("specmat: power requires n >= 0", file=sys.stderr)
                    return EXIT_PARSE
                result = matfun.matrix_power(cs, args.n)
            elif args.command == "drazin":
                if args.n < 1:
                    print("specmat: drazin requires n >= 1", file=sys.stderr)
                    return EXIT_PARSE
                result = matfun.drazin_power(cs, args.n)
            elif args.command == "log":
                if args.branch:
                    offsets = tuple(int(b) for b in args.branch.split(","))
                    if len(offsets) != len(spec.entries):
                        print("specmat: --branch needs one offset per eigenvalue",
                              file=sys.stderr)
                        return EXIT_PARSE
                    branch = BranchSelection(offsets=offsets)
                else:
                    branch = matfun.log_branch_principal(spec)
                diagnostics["principal"] = matfun.log_branch_principal(spec).principal
                result = matfun.matrix_log(cs, branch)
            else:  # decompose
                d, n = spectral.jordan_chevalley(cs)
                result = d
                extras = {
                    "nilpotent": io.matrix_to_document(n),
                    "projections": [
                        io.matrix_to_document(p)
                        for p in spectral.spectral_projections(cs)
                    ],
                    "diagonalizable": spectral.is_diagonalizable(cs),
                }
        except SingularMatrix as exc:
            print(f"specmat: {exc}", file=sys.stderr)
            return EXIT_SINGULAR
        except ValueError as exc:
            print(f"specmat: {exc}", file=sys.stderr)
            return EXIT_PARSE

    guardrail = [w for w in caught
                 if issubclass(w.category, (ConditioningWarning, NonPrincipalWarning))]
    for w in guardrail:
        print(f"specmat: warning: {w.message}", file=sys.stderr)
    if args.strict and guardrail:
        return EXIT_GUARDRAIL

    doc = io.result_document(args.command, cs, result, diagnostics, __version__)
    if extras is not None:
        doc["extras"] = extras
    text = io.dump_document(doc)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
