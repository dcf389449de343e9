"""Command-line front end: enumeration, construction, verification, export.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O or
parse failure. Output for a fixed command line is byte-identical across
runs; data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .injectivize import (eta_system, verify_fixed_point, verify_pair_images,
                          verify_primitivity_argument, verify_theorem, zeta5_fixture)
from .nblock import formula_block_substitution, thue_morse_block_system, verify_block_formula
from .report import VerificationReport
from .substitution import Substitution, pf_eigenvalue
from .thue_morse import (FactorSet, enumerate_by_descendants, enumerate_by_scan,
                         verify_prefix_pairs, verify_quarter_descendants,
                         verify_quarter_minima)

CLAIM_ORDER = ("qandf", "quarters", "firsthalf", "nblock", "pairs",
               "fixedpoint", "primitivity", "theorem")


def _m_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected M or LO..HI, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _claim_list(text: str) -> tuple[str, ...]:
    names = tuple(s.strip() for s in text.split(",") if s.strip())
    for name in names:
        if name not in CLAIM_ORDER:
            raise argparse.ArgumentTypeError(
                f"unknown claim {name!r} (choose from {', '.join(CLAIM_ORDER)})")
    return names


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tmblocks",
        description="Enumerate Thue-Morse factors, build block substitutions and "
                    "their injective refinements, and verify the whole chain.")
    commands = parser.add_subparsers(dest="command", required=True)

    p_factors = commands.add_parser("factors", help="enumerate the factor set A_m")
    p_factors.add_argument("--m", type=int, required=True)
    p_factors.add_argument("--method", choices=("scan", "descend", "both"), default="scan")
    p_factors.add_argument("--format", choices=("text", "json"), default="text")

    p_build = commands.add_parser("build", help="construct a substitution")
    build_kind = p_build.add_subparsers(dest="kind", required=True)
    p_theta = build_kind.add_parser("theta", help="the N-block substitution")
    p_theta.add_argument("--m", type=int, required=True)
    mode = p_theta.add_mutually_exclusive_group()
    mode.add_argument("--windows", action="store_true")
    mode.add_argument("--explicit", action="store_true")
    mode.add_argument("--both", action="store_true")
    p_theta.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p_eta = build_kind.add_parser("eta", help="the injective refinement")
    p_eta.add_argument("--m", type=int, required=True)
    p_eta.add_argument("--format", choices=("text", "json", "dot"), default="text")

    p_fixture = commands.add_parser("fixture", help="dump a hard-coded fixture")
    p_fixture.add_argument("name", choices=("zeta5",))
    p_fixture.add_argument("--format", choices=("text", "json", "dot"), default="text")

    p_verify = commands.add_parser("verify", help="run claim verifiers over a range of m")
    p_verify.add_argument("--m", type=_m_range, required=True, metavar="M|LO..HI")
    p_verify.add_argument("--claims", type=_claim_list, default=CLAIM_ORDER)
    p_verify.add_argument("--tol", type=float, default=1e-9)
    p_verify.add_argument("--depth", type=int, default=12)

    p_eigen = commands.add_parser("eigen", help="dominant eigenvalue and primitivity "
                                                "of a substitution JSON file")
    p_eigen.add_argument("--sub", required=True, metavar="FILE|-")
    return parser


def _factor_table(fs: FactorSet, header: str) -> list[str]:
    size = fs.size
    ncols = 4 if size % 4 == 0 else (2 if size % 2 == 0 else 1)
    rows = size // ncols
    width = len(str(size))
    lines = [header]
    for r in range(rows):
        cells = []
        for c in range(ncols):
            i = c * rows + r
            cells.append(f"w_{i + 1:<{width}} = {fs.words[i]}")
        lines.append("   ".join(cells).rstrip())
    return lines


def _sub_table(sub: Substitution, name: str) -> list[str]:
    return [f"{name}(w_{j + 1}) = {sub.format_word(img)}"
            for j, img in enumerate(sub.images)]


def _emit_substitution(sub: Substitution, name: str, fmt: str) -> None:
    if fmt == "json":
        print(sub.to_json())
    elif fmt == "dot":
        sys.stdout.write(sub.to_dot(name))
    else:
        print("\n".join(_sub_table(sub, name)))


def _cmd_factors(args: argparse.Namespace) -> int:
    if not 1 <= args.m <= 12:
        print(f"error: factors requires 1 <= m <= 12, got {args.m}", file=sys.stderr)
        return 2
    if args.method == "both":
        scan = enumerate_by_scan(args.m)
        desc = enumerate_by_descendants(args.m)
        if scan.words != desc.words:
            print("error: enumeration methods disagree", file=sys.stderr)
            return 1
        fs = scan
    else:
        fs = enumerate_by_scan(args.m) if args.method == "scan" else enumerate_by_descendants(args.m)
    if args.format == "json":
        import json
        print(json.dumps({"m": fs.m, "words": [str(w) for w in fs.words]}))
    else:
        header = f"m={fs.m} N={fs.word_length} count={fs.size}"
        print("\n".join(_factor_table(fs, header)))
    return 0


def _cmd_build_theta(args: argparse.Namespace) -> int:
    explicit = args.explicit or args.both
    if not (2 if explicit else 1) <= args.m <= 12:
        print(f"error: build theta requires m in "
              f"{'2' if explicit else '1'}..12, got {args.m}", file=sys.stderr)
        return 2
    n = 2 ** args.m + 1
    if args.both:
        built = thue_morse_block_system(args.m).block_sub
        formula = formula_block_substitution(args.m)
        if built != formula:
            print("error: window construction and closed form disagree", file=sys.stderr)
            return 1
        sub = built
    elif args.explicit:
        sub = formula_block_substitution(args.m)
    else:
        sub = thue_morse_block_system(args.m).block_sub
    _emit_substitution(sub, f"theta_{n}", args.format)
    return 0


def _cmd_build_eta(args: argparse.Namespace) -> int:
    if not 2 <= args.m <= 12:
        print(f"error: build eta requires 2 <= m <= 12, got {args.m}", file=sys.stderr)
        return 2
    sys_m = eta_system(args.m)
    _emit_substitution(sys_m.eta, f"eta_{2 ** args.m + 1}", args.format)
    return 0


def _cmd_fixture(args: argparse.Namespace) -> int:
    _emit_substitution(zeta5_fixture(), "zeta_5", args.format)
    return 0


def _claim_report(m: int, claim: str, tol: float, depth: int) -> VerificationReport:
    if claim == "qandf":
        return verify_quarter_minima(m)
    if claim == "quarters":
        return verify_quarter_descendants(m)
    if claim == "firsthalf":
        return verify_prefix_pairs(m)
    if claim == "nblock":
        return verify_block_formula(m)
    if claim == "pairs":
        return verify_pair_images(eta_system(m))
    if claim == "fixedpoint":
        return verify_fixed_point(eta_system(m), depth)
    if claim == "primitivity":
        return verify_primitivity_argument(eta_system(m))
    if claim == "theorem":
        return verify_theorem(m, tol, depth)
    raise ValueError(f"unknown claim {claim!r}")


def _cmd_verify(args: argparse.Namespace) -> int:
    lo, hi = args.m
    if lo < 2 or hi > 12:
        print(f"error: verify requires 2 <= m <= 12, got {lo}..{hi}", file=sys.stderr)
        return 2
    claims = tuple(c for c in CLAIM_ORDER if c in args.claims)
    failed = 0
    total = 0
    for m in range(lo, hi + 1):
        for claim in claims:
            rep = _claim_report(m, claim, args.tol, args.depth)
            total += 1
            if rep.ok:
                print(f"PASS m={m} {claim}")
            else:
                failed += 1
                print(f"FAIL m={m} {claim}")
                for entry in rep:
                    if not entry.passed:
                        print(f"  {entry.claim}: {entry.detail or 'failed'}")
    print(f"{total - failed}/{total} claims passed", file=sys.stderr)
    return 1 if failed else 0


def _cmd_eigen(args: argparse.Namespace) -> int:
    try:
        text = sys.stdin.read() if args.sub == "-" else Path(args.sub).read_text()
        sub = Substitution.from_json(text)
    except (OSError, ValueError) as exc:
        print(f"error: could not load substitution: {exc}", file=sys.stderr)
        return 3
    primitive = "true" if sub.is_primitive() else "false"
    try:
        value = pf_eigenvalue(sub.incidence_matrix())
        print(f"PF ≈ {value:.9f}, primitive: {primitive}")
    except ArithmeticError:
        print(f"PF did not converge, primitive: {primitive}")
    return 0


def run(argv: list[str]) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "factors":
        return _cmd_factors(args)
    if args.command == "build":
        return _cmd_build_theta(args) if args.kind == "theta" else _cmd_build_eta(args)
    if args.command == "fixture":
        return _cmd_fixture(args)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "eigen":
        return _cmd_eigen(args)
    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
