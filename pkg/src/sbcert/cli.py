"""Command-line entry point: run the pipeline and emit a JSON certificate."""

import argparse
import sys

from .certificate import certificate_to_json
from .errors import BoundTooLarge, NotPrime, RejectedOverride, WrongResidue
from .pipeline import PipelineOptions, run_pipeline


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sbcert",
        description=(
            "Construct the degree-3 cyclic division algebra attached to a prime "
            "p = 1 (mod 3), verify that its projective units realize the "
            "non-abelian group of order 3p, and emit a JSON certificate."
        ),
    )
    parser.add_argument("--p", type=int, required=True, help="prime with p = 1 (mod 3)")
    parser.add_argument(
        "--a",
        type=int,
        default=None,
        help="override the algebra parameter (must be a non-cube unit mod p)",
    )
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    parser.add_argument(
        "--trials", type=int, default=100, help="sample count for randomized checks"
    )
    parser.add_argument(
        "--norm-search-bound",
        type=int,
        default=None,
        help="height bound for the brute-force norm search; 0 skips it "
        "(default: 1 for p = 7, 0 otherwise)",
    )
    parser.add_argument("--out", default=None, help="certificate path (default: stdout)")
    parser.add_argument("--quiet", action="store_true", help="suppress the stderr summary")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    options = PipelineOptions(
        a=args.a,
        seed=args.seed,
        trials=args.trials,
        norm_search_bound=args.norm_search_bound,
    )
    try:
        cert = run_pipeline(args.p, options)
    except (NotPrime, WrongResidue, RejectedOverride, BoundTooLarge) as exc:
        print(f"sbcert: error: {exc}", file=sys.stderr)
        return 2

    payload = certificate_to_json(cert) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    if not args.quiet:
        group = cert.group
        print(
            f"sbcert: p={cert.p} d={cert.d} a={cert.a} group order {group.order} "
            f"jordan index {group.jordan_index} -> {cert.overall}",
            file=sys.stderr,
        )
    return 0 if cert.passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
