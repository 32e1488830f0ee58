"""Command-line front-end: seed generation, verification suites, transforms.

Exit codes: 0 all checks pass, 1 mathematical failure, 2 parse/usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from .presentations import (
    boso_un_relations,
    check_presentation,
    rel_ord_relations,
)
from .repbuild import (
    MagicUnitary,
    TwistedMatrix,
    build_boso_rep,
    build_sn_rep,
    build_un_rep_from_sn,
    build_xn_rep,
    check_boso_rep,
    check_sn_rep,
    check_un_rep,
    check_xn_rep,
    fundamental_unitarity,
    identity_magic,
    magic_to_twisted,
    paper_seed,
    permutation_magic,
    random_block_magic,
    twisted_rep,
    twisted_to_magic,
    validate_magic,
)
from .report import VerificationReport
from .verifier import (
    check_action,
    check_boso_comult,
    check_braided_commutation,
    check_coassociativity,
    check_commutativity,
    check_comult_welldefined,
    check_extraction_roundtrip,
    check_podles_span,
)

SUITES = ("sn", "un", "boso-sn", "boso-un", "xn-action", "magic-lemma", "commutativity", "all")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    order: int
    suite: str
    seed: str
    mode: str = "exact"
    eps: float = 1e-9
    word_length: int = 3
    out: str | None = None

    def __post_init__(self):
        if not 2 <= self.order <= 12:
            raise UsageError("N must be between 2 and 12")
        if self.suite not in SUITES:
            raise UsageError(f"unknown suite {self.suite!r}")
        if self.mode not in ("exact", "approx"):
            raise UsageError("mode must be 'exact' or 'approx'")
        if self.eps <= 0:
            raise UsageError("eps must be positive in approx mode")


def _load_seed(spec: str, n: int) -> MagicUnitary:
    """Resolve a builtin seed name or a JSON file path."""
    if spec == "identity":
        return identity_magic(n)
    if spec == "paper-n4":
        return paper_seed(n)
    if spec.startswith("permutation:"):
        try:
            perm = [int(x) for x in spec.split(":", 1)[1].split(",")]
        except ValueError as exc:
            raise UsageError(f"bad permutation spec {spec!r}") from exc
        return permutation_magic(n, perm)
    if spec.startswith("random-block:"):
        try:
            d, rng_seed = (int(x) for x in spec.split(":", 1)[1].split(","))
        except ValueError as exc:
            raise UsageError(f"bad random-block spec {spec!r}") from exc
        return random_block_magic(n, d, rng_seed)
    try:
        with open(spec) as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read seed {spec!r}: {exc}") from exc
    try:
        return MagicUnitary.from_json(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed seed file {spec!r}: {exc}") from exc


def _write_json(obj: dict, out: str | None) -> None:
    text = json.dumps(obj, indent=2)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _prefixed(target: VerificationReport, prefix: str, source: VerificationReport):
    for item in source.items:
        target.add(f"{prefix}:{item.label}", item.residual, item.passed, item.exact)


def run_suite(config: RunConfig) -> VerificationReport:
    n = config.order
    mode, eps = config.mode, config.eps
    u = _load_seed(config.seed, n)
    merged = VerificationReport(f"suite-{config.suite}", mode=mode, eps=eps, seed=config.seed)
    suites = SUITES[:-1] if config.suite == "all" else (config.suite,)

    sn_rep = None

    def sn():
        nonlocal sn_rep
        if sn_rep is None:
            sn_rep = build_sn_rep(u)
        return sn_rep

    for suite in suites:
        if suite == "magic-lemma":
            rm = validate_magic(u, mode=mode, eps=eps)
            _prefixed(merged, "magic", rm)
            rt = check_presentation(
                rel_ord_relations(n), twisted_rep(magic_to_twisted(u)), mode=mode, eps=eps
            )
            _prefixed(merged, "rel-ord", rt)
            merged.add(
                "magic-lemma-equivalence", 0.0, rm.passed == rt.passed, exact=True
            )
        elif suite == "sn":
            _prefixed(merged, "sn", check_sn_rep(sn(), mode, eps))
            _prefixed(merged, "sn-comult", check_comult_welldefined(sn(), "q", mode, eps))
            _prefixed(merged, "sn-coassoc", check_coassociativity(sn(), "q", mode, eps))
            _prefixed(merged, "sn-braid", check_braided_commutation(sn(), mode, eps))
            wl = config.word_length if sn().space.dim <= 8 else min(config.word_length, 2)
            cap = 64 if sn().space.dim <= 8 else 16
            _prefixed(merged, "sn-podles", check_podles_span(sn(), "q", wl, max_basis=cap))
        elif suite == "un":
            un_rep = build_un_rep_from_sn(sn())
            _prefixed(merged, "un", check_un_rep(un_rep, mode, eps))
            _prefixed(merged, "un-comult", check_comult_welldefined(un_rep, "u", mode, eps))
        elif suite == "boso-sn":
            boso = build_boso_rep(sn())
            _prefixed(merged, "boso-sn", check_boso_rep(boso, mode, eps))
            _prefixed(merged, "fundamental", fundamental_unitarity(boso, mode, eps))
            _prefixed(merged, "boso-comult", check_boso_comult(boso, mode, eps))
        elif suite == "boso-un":
            boso_u = build_boso_rep(build_un_rep_from_sn(sn()), gen_name="u")
            ru = check_presentation(boso_un_relations(n), boso_u, mode=mode, eps=eps)
            _prefixed(merged, "boso-un", ru)
        elif suite == "xn-action":
            xn = build_xn_rep(n)
            _prefixed(merged, "xn", check_xn_rep(xn, mode, eps))
            _prefixed(merged, "action", check_action(xn, sn(), mode, eps))
            _prefixed(merged, "extraction", check_extraction_roundtrip(xn, sn()))
        elif suite == "commutativity":
            result = check_commutativity(sn())
            _prefixed(merged, "commutativity", result.report)
    return merged


# -- subcommands -----------------------------------------------------------


def cmd_gen(args) -> int:
    if not 2 <= args.N <= 12:
        raise UsageError("N must be between 2 and 12")
    if args.kind == "identity":
        u = identity_magic(args.N)
    elif args.kind == "paper-n4":
        u = paper_seed(args.N)
    elif args.kind == "permutation":
        if not args.perm:
            raise UsageError("--perm is required for kind=permutation")
        try:
            perm = [int(x) for x in args.perm.split(",")]
            u = permutation_magic(args.N, perm)
        except ValueError as exc:
            raise UsageError("bad --perm value") from exc
    elif args.kind == "random-block":
        u = random_block_magic(args.N, args.d, args.rng_seed)
    else:
        raise UsageError(f"unknown kind {args.kind!r}")
    if not validate_magic(u).passed:
        raise UsageError("generated seed failed magic validation")
    _write_json(u.to_json(), args.out)
    return 0


def cmd_verify(args) -> int:
    config = RunConfig(
        order=args.N,
        suite=args.suite,
        seed=args.seed,
        mode=args.mode,
        eps=args.eps,
        word_length=args.word_length,
        out=args.out,
    )
    report = run_suite(config)
    payload = report.to_json()
    payload["timestamp"] = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
    _write_json(payload, config.out)
    print(report.summary(), file=sys.stderr)
    return 0 if report.passed else 1


def cmd_transform(args) -> int:
    try:
        with open(args.input) as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {args.input!r}: {exc}") from exc
    try:
        if args.direction == "magic-to-twisted":
            out = magic_to_twisted(MagicUnitary.from_json(obj))
        elif args.direction == "twisted-to-magic":
            out = twisted_to_magic(TwistedMatrix.from_json(obj))
        else:
            raise UsageError(f"unknown direction {args.direction!r}")
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed input: {exc}") from exc
    _write_json(out.to_json(), args.out)
    return 0


def cmd_report(args) -> int:
    try:
        with open(args.input) as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {args.input!r}: {exc}") from exc
    try:
        items = obj["items"]
        print(f"subject: {obj['subject']}  mode: {obj['mode']}  seed: {obj.get('seed')}")
        bad = 0
        for item in items:
            mark = "ok " if item["pass"] else "FAIL"
            print(f"  [{mark}] {item['label']}  residual={item['residual']}")
            bad += 0 if item["pass"] else 1
        print(f"{len(items) - bad}/{len(items)} checks passed")
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed report: {exc}") from exc
    return 0 if bad == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="anyon-qpg",
        description="Exact verification of anyonic quantum permutation group identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a magic unitary seed file")
    p_gen.add_argument("--kind", required=True,
                       choices=["identity", "permutation", "paper-n4", "random-block"])
    p_gen.add_argument("--N", type=int, required=True)
    p_gen.add_argument("--perm", help="comma-separated permutation of 0..N-1")
    p_gen.add_argument("--d", type=int, default=4, help="block dimension for random-block")
    p_gen.add_argument("--rng-seed", type=int, default=0)
    p_gen.add_argument("--out")
    p_gen.set_defaults(func=cmd_gen)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("--N", type=int, required=True)
    p_ver.add_argument("--suite", default="all", choices=list(SUITES))
    p_ver.add_argument("--seed", default="identity",
                       help="builtin (identity, paper-n4, permutation:..., random-block:d,seed) or file")
    p_ver.add_argument("--mode", default="exact", choices=["exact", "approx"])
    p_ver.add_argument("--eps", type=float, default=1e-9)
    p_ver.add_argument("--word-length", type=int, default=3)
    p_ver.add_argument("--out")
    p_ver.set_defaults(func=cmd_verify)

    p_tr = sub.add_parser("transform", help="magic <-> twisted Fourier transform")
    p_tr.add_argument("--input", required=True)
    p_tr.add_argument("--direction", required=True,
                      choices=["magic-to-twisted", "twisted-to-magic"])
    p_tr.add_argument("--out")
    p_tr.set_defaults(func=cmd_transform)

    p_rep = sub.add_parser("report", help="pretty-print a report file")
    p_rep.add_argument("--input", required=True)
    p_rep.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
