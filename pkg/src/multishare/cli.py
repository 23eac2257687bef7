"""Command-line interface: split, reconstruct, census, blowup, attack.

Every report ends with a ``RESULT key=value ...`` line for scripts.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import sharefile
from .analysis import Method, blowup_factor, degeneracy_census, degenerate_tuples, eq1_check
from .attacks import divisibility_attack, divisibility_control, related_share_forgery
from .errors import (
    AllZeroSecrets,
    ChunkExceedsModulus,
    DegenerateSecretSet,
    DuplicateX,
    InvalidParams,
    KTooLargeForField,
    LeadingSecretZero,
    MixedShares,
    ModulusMismatch,
    NotPrime,
    QuorumTooSmall,
    ShareFormatError,
    SharingError,
    TooLarge,
    WraparoundRisk,
)
from .field import PrimeModulus
from .schemes import (
    RandomSource,
    Scheme,
    Share,
    chunk_secret,
    coeff_reconstruct,
    coeff_split,
    points_reconstruct,
    points_split,
    shamir_reconstruct,
    shamir_split,
    unchunk_secret,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CENSUS_MISMATCH = 13

# Most specific classes first: lookup stops at the first isinstance match.
EXIT_CODES: list[tuple[type[BaseException], int]] = [
    (DegenerateSecretSet, 3),
    (LeadingSecretZero, 4),
    (AllZeroSecrets, 4),
    (QuorumTooSmall, 6),
    (MixedShares, 7),
    (ModulusMismatch, 7),
    (ShareFormatError, 8),
    (DuplicateX, 9),
    (ChunkExceedsModulus, 10),
    (TooLarge, 11),
    (WraparoundRisk, 12),
    (NotPrime, 14),
    (KTooLargeForField, 5),
    (InvalidParams, 5),
    (SharingError, 1),
]


def exit_code_for(exc: BaseException) -> int:
    for cls, code in EXIT_CODES:
        if isinstance(exc, cls):
            return code
    return 1


def fmt_fraction(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def result_line(**fields) -> str:
    parts = []
    for key, value in fields.items():
        if isinstance(value, bool):
            value = str(value).lower()
        elif isinstance(value, Fraction):
            value = fmt_fraction(value)
        parts.append(f"{key}={value}")
    return "RESULT " + " ".join(parts)


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


# -- split / reconstruct ---------------------------------------------------------

def cmd_split(args) -> int:
    F = PrimeModulus(args.p)
    scheme = Scheme(args.scheme)
    length = None
    if args.secret_file is not None:
        if scheme is not Scheme.COEFF:
            raise InvalidParams("--secret-file is only supported with --scheme coeff")
        data = Path(args.secret_file).read_bytes()
        length = len(data)
        secrets = chunk_secret(data, args.k_secrets or args.threshold, F)
    else:
        secrets = [F(s) if 0 <= s < F.p else _bad_secret(s, F) for s in args.secrets]

    needs_seed = scheme is Scheme.SHAMIR or (scheme is Scheme.COEFF and args.threshold > len(secrets))
    if needs_seed and args.seed is None:
        raise _Usage(f"--seed is required for {scheme.value} sharing with random coefficients")
    rng = RandomSource(args.seed) if args.seed is not None else None

    if scheme is Scheme.SHAMIR:
        if len(secrets) != 1:
            raise InvalidParams("shamir shares exactly one secret; run it once per secret")
        shares = shamir_split(secrets[0], args.threshold, args.n, rng)
    elif scheme is Scheme.POINTS:
        if args.threshold != len(secrets):
            raise InvalidParams(
                f"the points scheme ties the threshold to the number of secrets ({len(secrets)})"
            )
        shares = points_split(secrets, args.n, strict=not args.allow_degenerate)
    else:
        shares = coeff_split(secrets, args.threshold, args.n, rng)

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    k_secrets = len(secrets)
    for i, share in enumerate(shares, start=1):
        sharefile.write(out / f"share-{i}.txt",
                        sharefile.ShareFile.from_shares([share], k_secrets, [i], length))
    manifest = sharefile.ShareFile.from_shares(shares, k_secrets, length=length)
    lines = [manifest.header()] + [f"file index={i} x={s.x.value} name=share-{i}.txt"
                                   for i, s in enumerate(shares, start=1)]
    (out / "manifest.txt").write_text("\n".join(lines) + "\n", encoding="ascii", newline="\n")
    print(f"wrote {len(shares)} {scheme.value} shares (threshold {shares[0].threshold}) to {out}")
    print(result_line(scheme=scheme.value, n=len(shares), threshold=shares[0].threshold,
                      k_secrets=k_secrets, out_dir=out))
    return EXIT_OK


def _bad_secret(s, F):
    raise InvalidParams(f"secret {s} is not a residue mod {F.p}")


def _load_shares(paths) -> tuple[list[Share], sharefile.ShareFile]:
    files = [sharefile.read(p) for p in paths]
    shares = [s for f in files for s in f.to_shares()]
    first = files[0]
    for f in files[1:]:
        if (f.p, f.scheme, f.threshold, f.k_secrets, f.length) != (
            first.p, first.scheme, first.threshold, first.k_secrets, first.length
        ):
            raise MixedShares("share files come from different sharings")
    return shares, first


def cmd_reconstruct(args) -> int:
    shares, meta = _load_shares(args.shares)
    if meta.scheme is Scheme.SHAMIR:
        secrets = [shamir_reconstruct(shares)]
    elif meta.scheme is Scheme.POINTS:
        secrets = points_reconstruct(shares)
    else:
        secrets = coeff_reconstruct(shares, args.k_secrets or meta.k_secrets)
    if args.secret_file_out is not None:
        if meta.length is None:
            raise InvalidParams("these shares were not made from a secret file")
        Path(args.secret_file_out).write_bytes(unchunk_secret(secrets, meta.length))
    print(",".join(str(s.value) for s in secrets))
    return EXIT_OK


# -- analysis --------------------------------------------------------------------

def cmd_census(args) -> int:
    methods = [Method.INTERPOLATE, Method.VANDERMONDE] if args.method == "both" else [Method(args.method)]
    reports = []
    status = EXIT_OK
    for p in args.p:
        for k in args.k:
            if k > p:
                continue
            report = degeneracy_census(p, k, methods[0])
            ok = eq1_check(report)
            extra = {}
            if len(methods) == 2:
                a = set(degenerate_tuples(p, k, Method.INTERPOLATE))
                b = set(degenerate_tuples(p, k, Method.VANDERMONDE))
                extra["methods_agree"] = a == b
                ok = ok and a == b
            reports.append(report)
            print(f"p={p} k={k}: {report.degenerate_count} of {report.total_tuples} ordered secret "
                  f"tuples are degenerate ({float(report.failure_percent):.4g}%), "
                  f"closed form p^(k-1) = {report.closed_form}")
            print(result_line(degenerate=report.degenerate_count, total=report.total_tuples,
                              percent=report.failure_percent, closed_form_ok=ok, p=p, k=k, **extra))
            if not ok:
                status = EXIT_CENSUS_MISMATCH
    if args.plot and reports:
        from .plotting import plot_census
        print(f"figure: {plot_census(reports, args.plot)}")
    return status


def cmd_blowup(args) -> int:
    scheme = Scheme(args.scheme)
    threshold = args.threshold
    if threshold is None:
        # only metadata for shamir; packed schemes default to m = k
        threshold = min(2, args.n) if scheme is Scheme.SHAMIR else args.k_secrets
    report = blowup_factor(scheme, args.n, threshold, args.k_secrets, args.d)
    print(f"{scheme.value}: {args.k_secrets} secret(s) of size {args.d} in {args.n} shares "
          f"-> blow-up {fmt_fraction(report.blowup)}")
    print(result_line(blowup=report.blowup, scheme=scheme.value, n=args.n,
                      threshold=threshold, k_secrets=args.k_secrets, d=args.d))
    return EXIT_OK


def _single_share(args) -> Share:
    if args.share is not None:
        shares = sharefile.read(args.share).to_shares()
        if len(shares) != 1:
            raise ShareFormatError(f"{args.share} holds {len(shares)} shares, expected one")
        return shares[0]
    missing = [f for f in ("p", "x", "y", "threshold") if getattr(args, f) is None]
    if missing:
        raise _Usage("give --share FILE or all of --p --x --y --threshold")
    F = PrimeModulus(args.p)
    return Share(Scheme(args.scheme), F, args.threshold, F(args.x), F(args.y))


def cmd_attack(args) -> int:
    if args.mode == "div":
        if args.r is None:
            raise _Usage("--mode div needs --r")
        share = _single_share(args)
        inf = divisibility_attack(share, args.r)
        verdict = "is" if inf.divisible else "is NOT"
        print(f"q({inf.u.value}) = {inf.q_u.value} {verdict} a multiple of {inf.u.value}, so a_0 "
              f"{verdict} either; {inf.search_space_size} candidates remain")
        print(result_line(divisible=inf.divisible, space=inf.search_space_size,
                          u=inf.u.value, q_u=inf.q_u.value, r=args.r))
        return EXIT_OK
    if args.mode == "related":
        if args.d is None:
            raise _Usage("--mode related needs --d")
        share = _single_share(args)
        forgery = related_share_forgery(share, args.d)
        forged = forgery.forged_share
        if args.out is not None:
            k_secrets = sharefile.read(args.share).k_secrets if args.share else share.threshold
            sharefile.write(args.out, sharefile.ShareFile.from_shares([forged], k_secrets))
        print(f"share ({share.x.value}, {share.y.value}) scaled by {forgery.d.value} "
              f"-> ({forged.x.value}, {forged.y.value})")
        print(result_line(x=forged.x.value, y=forged.y.value, d=forgery.d.value))
        return EXIT_OK
    # control
    for name in ("p", "threshold", "u", "r"):
        if getattr(args, name) is None:
            raise _Usage(f"--mode control needs --{name}")
    results = {}
    for scheme in (Scheme.COEFF, Scheme.SHAMIR):
        res = divisibility_control(scheme, args.p, args.threshold, args.u, args.r, args.trials, args.seed)
        results[scheme.value] = res
        print(result_line(scheme=scheme.value, trials=res.trials,
                          share_divisible_rate=f"{res.share_divisible_rate:.4f}",
                          agreement_rate=f"{res.agreement_rate:.4f}"))
    if args.plot:
        from .plotting import plot_control
        print(f"figure: {plot_control(results, args.u, args.plot)}")
    return EXIT_OK


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multishare", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("split", help="split secrets into share files")
    sp.add_argument("--scheme", choices=[s.value for s in Scheme], required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--threshold", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--secrets", type=_int_list)
    src.add_argument("--secret-file", help="raw bytes, chunked into --k-secrets field elements (coeff only)")
    sp.add_argument("--k-secrets", type=int, help="number of chunks for --secret-file (default: threshold)")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--allow-degenerate", action="store_true",
                    help="points scheme: emit shares even if the secrets interpolate below degree k-1")
    sp.add_argument("--out-dir", required=True)
    sp.set_defaults(func=cmd_split)

    rp = sub.add_parser("reconstruct", help="recover secrets from share files")
    rp.add_argument("--shares", nargs="+", required=True)
    rp.add_argument("--k-secrets", type=int, help="secrets packed in coeff shares (default: from header)")
    rp.add_argument("--secret-file-out")
    rp.set_defaults(func=cmd_reconstruct)

    cp = sub.add_parser("census", help="count degenerate points-scheme secret tuples")
    cp.add_argument("--p", type=_int_list, required=True)
    cp.add_argument("--k", type=_int_list, required=True)
    cp.add_argument("--method", choices=["interpolate", "vandermonde", "both"], default="interpolate")
    cp.add_argument("--plot", help="write a failure-rate figure to this path")
    cp.set_defaults(func=cmd_census)

    bp = sub.add_parser("blowup", help="storage blow-up factor of a scheme")
    bp.add_argument("--scheme", choices=[s.value for s in Scheme], required=True)
    bp.add_argument("--n", type=int, required=True)
    bp.add_argument("--threshold", type=int)
    bp.add_argument("--k-secrets", type=int, required=True)
    bp.add_argument("--d", type=int, default=1)
    bp.set_defaults(func=cmd_blowup)

    ap = sub.add_parser("attack", help="run the divisibility or related-secrets attack")
    ap.add_argument("--mode", choices=["div", "related", "control"], required=True)
    ap.add_argument("--share", help="share file holding one share")
    ap.add_argument("--scheme", choices=["coeff", "points"], default="coeff",
                    help="scheme of a share given by --p/--x/--y")
    ap.add_argument("--p", type=int)
    ap.add_argument("--x", type=int)
    ap.add_argument("--y", type=int)
    ap.add_argument("--threshold", type=int)
    ap.add_argument("--r", type=int)
    ap.add_argument("--d", type=int)
    ap.add_argument("--out", help="write the forged share here (related mode)")
    ap.add_argument("--u", type=int, help="share x-coordinate watched in control mode")
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--plot", help="write the control figure to this path")
    ap.set_defaults(func=cmd_attack)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Usage as exc:
        parser.error(str(exc))
    except SharingError as exc:
        name = type(exc).__name__
        print(f"multishare: error: {name}: {exc}", file=sys.stderr)
        return exit_code_for(exc)
    except OSError as exc:
        print(f"multishare: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
