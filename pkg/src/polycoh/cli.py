"""Command-line front end.

Subcommands: check (verdict over a ring), primes (the congruence-class
answer), witness (a decomposition at one prime), decompose (all of them),
catalog (table dump), verify (brute-force cross-check suites), and
molien-verify (invariant-theory sweep over the monomial families).

The process exit status is 0 whenever evaluation succeeded, regardless of
the mathematical verdict; nonzero means bad input or an internal error.
JSON output is byte-stable for fixed inputs.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
import time

from . import __version__
from .catalog import Catalog, DegreeMultiset, builtin, export_json
from .decompose import decompose, decompose_at_prime
from .errors import PolycohError, RingSpecError
from .molien import DEFAULT_BUDGET, doubled_degrees, group_order, verify_degrees
from .ntheory import divisors, is_prime, prime_factors
from .realizability import (
    PrimeSpec,
    congruence_classes,
    realizable_at_prime,
    realizable_over,
)
from .residues import as_json_dict, make, normalize
from .verify import check_integral_realizability, check_p3_realizability


def parse_ring(text: str) -> PrimeSpec:
    """Translate a coefficient-ring description into its non-unit primes.

    Accepted forms: "Z" (all primes), "Q" (none), "F_p" (just p),
    "Z[1/a,1/b,...]" (all primes not dividing the inverted integers),
    "primes=2,5" (an explicit list), and "primes=mod:N:a1,a2" (the primes
    in the given residue classes).
    """
    t = text.strip()
    if t == "Z":
        return PrimeSpec.all_primes()
    if t == "Q":
        return PrimeSpec.finite(())
    m = re.fullmatch(r"F_(\d+)", t)
    if m:
        p = int(m.group(1))
        if not is_prime(p):
            raise RingSpecError(f"F_{p}: {p} is not prime")
        return PrimeSpec.finite((p,))
    m = re.fullmatch(r"Z\[(.*)\]", t)
    if m:
        excluded: set[int] = set()
        for piece in m.group(1).split(","):
            piece = piece.strip()
            mm = re.fullmatch(r"1/(\d+)", piece)
            if not mm:
                raise RingSpecError(f"cannot parse inverted element {piece!r}")
            k = int(mm.group(1))
            if k == 0:
                raise RingSpecError("cannot invert 0")
            excluded.update(prime_factors(k))
        return PrimeSpec.cofinite(sorted(excluded))
    if t.startswith("primes="):
        rest = t[len("primes=") :]
        if rest.startswith("mod:"):
            parts = rest[len("mod:") :].split(":")
            if len(parts) != 2:
                raise RingSpecError(f"expected primes=mod:N:a1,a2,..., got {text!r}")
            try:
                modulus = int(parts[0])
                residues = [int(x) for x in parts[1].split(",")]
            except ValueError:
                raise RingSpecError(f"bad residue class numbers in {text!r}") from None
            return PrimeSpec.listable(normalize(make(modulus, residues)))
        try:
            listed = [int(x) for x in rest.split(",")]
        except ValueError:
            raise RingSpecError(f"bad prime list in {text!r}") from None
        for p in listed:
            if not is_prime(p):
                raise RingSpecError(f"{p} in the prime list is not prime")
        return PrimeSpec.finite(listed)
    raise RingSpecError(f"cannot parse ring description {text!r}")


def parse_degrees(text: str, cat: Catalog) -> DegreeMultiset:
    """Parse '--degrees' input: comma lists and/or entry names joined by +.

    "4,6,8", "SU(5)+Sp(2)" and "4,4+C_6" are all accepted.
    """
    out = DegreeMultiset.of(())
    stripped = text.strip()
    if not stripped:
        return out
    for token in stripped.split("+"):
        token = token.strip()
        if re.fullmatch(r"[\d\s,]+", token):
            nums = [int(x) for x in token.split(",") if x.strip()]
            out = out.union(DegreeMultiset.of(nums))
        else:
            inst = cat.lookup(token)
            out = out.union(cat.degrees_of(inst))
    return out


def _emit_json(doc) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True))


def _cmd_check(args, cat: Catalog) -> int:
    target = parse_degrees(args.degrees, cat)
    spec = parse_ring(args.ring)
    report = realizable_over(cat, target, spec)
    if args.format == "json":
        _emit_json(report.to_json_dict())
        return 0
    print(f"degrees: {', '.join(map(str, target)) or '(none)'}")
    print(f"ring primes: {spec.describe()}")
    print(f"verdict: {'realizable' if report.verdict else 'not realizable'}")
    ps = as_json_dict(report.prime_set)
    print(f"occurrence classes: N={ps['modulus']}, residues={ps['residues']}")
    for p, dec in sorted(report.witnesses.items()):
        print(f"witness at p={p}: {' + '.join(dec.names) or '(empty product)'}")
    if report.failing_prime is not None:
        print(f"failing prime: {report.failing_prime}")
    if report.failing_class is not None:
        a, n = report.failing_class
        print(f"failing class: {a} mod {n}")
    return 0


def _cmd_primes(args, cat: Catalog) -> int:
    target = parse_degrees(args.degrees, cat)
    modulus, residues = congruence_classes(cat, target)
    if args.format == "json":
        _emit_json(
            {
                "degrees": list(target.degrees),
                "modulus": modulus,
                "residues": residues,
            }
        )
        return 0
    print(f"N={modulus}, residues={residues}")
    return 0


def _cmd_witness(args, cat: Catalog) -> int:
    target = parse_degrees(args.degrees, cat)
    ok, dec = realizable_at_prime(cat, target, args.prime)
    if args.format == "json":
        doc = {
            "degrees": list(target.degrees),
            "prime": args.prime,
            "realizable": ok,
        }
        if ok:
            doc["witness"] = list(dec.names)
        _emit_json(doc)
        return 0
    if ok:
        print(f"p={args.prime}: {' + '.join(dec.names) or '(empty product)'}")
    else:
        print(f"not realizable at p={args.prime}")
    return 0


def _cmd_decompose(args, cat: Catalog) -> int:
    target = parse_degrees(args.degrees, cat)
    if args.prime is not None:
        decs = decompose_at_prime(cat, target, args.prime)
    else:
        decs = decompose(cat, target)
    if args.format == "json":
        doc = {
            "degrees": list(target.degrees),
            "decompositions": [list(d.names) for d in decs],
        }
        if args.prime is not None:
            doc["prime"] = args.prime
        _emit_json(doc)
        return 0
    if not decs:
        print("no decompositions")
    for d in decs:
        print(" + ".join(d.names) or "(empty product)")
    return 0


def _cmd_catalog(args, cat: Catalog) -> int:
    if args.format == "json":
        print(export_json(cat))
        return 0
    print("families:")
    for fam in cat.families:
        cond = f"; conditions {fam.constraints}" if fam.constraints else ""
        print(
            f"  {fam.ident}: degrees {fam.degree_formula}{cond};"
            f" occurs for {fam.prime_condition}"
        )
    print("sporadics:")
    for sp in cat.sporadics:
        ps = as_json_dict(sp.primes)
        print(
            f"  {sp.name}: degrees {', '.join(map(str, sp.degrees))};"
            f" occurs for p in {ps['residues']} mod {ps['modulus']}"
        )
    return 0


def _cmd_verify(args, cat: Catalog) -> int:
    integral = check_integral_realizability(cat, args.max_degree, args.max_count)
    p3 = check_p3_realizability(cat, args.max_degree, min(args.max_count, 3))
    if args.format == "json":
        _emit_json(
            {
                "integral": {
                    "checked": integral.checked,
                    "mismatches": integral.mismatches,
                },
                "p3": {"checked": p3.checked, "mismatches": p3.mismatches},
            }
        )
        return 0
    print(integral.summary())
    print(p3.summary())
    return 0


def _molien_sweep() -> list[tuple[int, int, int]]:
    runs = []
    for m in range(1, 11):
        for r in divisors(m):
            for n in range(1, 4):
                runs.append((m, r, n))
    for m in range(11, 31):
        for r in (1, m):
            runs.append((m, r, 2))
    for m in range(3, 31):
        if (m, 1, 1) not in runs:
            runs.append((m, 1, 1))
    return runs


def _cmd_molien_verify(args, cat: Catalog) -> int:
    rows = []
    failures = 0
    for m, r, n in _molien_sweep():
        start = time.perf_counter()
        ok = verify_degrees(m, r, n, budget=args.budget)
        elapsed = time.perf_counter() - start
        degrees = doubled_degrees(m, r, n)
        rows.append((m, r, n, degrees, ok, elapsed))
        if not ok:
            failures += 1
    if args.csv:
        with open(args.csv, "w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["m", "r", "n", "degrees", "verdict", "seconds"])
            for m, r, n, degrees, ok, elapsed in rows:
                writer.writerow(
                    [m, r, n, " ".join(map(str, degrees)), ok, f"{elapsed:.4f}"]
                )
    if args.format == "json":
        _emit_json(
            {
                "runs": [
                    {
                        "m": m,
                        "r": r,
                        "n": n,
                        "degrees": list(degrees),
                        "verdict": ok,
                    }
                    for m, r, n, degrees, ok, _ in rows
                ],
                "failures": failures,
            }
        )
        return 0
    for m, r, n, degrees, ok, elapsed in rows:
        status = "ok" if ok else "MISMATCH"
        print(
            f"G({m},{r},{n}) order {group_order(m, r, n)}: degrees "
            f"{list(degrees)} {status} ({elapsed:.3f}s)"
        )
    print(f"{len(rows)} groups checked, {failures} mismatches")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polycoh",
        description=(
            "Decide whether a graded polynomial ring on even-degree "
            "generators is realizable as the cohomology of a space."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, degrees=True, fmt=True):
        if degrees:
            p.add_argument(
                "--degrees",
                required=True,
                help="comma list of even degrees and/or entry names joined "
                "by '+', e.g. '4,6' or 'SU(5)+Sp(2)'",
            )
        if fmt:
            p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("check", help="realizability verdict over a ring")
    add_common(p)
    p.add_argument(
        "--ring",
        required=True,
        help="coefficient ring: Z, Q, F_p, Z[1/a,...], primes=..., "
        "or primes=mod:N:a1,a2",
    )
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("primes", help="congruence classes of usable primes")
    add_common(p)
    p.set_defaults(func=_cmd_primes)

    p = sub.add_parser("witness", help="decomposition witness at one prime")
    add_common(p)
    p.add_argument("--prime", type=int, required=True)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("decompose", help="list all decompositions")
    add_common(p)
    p.add_argument("--prime", type=int, default=None)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("catalog", help="dump the built-in catalog")
    add_common(p, degrees=False)
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("verify", help="run the brute-force cross-check suites")
    add_common(p, degrees=False)
    p.add_argument("--max-degree", type=int, default=24)
    p.add_argument("--max-count", type=int, default=4)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser(
        "molien-verify", help="verify family degrees by exact Molien series"
    )
    add_common(p, degrees=False)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--csv", default=None, help="also write results to a CSV file")
    p.set_defaults(func=_cmd_molien_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cat = builtin()
    try:
        return args.func(args, cat)
    except PolycohError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
