"""Command line front end: JSON on standard streams, deterministic output.

Exit codes: 0 on success, 1 when a verification sweep finds a failing
datum, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import Pool
from typing import Sequence, TextIO

from .apartment import coordinate_class
from .correspondence import (
    embedding_type_from_local,
    local_type_direct,
    local_type_geometric,
    report_to_json,
    verify_correspondence,
)
from .cyclic import canonical, complement, flatten, pairs_of
from .embedding import datum_from_json, datum_to_json, make_datum
from .enumeration import count_data, enumerate_data


@dataclass(frozen=True, slots=True)
class VerifyRange:
    """Bounds of an exhaustive certification sweep."""

    f_max: int
    r_max: int
    m_max: int
    fr_max: int
    jobs: int = 1

    def __post_init__(self) -> None:
        if min(self.f_max, self.r_max, self.m_max, self.fr_max, self.jobs) < 1:
            raise ValueError("all bounds must be positive")

    def configurations(self):
        for f in range(1, self.f_max + 1):
            for r in range(1, self.r_max + 1):
                if f * r > self.fr_max:
                    continue
                for m in range(1, self.m_max + 1):
                    yield f, r, m


def _verify_one(datum):
    report = verify_correspondence(datum)
    return report.verdict, report.mismatch, datum.rows


def run_verify(rng: VerifyRange, report_path: str | None = None, stream: TextIO | None = None) -> int:
    """Certify every datum in the range; returns the exit code.

    One line per configuration plus a total, in enumeration order, so
    two runs over the same range print identical summaries whatever the
    worker count.  The first failing datum, if any, is printed as a
    full JSON report; with report_path the summary and all failures are
    written to a JSON file as well.
    """
    out = stream or sys.stdout
    configs = []
    failures = []
    total = 0
    pool = Pool(rng.jobs) if rng.jobs > 1 else None
    try:
        for f, r, m in rng.configurations():
            data = enumerate_data(f, r, m)
            results = pool.imap(_verify_one, data, chunksize=512) if pool else map(_verify_one, data)
            count = 0
            failed = 0
            for verdict, mismatch, rows in results:
                count += 1
                if not verdict:
                    failed += 1
                    failures.append(
                        {"f": f, "r": r, "m": m, "rows": [list(x) for x in rows], "mismatch": mismatch}
                    )
            total += count
            configs.append({"f": f, "r": r, "m": m, "data": count, "fail": failed})
            print(f"f={f} r={r} m={m} data={count} fail={failed}", file=out)
    finally:
        if pool:
            pool.close()
            pool.join()
    print(f"total data={total} fail={len(failures)}", file=out)
    if failures:
        first = failures[0]
        datum = make_datum(first["rows"], first["f"], first["r"], first["m"])
        print(json.dumps(report_to_json(verify_correspondence(datum)), sort_keys=True), file=out)
    if report_path is not None:
        payload = {
            "range": {"f_max": rng.f_max, "r_max": rng.r_max, "m_max": rng.m_max, "fr_max": rng.fr_max},
            "configurations": configs,
            "total": total,
            "failures": failures,
            "verdict": "pass" if not failures else "fail",
        }
        with open(report_path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return 1 if failures else 0


def _int_vector(text: str) -> list[int]:
    data = json.loads(text)
    if not isinstance(data, list) or not all(isinstance(v, int) for v in data):
        raise ValueError("expected a JSON array of integers")
    return data


def _rational(v) -> Fraction:
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, list) and len(v) == 2 and all(isinstance(x, int) for x in v):
        return Fraction(v[0], v[1])
    raise ValueError("rationals are integers or [numerator, denominator] pairs")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="embtypes",
        description="exact computations with embedding types, chains, and local types",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("canon", help="canonical rotation of a cyclic vector")
    p.add_argument("vector", help="JSON array of non-negative integers")

    p = sub.add_parser("pairs", help="pairs form (value, gap) of a cyclic vector")
    p.add_argument("vector", help="JSON array of non-negative integers")

    p = sub.add_parser("complement", help="complement class of a cyclic vector")
    p.add_argument("vector", help="JSON array of non-negative integers")

    p = sub.add_parser("flatten", help="row-major flattening of a matrix")
    p.add_argument("matrix", help="JSON array of integer arrays")

    p = sub.add_parser("local-type", help="local type of a datum, both pipelines")
    p.add_argument("--datum", required=True, help='JSON {"f", "r", "m", "rows"}')

    p = sub.add_parser("embedding-type", help="embedding datum of a local type class")
    p.add_argument("--mu", required=True, help="JSON array of rationals ([num, den] pairs or integers)")
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    p = sub.add_parser("verify", help="certify every datum in a range")
    p.add_argument("--f-max", type=int, required=True)
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--fr-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", help="write a JSON summary to this path")

    p = sub.add_parser("enumerate", help="list the data of M(f, r; m)")
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--count-only", action="store_true")

    return parser


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "canon":
        print(json.dumps(list(canonical(_int_vector(args.vector)).vector)))
    elif args.command == "pairs":
        print(json.dumps([list(ab) for ab in pairs_of(_int_vector(args.vector)).pairs]))
    elif args.command == "complement":
        print(json.dumps(list(complement(_int_vector(args.vector)).vector)))
    elif args.command == "flatten":
        print(json.dumps(list(flatten(json.loads(args.matrix)))))
    elif args.command == "local-type":
        datum = datum_from_json(json.loads(args.datum))
        mu = local_type_direct(datum)
        direct = coordinate_class(mu)
        geo = local_type_geometric(datum)
        print(
            json.dumps(
                {
                    "mu": [[v.numerator, v.denominator] for v in mu],
                    "direct": {"class": list(direct.entries), "denominator": direct.denominator},
                    "geometric": {"class": list(geo.entries), "denominator": geo.denominator},
                    "agree": direct == geo,
                },
                sort_keys=True,
            )
        )
    elif args.command == "embedding-type":
        values = [_rational(v) for v in json.loads(args.mu)]
        datum = embedding_type_from_local(coordinate_class(values), args.f, args.r)
        print(json.dumps(datum_to_json(datum), sort_keys=True))
    elif args.command == "verify":
        rng = VerifyRange(args.f_max, args.r_max, args.m_max, args.fr_max, args.jobs)
        return run_verify(rng, args.report)
    elif args.command == "enumerate":
        if args.count_only:
            print(count_data(args.f, args.r, args.m))
        else:
            for d in enumerate_data(args.f, args.r, args.m):
                print(json.dumps(datum_to_json(d), sort_keys=True))
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except (ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
