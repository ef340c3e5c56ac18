"""Command-line front end.

Every subcommand prints one report (JSON by default, CSV with ``--csv``)
and exits with 0 on success, 1 on a usage error, 2 on a domain error and
3 when a verification check fails.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Any, Callable, Sequence

from . import hurwitz, identities, moduli, oracle, strata
from .errors import DomainError, ParseError, ResourceError
from .exactnum import as_text
from .partitions import Partition, enumerate_partitions, parse

SCHEMA = "hurwitz-strata-report/1"

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _plain(value: Any) -> Any:
    """Convert exact values and partitions into JSON-ready data.

    Fractions become ``"p/q"`` strings; plain ints (sizes, counters) stay
    numbers, so exact results must be wrapped in Fraction by the caller.
    """
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return as_text(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Partition):
        return value.to_json()
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


class Report:
    def __init__(self, command: str, argv: Sequence[str]):
        self.command = command
        self.argv = list(argv)
        self.inputs: dict = {}
        self.results: list[dict] = []
        self.status = "OK"
        self.warnings: list[str] = []
        self.error: str | None = None

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "command": self.command,
            "argv": self.argv,
            "inputs": _plain(self.inputs),
            "status": self.status,
            "results": _plain(self.results),
            "warnings": list(self.warnings),
            "error": self.error,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def to_csv(self) -> str:
        rows = _plain(self.results)
        buf = io.StringIO()
        if not rows:
            rows = [{"status": self.status, "error": self.error or ""}]
        fields: list[str] = []
        for row in rows:
            for k in row:
                if k not in fields:
                    fields.append(k)
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _csv_cell(v) for k, v in row.items()})
        return buf.getvalue()


def _csv_cell(v: Any) -> str:
    if isinstance(v, list):
        return " ".join(map(str, v))
    if isinstance(v, dict):
        return json.dumps(v, sort_keys=True)
    return "" if v is None else str(v)


# ---------------------------------------------------------------------------
# subcommands


def _kappa(text: str) -> Partition:
    return parse(text)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError as exc:
        raise ParseError(f"bad integer list {text!r}") from exc


def cmd_psi_integral(args, rep: Report) -> int:
    l = _int_list(args.l)
    rep.inputs = {"l": l}
    rep.results.append({"l": l, "value": Fraction(moduli.psi_integral(l))})
    return EXIT_OK


def cmd_segre_deg(args, rep: Report) -> int:
    kappa = _kappa(args.kappa)
    rep.inputs = {"kappa": kappa, "k": args.k}
    direct = moduli.segre_degree(kappa, args.k)
    closed = moduli.deg_ppsi(kappa, args.k)
    rep.results.append({"kappa": kappa, "k": args.k, "value": direct, "closed_form": closed, "agree": direct == closed})
    return EXIT_OK


def cmd_delta00(args, rep: Report) -> int:
    kappa = _kappa(args.kappa)
    rep.inputs = {"kappa": kappa, "method": args.method}
    fn = moduli.delta00_closed if args.method == "closed" else moduli.delta00_split_sum
    rep.results.append({"kappa": kappa, "method": args.method, "value": fn(kappa)})
    return EXIT_OK


def cmd_stratum_deg(args, rep: Report) -> int:
    kappa = _kappa(args.kappa)
    rep.inputs = {"type": args.type, "kappa": kappa}
    res = strata.stratum_degree(args.type, kappa)
    rep.results.append({"type": args.type, "kappa": kappa, "value": res.value, "formula": res.formula})
    if args.warn_negative:
        rep.warnings.extend(res.warnings)
    return EXIT_OK


def cmd_kl_codim2(args, rep: Report) -> int:
    rep.inputs = {"which": args.which, "n": args.n}
    rep.results.append({"which": args.which, "n": args.n, "value": strata.kl_codim2(args.which, args.n)})
    return EXIT_OK


def _range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError as exc:
        raise ParseError(f"range must look like a..b, got {text!r}") from exc


def cmd_specialize(args, rep: Report) -> int:
    lo, hi = _range(args.range)
    rep.inputs = {"range": [lo, hi]}
    rows = strata.specialization_report(lo, hi)
    rep.results.extend(rows)
    rep.status = "PASS" if all(r["pass"] for r in rows if r["expected"]) else "FAIL"
    return EXIT_OK if rep.status == "PASS" else EXIT_VERIFY


def cmd_hurwitz_closed(args, rep: Report) -> int:
    kappa = _kappa(args.kappa)
    rep.inputs = {"family": args.family, "kappa": kappa, "mode": args.mode}
    res = hurwitz.closed_hurwitz(args.family, kappa, args.mode)
    rep.results.append(
        {
            "family": args.family,
            "kappa": kappa,
            "mu": res.spec.mu,
            "r": res.spec.r,
            "mode": args.mode,
            "degree": res.degree,
            "value": res.value,
        }
    )
    rep.warnings.extend(res.warnings)
    return EXIT_OK


def cmd_oracle(args, rep: Report) -> int:
    t = oracle.parse_classes(args.classes)
    rep.inputs = {"classes": list(t.classes), "method": args.method}
    if args.method == "dfs":
        count_all = oracle.dfs_product_count(t)
    else:
        count_all = oracle.product_count(t)
    count_tr = oracle.transitive_count(t, args.method)
    h, genus = oracle.hurwitz_oracle(t, args.method)
    rep.results.append(
        {
            "n": t.n,
            "count_all": Fraction(count_all),
            "count_transitive": Fraction(count_tr),
            "h": h,
            "genus": genus,
        }
    )
    return EXIT_OK


def _compare_row(family: str, kappa: Partition, method: str = "sieve") -> dict:
    printed = hurwitz.closed_hurwitz(family, kappa, "printed")
    calibrated = hurwitz.closed_hurwitz(family, kappa, "calibrated")
    classes = hurwitz.oracle_classes(kappa, printed.spec.mu)
    h, genus = oracle.hurwitz_oracle(oracle.ClassTuple(classes), method)
    return {
        "family": family,
        "kappa": kappa,
        "mu": printed.spec.mu,
        "r": printed.spec.r,
        "degree": printed.degree,
        "printed": printed.value,
        "calibrated": calibrated.value,
        "oracle": h,
        "genus": genus,
        "status": "AGREE" if printed.value == h else "DISCREPANT",
        "calibrated_status": "AGREE" if calibrated.value == h else "DISCREPANT",
    }


def cmd_compare(args, rep: Report) -> int:
    kappa = _kappa(args.kappa)
    rep.inputs = {"family": args.family, "kappa": kappa}
    row = _compare_row(args.family, kappa)
    rep.results.append(row)
    rep.status = row["status"]
    if row["printed"] < 0:
        rep.warnings.append("negative printed value: outside plausible validity")
    return EXIT_OK


def cmd_sweep(args, rep: Report) -> int:
    family = strata.StratumKind(args.family)
    lo = 3 if family is strata.StratumKind.CAUSTIC else 4
    rep.inputs = {"family": args.family, "kappa_all_n": args.kappa_all_n, "oracle": args.oracle}
    for n in range(lo, args.kappa_all_n + 1):
        for kappa in enumerate_partitions(n):
            if args.oracle:
                row = _compare_row(args.family, kappa)
            else:
                printed = hurwitz.closed_hurwitz(args.family, kappa, "printed")
                calibrated = hurwitz.closed_hurwitz(args.family, kappa, "calibrated")
                row = {
                    "family": args.family,
                    "kappa": kappa,
                    "degree": printed.degree,
                    "printed": printed.value,
                    "calibrated": calibrated.value,
                }
            row = {"n": n, **row}
            rep.results.append(row)
            if row["degree"] < 0:
                rep.warnings.append(f"negative degree at kappa={list(kappa.parts)}")
    if args.oracle:
        bad = sum(r["status"] == "DISCREPANT" for r in rep.results)
        rep.status = "DISCREPANT" if bad else "AGREE"
    return EXIT_OK


# verification suites ---------------------------------------------------------


def _suite_kazarian(max_m: int, seed: int) -> list[dict]:
    rows = []
    for m in range(2, min(max_m, identities.MAX_M_SYMBOLIC) + 1):
        rows.append({"check": "cleared-symbolic", "m": m, "pass": identities.kazarian_cleared_check(m)})
    for m in range(2, max_m + 1):
        out = identities.kazarian_random_check(m, 200, seed)
        rows.append({"check": "random-evaluation", "m": m, "points": out.checked, "pass": out.passed, "counterexample": out.counterexample})
    return rows


def _equal_sum_partner(rng, t: list[Fraction]) -> list[Fraction]:
    while True:
        s = identities.random_point(rng, len(t) - 1)
        last = sum(t) - sum(s)
        if last != 0:
            return s + [last]


def _suite_l42(max_m: int, seed: int) -> list[dict]:
    import random

    rows = []
    for m in range(2, max_m + 1):
        rng = random.Random(f"l42:{m}:{seed}")
        pairs, shifts, failure = 0, 0, None
        for _ in range(50):
            t = identities.random_point(rng, m)
            if sum(t) == 0:
                continue
            u = _equal_sum_partner(rng, t)
            pairs += 1
            if not identities.l42_sum_dependence_check([(t, u)]):
                failure = {"pair": [t, u]}
                break
            h = identities.random_point(rng, 1)[0]
            i, j = rng.sample(range(m), 2)
            ti, tj = list(t), list(t)
            ti[i] += h
            tj[j] += h
            if 0 in ti or 0 in tj or (m < 3 and sum(t) + h == 0):
                continue
            shifts += 1
            if not identities.l42_shift_check(t, h, i, j):
                failure = {"t": t, "h": h, "i": i, "j": j}
                break
        rows.append({"check": "sum-dependence", "m": m, "pairs": pairs, "shifts": shifts, "pass": failure is None, "counterexample": failure})
    return rows


def _suite_abel_set(max_m: int, seed: int) -> list[dict]:
    import random

    rows = []
    for m in range(0, min(max_m, identities.MAX_M_ABEL_SYMBOLIC) + 1):
        rows.append({"check": "set-binomial-symbolic", "m": m, "pass": identities.abel_set_binomial_symbolic(m)})
    for m in range(0, max_m + 1):
        rng = random.Random(f"abel-set:{m}:{seed}")
        failure, done = None, 0
        while done < 20:
            t = identities.random_point(rng, m)
            x, y = identities.random_point(rng, 2)
            if x + y == 0:
                continue
            done += 1
            if not identities.abel_set_binomial_check(m, t, x, y):
                failure = {"t": t, "x": x, "y": y}
                break
        rows.append({"check": "set-binomial-evaluation", "m": m, "points": done, "pass": failure is None, "counterexample": failure})
    return rows


def _suite_abel_classical(max_m: int, seed: int) -> list[dict]:
    return [{"check": "classical-abel", "n": n, "pass": identities.abel_classical_check(n)} for n in range(1, min(max_m, identities.MAX_N_ABEL_CLASSICAL) + 1)]


def _suite_coeff(max_m: int, seed: int) -> list[dict]:
    rows = []
    for m in range(2, max_m + 1):
        lhs, rhs = identities.split_coefficient_identity(m)
        rows.append({"check": "coefficient", "m": m, "lhs": lhs, "rhs": rhs, "pass": lhs == rhs})
    return rows


def _suite_delta00(max_m: int, seed: int) -> list[dict]:
    rows = []
    for n in range(2, max_m + 1):
        for kappa in enumerate_partitions(n):
            if kappa.length < 2:
                continue
            a, b = moduli.delta00_split_sum(kappa), moduli.delta00_closed(kappa)
            rows.append({"check": "delta00", "kappa": kappa, "split": a, "closed": b, "pass": a == b})
    return rows


SUITES: dict[str, tuple[Callable[[int, int], list[dict]], int]] = {
    "kazarian": (_suite_kazarian, 10),
    "l42": (_suite_l42, 8),
    "abel-set": (_suite_abel_set, 10),
    "abel-classical": (_suite_abel_classical, 12),
    "coeff": (_suite_coeff, 30),
    "delta00": (_suite_delta00, 12),
}


def cmd_verify(args, rep: Report) -> int:
    fn, default_max = SUITES[args.suite]
    max_m = args.max_m if args.max_m is not None else default_max
    rep.inputs = {"suite": args.suite, "max_m": max_m, "seed": args.seed}
    rep.results.extend(fn(max_m, args.seed))
    ok = all(r["pass"] for r in rep.results)
    rep.status = "PASS" if ok else "FAIL"
    return EXIT_OK if ok else EXIT_VERIFY


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", help="JSON output (default)")
    fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv", help="CSV output of the result rows")
    common.add_argument("--seed", type=int, default=0, help="seed for random evaluation points")
    common.set_defaults(fmt="json")

    parser = _Parser(prog="hurwitz-strata", description="Exact evaluation and verification of genus-0 Hurwitz stratum degrees.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("psi-integral", parents=[common], help="genus-0 psi-class integral")
    p.add_argument("--l", required=True, help="comma-separated exponents, e.g. 1,1,0,0,0")
    p.set_defaults(func=cmd_psi_integral)

    p = sub.add_parser("segre-deg", parents=[common], help="direct Segre-weighted integral of psi^k")
    p.add_argument("--kappa", required=True)
    p.add_argument("--k", type=int, default=0)
    p.set_defaults(func=cmd_segre_deg)

    p = sub.add_parser("delta00", parents=[common], help="degree of the node class")
    p.add_argument("--kappa", required=True)
    p.add_argument("--method", choices=["closed", "split"], default="closed")
    p.set_defaults(func=cmd_delta00)

    p = sub.add_parser("stratum-deg", parents=[common], help="caustic or Maxwell stratum degree")
    p.add_argument("--type", choices=["caustic", "maxwell"], required=True)
    p.add_argument("--kappa", required=True)
    p.add_argument("--warn-negative", action="store_true")
    p.set_defaults(func=cmd_stratum_deg)

    p = sub.add_parser("kl-codim2", parents=[common], help="codimension-two degrees for kappa = 1^n")
    p.add_argument("--which", type=int, choices=[1, 2, 3], required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_kl_codim2)

    p = sub.add_parser("specialize", parents=[common], help="codimension-one vs codimension-two substitutions")
    p.add_argument("--range", required=True, help="a..b")
    p.set_defaults(func=cmd_specialize)

    p = sub.add_parser("hurwitz-closed", parents=[common], help="closed-form double Hurwitz number")
    p.add_argument("--family", choices=["caustic", "maxwell"], required=True)
    p.add_argument("--kappa", required=True)
    p.add_argument("--mode", choices=list(hurwitz.MODES), default="printed")
    p.set_defaults(func=cmd_hurwitz_closed)

    p = sub.add_parser("oracle", parents=[common], help="count permutation factorizations")
    p.add_argument("--classes", required=True, help='e.g. "3,1;2,1,1;2,1,1"')
    p.add_argument("--method", choices=["sieve", "dfs"], default="sieve")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("compare", parents=[common], help="closed forms against the factorization count")
    p.add_argument("--family", choices=["caustic", "maxwell"], required=True)
    p.add_argument("--kappa", required=True)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify", parents=[common], help="run an identity verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--max-m", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", parents=[common], help="closed forms for every kappa up to a size")
    p.add_argument("--family", choices=["caustic", "maxwell"], required=True)
    p.add_argument("--kappa-all-n", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="also run the factorization count")
    p.set_defaults(func=cmd_sweep)
    return parser


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Execute one command; returns the exit code and the serialized report."""
    argv = list(argv)
    command = argv[0] if argv else ""
    fmt = "csv" if "--csv" in argv else "json"
    rep = Report(command, argv)
    try:
        args = build_parser().parse_args(argv)
        rep.command = args.command
        code = args.func(args, rep)
    except (UsageError, ParseError) as exc:
        rep.status, rep.error, code = "ERROR", str(exc), EXIT_USAGE
    except (DomainError, ResourceError) as exc:
        rep.status, rep.error, code = "ERROR", str(exc), EXIT_DOMAIN
    return code, rep.to_csv() if fmt == "csv" else rep.to_json()


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if any(a in ("-h", "--help") for a in argv) or not argv:
        try:
            build_parser().parse_args(list(argv) or ["--help"])
        except SystemExit as exc:
            return int(exc.code or 0)
        except UsageError as exc:
            print(exc, file=sys.stderr)
            return EXIT_USAGE
    code, text = run(argv)
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
