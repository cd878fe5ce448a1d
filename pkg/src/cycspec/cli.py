"""Command line interface: ccc (count cyclic codes).

Subcommands:

  spectrum  dimension spectrum of minimal cyclic codes of length n
  count     number of codes of one dimension, with optional closed-form audit
  hoc       homogeneous-order-condition report for a pair (n, q)
  codes     generator / parity-check polynomials for every minimal code
  verify    sweep closed forms against the oracles, reporting discrepancies

Exit codes: 0 success (including verify runs whose discrepancies are all
previously known), 1 usage error, 2 mathematically invalid input or budget
refusal, 3 novel discrepancy found by verify. The CCC_BUDGET environment
variable overrides the enumeration and construction budgets.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from . import arith, orders, polyfq, spectrum as sp
from .errors import BudgetError, InputError
from .polyfq import FqPoly, field


@dataclass(frozen=True)
class DiscrepancyRecord:
    """One formula-vs-oracle mismatch found by the verify sweep.

    k is None for total-count methods. formula_num/formula_den carry the
    closed-form value as an exact fraction; note is free-form context.
    Records match the known ledger on the key (n, q, k, method).
    """

    n: int
    q: int
    k: int | None
    method: str
    formula_num: int
    formula_den: int
    oracle: int
    note: str

    def key(self) -> tuple:
        return (self.n, self.q, self.k, self.method)

    def to_obj(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "k": self.k,
            "method": self.method,
            "formula_num": self.formula_num,
            "formula_den": self.formula_den,
            "oracle": self.oracle,
            "note": self.note,
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "DiscrepancyRecord":
        return cls(
            n=obj["n"],
            q=obj["q"],
            k=obj.get("k"),
            method=obj["method"],
            formula_num=obj["formula_num"],
            formula_den=obj["formula_den"],
            oracle=obj["oracle"],
            note=obj.get("note", ""),
        )


@lru_cache(maxsize=1)
def known_discrepancies() -> frozenset[tuple]:
    """Match keys (n, q, k, method) of the ledger shipped with the package."""
    text = (
        resources.files("cycspec")
        .joinpath("data/known_discrepancies.jsonl")
        .read_text(encoding="utf-8")
    )
    keys = set()
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        rec = DiscrepancyRecord.from_obj(json.loads(line))
        keys.add(rec.key())
    return frozenset(keys)


def coeffs_to_obj(f: FqPoly) -> list:
    """JSON form of a coefficient vector: ints for prime fields, digit
    lists for extension fields; ascending degree."""
    F = f.field
    if F.e == 1:
        return [int(c) for c in f.coeffs]
    return [list(F.digits(c)) for c in f.coeffs]


def coeffs_from_obj(F, data) -> FqPoly:
    if F.e == 1:
        return polyfq.poly(F, data)
    return polyfq.poly(F, [F.from_digits(d) for d in data])


def _coeff_tokens(f: FqPoly) -> str:
    F = f.field
    if F.e == 1:
        return " ".join(str(c) for c in f.coeffs)
    return " ".join(":".join(str(d) for d in F.digits(c)) for c in f.coeffs)


def spectrum_to_obj(s: sp.Spectrum) -> dict:
    return {
        "n": s.n,
        "q": s.q,
        "method": s.method,
        "spectrum": [{"k": k, "count": c} for k, c in s.entries.items()],
        "total": s.total,
    }


def spectrum_from_obj(obj: dict) -> sp.Spectrum:
    entries = {row["k"]: row["count"] for row in obj["spectrum"]}
    return sp.Spectrum(obj["n"], obj["q"], entries, obj["method"])


def _print_spectrum_table(s: sp.Spectrum) -> None:
    print(f"n = {s.n}  q = {s.q}  method = {s.method}")
    kw = max(len("k"), *(len(str(k)) for k in s.entries))
    cw = max(len("count"), *(len(str(c)) for c in s.entries.values()))
    print(f"{'k':>{kw}}  {'count':>{cw}}")
    for k, c in s.entries.items():
        print(f"{k:>{kw}}  {c:>{cw}}")
    print(f"total {s.total}")


def _print_spectrum_csv(s: sp.Spectrum) -> None:
    print("n,q,k,count,method")
    for k, c in s.entries.items():
        print(f"{s.n},{s.q},{k},{c},{s.method}")


def _budget(args, default: int) -> int:
    env = os.environ.get("CCC_BUDGET")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"CCC_BUDGET must be an integer, got {env!r}")
    return default


def cmd_spectrum(args) -> int:
    n, q = args.n, args.q
    if args.method == "auto":
        s = sp.auto_spectrum(n, q)
    elif args.method == "divisor":
        s = sp.divisor_spectrum(n, q)
    elif args.method == "coset":
        s, _ = sp.coset_spectrum(n, q, budget=_budget(args, sp.DEFAULT_COSET_BUDGET))
    elif args.method == "prime-power":
        pe = arith.is_prime_power(n) if n >= 2 else None
        if pe is None:
            raise InputError(f"n = {n} is not a prime power")
        s = sp.prime_power_spectrum(pe[0], pe[1], q)
    elif args.method == "radical":
        s = sp.radical_spectrum(n, q)
    else:  # hoc
        s = sp.hoc_spectrum(orders.hoc_status(n, q))
    if args.format == "json":
        print(json.dumps(spectrum_to_obj(s), separators=(",", ":")))
    elif args.format == "csv":
        _print_spectrum_csv(s)
    else:
        _print_spectrum_table(s)
    return 0


def cmd_count(args) -> int:
    n, q, k = args.n, args.q, args.k
    ds = sp.divisor_spectrum(n, q)
    print(ds.entries.get(k, 0))
    if not args.explain:
        return 0
    if n < 2:
        print("homogeneous order condition: not applicable (n < 2)")
        return 0
    status = orders.hoc_status(n, q)
    if not status.holds:
        print("homogeneous order condition: does not hold")
        for v in status.violations:
            print(f"  {v}")
        return 0
    if n % 2 == 0 and q % 4 == 3:
        print(
            "homogeneous order condition: not applicable "
            "(n even with q = 3 mod 4)"
        )
        return 0
    print(f"homogeneous order condition: holds (rho = {status.rho}, R = {status.R})")
    hc = sp.hoc_count_k(k, status)
    print(f"closed-form value: {hc.formula}")
    if hc.feasible:
        print("necessary conditions: pass")
    else:
        print(f"necessary conditions: fail (condition {hc.failed_condition})")
    if hc.discrepant:
        print(f"status: FLAGGED (formula {hc.formula} != oracle {hc.oracle})")
    else:
        print("status: ok")
    return 0


def cmd_hoc(args) -> int:
    status = orders.hoc_status(args.n, args.q)
    usable = status.holds and not (status.n % 2 == 0 and status.q % 4 == 3)
    total = sp.hoc_total(status) if usable else None
    if args.format == "json":
        obj = {
            "n": status.n,
            "q": status.q,
            "holds": status.holds,
            "rho": status.rho,
            "R": status.R,
            "profiles": [
                {"p": pr.p, "alpha": pr.alpha, "rho": pr.rho, "beta": pr.beta}
                for pr in status.profiles
            ],
            "violations": list(status.violations),
            "total": total,
        }
        print(json.dumps(obj, separators=(",", ":")))
        return 0
    print(f"n = {status.n}  q = {status.q}")
    if status.holds:
        print(f"homogeneous order condition: holds (rho = {status.rho}, R = {status.R})")
    else:
        print("homogeneous order condition: does not hold")
        for v in status.violations:
            print(f"  {v}")
    print("prime profiles:")
    for pr in status.profiles:
        print(f"  p = {pr.p}  alpha = {pr.alpha}  rho = {pr.rho}  beta = {pr.beta}")
    if total is not None:
        print(f"total codes (closed form) = {total}")
    return 0


def cmd_codes(args) -> int:
    budget = _budget(args, polyfq.DEFAULT_CONSTRUCT_BUDGET)
    codes = polyfq.minimal_codes(args.n, args.q, seed=args.seed, budget=budget)
    if args.k is not None:
        codes = [c for c in codes if c.dimension == args.k]
    if args.format == "json":
        obj = {
            "n": args.n,
            "q": args.q,
            "codes": [
                {
                    "coset_rep": c.coset.representative,
                    "dimension": c.dimension,
                    "generator": coeffs_to_obj(c.generator),
                    "parity_check": coeffs_to_obj(c.parity_check),
                }
                for c in codes
            ],
        }
        print(json.dumps(obj, separators=(",", ":")))
    elif args.format == "csv":
        print("n,q,coset_rep,dimension,parity_check,generator")
        for c in codes:
            print(
                f"{args.n},{args.q},{c.coset.representative},{c.dimension},"
                f"{_coeff_tokens(c.parity_check)},{_coeff_tokens(c.generator)}"
            )
    else:
        print(f"n = {args.n}  q = {args.q}  codes = {len(codes)}")
        print("rep  k  parity_check / generator (ascending coefficients)")
        for c in codes:
            print(
                f"{c.coset.representative:>3}  {c.dimension}  "
                f"[{_coeff_tokens(c.parity_check)}] / [{_coeff_tokens(c.generator)}]"
            )
    return 0


def _spectrum_mismatch_note(a: sp.Spectrum, b: sp.Spectrum) -> str:
    ks = sorted(set(a.entries) | set(b.entries))
    diffs = [
        f"k={k}: {a.entries.get(k, 0)} vs {b.entries.get(k, 0)}"
        for k in ks
        if a.entries.get(k, 0) != b.entries.get(k, 0)
    ]
    return "spectrum mismatch: " + "; ".join(diffs)


def run_verify(
    n_max: int, q_list: list[int], coset_budget: int = sp.DEFAULT_COSET_BUDGET
) -> tuple[list[DiscrepancyRecord], int]:
    """Sweep all coprime pairs (n, q) with n <= n_max and q in q_list,
    cross-checking every applicable closed form against the divisor and
    coset oracles. Returns (sorted records, number of pairs checked)."""
    records: list[DiscrepancyRecord] = []
    checked = 0
    for q in q_list:
        if q < 2 or arith.is_prime_power(q) is None:
            raise InputError(f"q must be a prime power, got {q}")
    for q in q_list:
        for n in range(1, n_max + 1):
            if arith.gcd(n, q) != 1:
                continue
            checked += 1
            ds = sp.divisor_spectrum(n, q)
            assert sum(k * c for k, c in ds.entries.items()) == n
            assert ds.entries[1] == arith.gcd(n, q - 1)
            cs, _ = sp.coset_spectrum(n, q, budget=coset_budget)
            if cs.entries != ds.entries:
                records.append(
                    DiscrepancyRecord(
                        n, q, None, "coset", cs.total, 1, ds.total,
                        _spectrum_mismatch_note(cs, ds),
                    )
                )
            fac = arith.factorize(n)
            if len(fac.factors) == 1:
                ps = sp.prime_power_spectrum(fac.factors[0][0], fac.factors[0][1], q)
                if ps.entries != ds.entries:
                    records.append(
                        DiscrepancyRecord(
                            n, q, None, "prime-power", ps.total, 1, ds.total,
                            _spectrum_mismatch_note(ps, ds),
                        )
                    )
            if n >= 2 and all((q - 1) % p == 0 for p in fac.primes):
                rs = sp.radical_spectrum(n, q)
                if rs.entries != ds.entries:
                    records.append(
                        DiscrepancyRecord(
                            n, q, None, "radical", rs.total, 1, ds.total,
                            _spectrum_mismatch_note(rs, ds),
                        )
                    )
            params = sp.sase_parameters(n, q) if n >= 2 else None
            if params is not None:
                t = sp.total_sase(params[0], params[1], params[2], q)
                if t != ds.total:
                    records.append(
                        DiscrepancyRecord(
                            n, q, None, "sase", t, 1, ds.total, "total mismatch"
                        )
                    )
            if n >= 2:
                try:
                    t = sp.total_kuar(fac, q)
                except InputError:
                    t = None
                if t is not None and t != ds.total:
                    records.append(
                        DiscrepancyRecord(
                            n, q, None, "kuar", t, 1, ds.total, "total mismatch"
                        )
                    )
            if n >= 2:
                status = orders.hoc_status(n, q)
                if status.holds and not (n % 2 == 0 and q % 4 == 3):
                    t = sp.hoc_total(status)
                    if t != ds.total:
                        records.append(
                            DiscrepancyRecord(
                                n, q, None, "hoc-total", t, 1, ds.total,
                                "total mismatch",
                            )
                        )
                    hs = sp.hoc_spectrum(status)
                    if hs.entries != ds.entries:
                        records.append(
                            DiscrepancyRecord(
                                n, q, None, "hoc-spectrum", hs.total, 1, ds.total,
                                _spectrum_mismatch_note(hs, ds),
                            )
                        )
                    for k in ds.entries:
                        hc = sp.hoc_count_k(k, status)
                        if hc.discrepant:
                            if hc.feasible:
                                note = "formula misses realized count"
                            else:
                                note = (
                                    f"necessary condition {hc.failed_condition} "
                                    f"rejects a realized dimension"
                                )
                            records.append(
                                DiscrepancyRecord(
                                    n, q, k, "hoc-count-k",
                                    hc.formula.numerator, hc.formula.denominator,
                                    hc.oracle, note,
                                )
                            )
    records.sort(key=lambda r: (r.n, r.q, r.k if r.k is not None else -1, r.method))
    return records, checked


def cmd_verify(args) -> int:
    q_list = []
    for part in args.q_list.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            q_list.append(int(part))
        except ValueError:
            raise InputError(f"bad q value {part!r} in --q-list")
    if not q_list:
        raise InputError("--q-list must name at least one field order")
    records, checked = run_verify(
        args.n_max, q_list, coset_budget=_budget(args, sp.DEFAULT_COSET_BUDGET)
    )
    lines = [json.dumps(r.to_obj(), separators=(",", ":")) for r in records]
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            for line in lines:
                fh.write(line + "\n")
    else:
        for line in lines:
            print(line)
    known = known_discrepancies()
    novel = [r for r in records if r.key() not in known]
    print(
        f"checked {checked} pairs; {len(records)} discrepancies "
        f"({len(records) - len(novel)} known, {len(novel)} novel)",
        file=sys.stderr,
    )
    return 3 if novel else 0


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage failures exit 1 instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="ccc",
        description="Count and construct minimal cyclic codes of length n over F_q.",
    )
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("spectrum", parents=[], help="dimension spectrum of (n, q)")
    p.add_argument("--n", type=_positive, required=True, help="code length")
    p.add_argument("--q", type=_positive, required=True, help="field order")
    p.add_argument(
        "--method",
        choices=["auto", "divisor", "coset", "prime-power", "radical", "hoc"],
        default="auto",
    )
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("count", help="number of codes of dimension k")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--q", type=_positive, required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument(
        "--explain",
        action="store_true",
        help="audit the homogeneous-order closed form at this dimension",
    )
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("hoc", help="homogeneous order condition report")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--q", type=_positive, required=True)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_hoc)

    p = sub.add_parser("codes", help="generator and parity-check polynomials")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--q", type=_positive, required=True)
    p.add_argument("--k", type=_positive, default=None, help="only dimension k")
    p.add_argument("--seed", type=int, default=0, help="search seed (output-neutral)")
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.set_defaults(func=cmd_codes)

    p = sub.add_parser("verify", help="sweep formulas against the oracles")
    p.add_argument("--n-max", type=_positive, required=True)
    p.add_argument("--q-list", required=True, help="comma-separated field orders")
    p.add_argument("--report", default=None, help="write JSON lines here")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 1
    if not hasattr(args, "func"):
        parser.print_usage(sys.stderr)
        return 1
    try:
        return args.func(args)
    except (InputError, BudgetError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
