"""Command-line front end: single queries, gap listing, batch processing,
and the exhaustive formula-vs-oracle verification harness.

Exit codes: 0 success, 1 invalid input, 2 internal consistency failure
(a formula/oracle mismatch, which indicates a bug, never expected).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from dataclasses import dataclass, field
from math import gcd
from multiprocessing import Pool

from .errors import ConsistencyError, NsgError
from .frobenius import FrobeniusResult, frobenius_altfrob, frobenius_general
from .relations import MinimalRelations, c_fast, c_min_relation, minimal_relations
from .semigroup import frobenius_oracle, gaps, make_triple, min_relation_oracle

DEFAULT_ORACLE_CAP = 10**6


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; here 2 is reserved for
    # consistency failures, so remap usage problems to exit 1 via _UsageError.
    def error(self, message):
        raise _UsageError(message)


def _oracle_cap() -> int:
    raw = os.environ.get("NSG_ORACLE_CAP")
    if raw is None:
        return DEFAULT_ORACLE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise _UsageError(f"NSG_ORACLE_CAP must be an integer, got {raw!r}")
    if cap < 1:
        raise _UsageError(f"NSG_ORACLE_CAP must be positive, got {cap}")
    return cap


def _parse_gens(tokens: list[str], lo: int, hi: int) -> list[int]:
    if not lo <= len(tokens) <= hi:
        raise _UsageError(f"expected {lo} to {hi} generators, got {len(tokens)}")
    out = []
    for tok in tokens:
        try:
            out.append(int(tok))
        except ValueError:
            raise _UsageError(f"generator {tok!r} is not an integer")
    return sorted(out, reverse=True)


def _guard_oracle_cap(gens: list[int]) -> None:
    cap = _oracle_cap()
    if min(gens) > cap:
        raise _UsageError(
            f"smallest generator {min(gens)} exceeds the oracle cap {cap} "
            f"(residue-table entries); set NSG_ORACLE_CAP to override"
        )


def _record(gens: list[int], result: FrobeniusResult, micros: int) -> dict:
    return {
        "gens": list(gens),
        "frobenius": result.value,
        "relations": list(result.relations.as_tuple()) if result.relations else None,
        "method": result.method.value,
        "trace": [
            {"d": s.d, "pair": list(s.pair), "n3": s.untouched}
            for s in result.reduction_trace
        ],
        "micros": micros,
    }


def _oracle_relations(gens: list[int]):
    # relations are defined for pairwise coprime minimal triples only
    if len(gens) != 3:
        return None
    try:
        t = make_triple(*gens)
    except NsgError:
        return None
    if not (t.is_pairwise_coprime and t.is_minimal):
        return None
    ws = [min_relation_oracle(t, i) for i in (1, 2, 3)]
    return (ws[0].c, ws[1].c, ws[2].c)


# ----------------------------------------------------------------------
# frob
# ----------------------------------------------------------------------

def cmd_frob(args) -> int:
    gens = _parse_gens(args.gens, 2, 3)
    method = {"formula": "iterfrob", "oracle": "oracle", "both": "both"}[args.method]
    if method in ("oracle", "both"):
        _guard_oracle_cap(gens)
    t0 = time.perf_counter_ns()
    result = frobenius_general(gens, method=method)
    micros = (time.perf_counter_ns() - t0) // 1000
    if result.relations is None and args.relations and method == "oracle":
        rels = _oracle_relations(gens)
        if rels is not None:
            result = FrobeniusResult(
                result.value, result.method, MinimalRelations(*rels), result.reduction_trace
            )
    if args.json:
        print(json.dumps(_record(gens, result, micros)))
        return 0
    print(f"F({', '.join(map(str, gens))}) = {result.value}")
    if args.relations:
        if result.relations is not None:
            print(f"c = {result.relations.as_tuple()}")
        else:
            print("c = n/a (defined for pairwise coprime minimal triples only)")
    if args.trace:
        for s in result.reduction_trace:
            print(f"reduce: d={s.d} pair={s.pair} keep={s.untouched}")
    return 0


# ----------------------------------------------------------------------
# relations
# ----------------------------------------------------------------------

def cmd_relations(args) -> int:
    gens = _parse_gens(args.gens, 3, 3)
    t = make_triple(*gens)
    witnesses = None
    if args.method == "formula":
        rels = minimal_relations(t).as_tuple()
    else:
        witnesses = [min_relation_oracle(t, i) for i in (1, 2, 3)]
        rels = tuple(w.c for w in witnesses)
        if args.method == "both":
            formula = minimal_relations(t).as_tuple()
            if formula != rels:
                raise ConsistencyError(
                    f"formula relations {formula} != oracle relations {rels} for {t.gens}"
                )
    if args.json:
        rec = {
            "gens": list(t.gens),
            "relations": list(rels),
            "witnesses": [[w.lam_j, w.lam_k] for w in witnesses] if witnesses else None,
            "method": args.method,
        }
        print(json.dumps(rec))
        return 0
    print(f"c = {rels}")
    if witnesses:
        order = ((1, 2, 3), (2, 1, 3), (3, 1, 2))
        for i, (w, (gi, gj, gk)) in enumerate(zip(witnesses, order), start=1):
            print(
                f"c{i}={w.c}: {w.c}*{t.gen(gi)} = "
                f"{w.lam_j}*{t.gen(gj)} + {w.lam_k}*{t.gen(gk)}"
            )
    return 0


# ----------------------------------------------------------------------
# gaps
# ----------------------------------------------------------------------

def cmd_gaps(args) -> int:
    gens = _parse_gens(args.gens, 1, 3)
    _guard_oracle_cap(gens)
    gs = gaps(gens)
    if args.json:
        print(json.dumps(gs))
    else:
        for g in gs:
            print(g)
    return 0


# ----------------------------------------------------------------------
# batch
# ----------------------------------------------------------------------

_CSV_HEADER = "n1,n2,n3,frobenius,c1,c2,c3,method"


def _batch_line(line: str) -> list[int]:
    tokens = line.replace(",", " ").split()
    return _parse_gens(tokens, 2, 3)


def cmd_batch(args) -> int:
    stream = sys.stdin if args.infile == "-" else open(args.infile, "r", encoding="utf-8")
    errors = 0
    header_done = False
    try:
        for lineno, raw in enumerate(stream, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                gens = _batch_line(line)
                t0 = time.perf_counter_ns()
                result = frobenius_general(gens, method="iterfrob")
                micros = (time.perf_counter_ns() - t0) // 1000
            except (NsgError, _UsageError, ValueError) as exc:
                errors += 1
                if isinstance(exc, NsgError):
                    msg = f"{type(exc).__name__}: {exc}"
                else:
                    msg = str(exc)
                if args.format == "jsonl":
                    print(json.dumps({"line": lineno, "error": msg}))
                elif args.format == "text":
                    print(f"line {lineno}: error: {msg}")
                else:  # csv rows cannot carry error records; keep stdout clean
                    print(f"line {lineno}: {msg}", file=sys.stderr)
                continue
            if args.format == "jsonl":
                print(json.dumps(_record(gens, result, micros)))
            elif args.format == "csv":
                if not header_done:
                    print(_CSV_HEADER)
                    header_done = True
                cols = [str(g) for g in gens] + [""] * (3 - len(gens))
                cols.append(str(result.value))
                rel = result.relations.as_tuple() if result.relations else ("", "", "")
                cols.extend(str(c) for c in rel)
                cols.append(result.method.value)
                print(",".join(cols))
            else:
                rel = result.relations
                c_part = ",".join(map(str, rel.as_tuple())) if rel else "-"
                trace_part = ";".join(
                    f"d={s.d}:pair={s.pair[0]},{s.pair[1]}:keep={s.untouched}"
                    for s in result.reduction_trace
                )
                print(
                    f"gens={','.join(map(str, gens))} F={result.value} "
                    f"c={c_part} method={result.method.value} "
                    f"trace=[{trace_part}] micros={micros}"
                )
    finally:
        if stream is not sys.stdin:
            stream.close()
    return 1 if errors else 0


# ----------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------

@dataclass
class VerifySummary:
    """Aggregate outcome of a verification sweep."""

    max_n: int
    triples: int = 0
    coprime_minimal: int = 0
    non_minimal: int = 0
    not_pairwise_coprime: int = 0
    frobenius_checks: int = 0
    relation_checks: int = 0
    corollary_applicable: int = 0
    lambda_checks: int = 0
    sampled: int = 0
    mismatches: list = field(default_factory=list)

    def merge(self, other: "VerifySummary") -> None:
        self.triples += other.triples
        self.coprime_minimal += other.coprime_minimal
        self.non_minimal += other.non_minimal
        self.not_pairwise_coprime += other.not_pairwise_coprime
        self.frobenius_checks += other.frobenius_checks
        self.relation_checks += other.relation_checks
        self.corollary_applicable += other.corollary_applicable
        self.lambda_checks += other.lambda_checks
        self.sampled += other.sampled
        self.mismatches.extend(other.mismatches)


def _check_triple(summary: VerifySummary, n1: int, n2: int, n3: int, relations: bool) -> None:
    gens = [n1, n2, n3]
    t = make_triple(n1, n2, n3)
    summary.triples += 1
    if not t.is_pairwise_coprime:
        summary.not_pairwise_coprime += 1
    elif not t.is_minimal:
        summary.non_minimal += 1
    else:
        summary.coprime_minimal += 1

    formula = frobenius_general(gens, method="iterfrob")
    reference = frobenius_oracle(gens)
    summary.frobenius_checks += 1
    if formula.value != reference:
        summary.mismatches.append(
            {"kind": "frobenius", "gens": gens, "formula": formula.value, "oracle": reference}
        )
        return

    if not (relations and t.is_pairwise_coprime and t.is_minimal):
        return

    alt = frobenius_altfrob(t)
    if alt.value != formula.value:
        summary.mismatches.append(
            {"kind": "iter_vs_alt", "gens": gens, "iterfrob": formula.value, "altfrob": alt.value}
        )
    for k in (1, 2, 3):
        oracle_c = min_relation_oracle(t, k).c
        i_opts = [x for x in (1, 2, 3) if x != k]
        for i, j in (i_opts, i_opts[::-1]):
            res = c_min_relation(t, i, j, k)  # constructor checks lambda invariants
            summary.relation_checks += 1
            summary.lambda_checks += 1
            if res.c != oracle_c:
                summary.mismatches.append(
                    {"kind": "relation", "gens": gens, "split": [i, j, k],
                     "formula": res.c, "oracle": oracle_c}
                )
            if res.argmin_alpha > res.bound_I:
                summary.mismatches.append(
                    {"kind": "argmin", "gens": gens, "split": [i, j, k],
                     "argmin": res.argmin_alpha, "bound": res.bound_I}
                )
            fast = c_fast(t, i, j, k)
            if fast is not None:
                summary.corollary_applicable += 1
                if fast != oracle_c:
                    summary.mismatches.append(
                        {"kind": "corollary", "gens": gens, "split": [i, j, k],
                         "fast": fast, "oracle": oracle_c}
                    )


def _verify_task(task: tuple) -> VerifySummary:
    """Worker: one n1 slice of the enumeration, or one explicit triple."""
    kind, payload, relations = task
    summary = VerifySummary(max_n=0)
    if kind == "slice":
        n1 = payload
        for n2 in range(3, n1):
            g12 = gcd(n1, n2)
            for n3 in range(2, n2):
                if g12 > 1 and gcd(g12, n3) > 1:
                    continue
                _check_triple(summary, n1, n2, n3, relations)
    else:
        n1, n2, n3 = payload
        _check_triple(summary, n1, n2, n3, relations)
        summary.sampled += 1
    return summary


def _sample_triples(count: int, seed: int, lo: int, hi: int) -> list[tuple[int, int, int]]:
    # deterministic rejection sampling of descending gcd-1 triples with n1 > lo
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n1 = rng.randrange(max(lo + 1, 4), hi + 1)
        n2 = rng.randrange(3, n1)
        n3 = rng.randrange(2, n2)
        if gcd(gcd(n1, n2), n3) == 1:
            out.append((n1, n2, n3))
    return out


def run_verification(
    max_n: int,
    *,
    jobs: int = 1,
    relations: bool = True,
    sample: int = 0,
    seed: int = 0,
    sample_max: int = 10_000,
) -> VerifySummary:
    """Check every descending gcd-1 triple with n1 <= max_n, formula against
    oracle, optionally plus all relation-level checks; then `sample` random
    triples with n1 in (max_n, sample_max]."""
    tasks: list[tuple] = [("slice", n1, relations) for n1 in range(4, max_n + 1)]
    if sample:
        if sample_max <= max_n:
            raise _UsageError(f"--sample-max must exceed --max, got {sample_max} <= {max_n}")
        tasks.extend(("one", trip, relations) for trip in _sample_triples(sample, seed, max_n, sample_max))
    total = VerifySummary(max_n=max_n)
    if jobs <= 1:
        for task in tasks:
            total.merge(_verify_task(task))
    else:
        with Pool(processes=jobs) as pool:
            for part in pool.imap_unordered(_verify_task, tasks):
                total.merge(part)
    total.mismatches.sort(key=lambda m: (m["gens"], m["kind"], json.dumps(m, sort_keys=True)))
    return total


def _summary_json(s: VerifySummary, sample: int, seed: int) -> dict:
    frac = s.corollary_applicable / s.relation_checks if s.relation_checks else 0.0
    return {
        "max": s.max_n,
        "triples": s.triples,
        "categories": {
            "pairwise_coprime_minimal": s.coprime_minimal,
            "non_minimal": s.non_minimal,
            "not_pairwise_coprime": s.not_pairwise_coprime,
        },
        "frobenius_checks": s.frobenius_checks,
        "relation_checks": s.relation_checks,
        "corollary_applicable": s.corollary_applicable,
        "corollary_fraction": round(frac, 6),
        "lambda_checks": s.lambda_checks,
        "sampled": s.sampled,
        "sample": sample,
        "seed": seed,
        "mismatches": s.mismatches,
    }


def cmd_verify(args) -> int:
    if args.max < 2:
        raise _UsageError(f"--max must be at least 2, got {args.max}")
    if args.sample < 0:
        raise _UsageError("--sample must be nonnegative")
    jobs = args.jobs if args.jobs else (os.cpu_count() or 1)
    t0 = time.perf_counter()
    summary = run_verification(
        args.max,
        jobs=jobs,
        relations=not args.frobenius_only,
        sample=args.sample,
        seed=args.seed,
        sample_max=args.sample_max,
    )
    elapsed = time.perf_counter() - t0
    print(f"elapsed: {elapsed:.1f}s ({jobs} jobs)", file=sys.stderr)

    if args.json:
        print(json.dumps(_summary_json(summary, args.sample, args.seed)))
    else:
        s = summary
        frac = s.corollary_applicable / s.relation_checks if s.relation_checks else 0.0
        print(f"triples with n1 <= {s.max_n}: {s.triples}")
        print(f"  pairwise coprime minimal: {s.coprime_minimal}")
        print(f"  non-minimal:              {s.non_minimal}")
        print(f"  not pairwise coprime:     {s.not_pairwise_coprime}")
        print(f"frobenius formula vs oracle: {s.frobenius_checks} checks")
        print(f"relation scan vs oracle:     {s.relation_checks} checks (incl. iterfrob vs altfrob)")
        print(f"lambda invariant checks:     {s.lambda_checks}")
        print(f"corollary fast path:         {s.corollary_applicable}/{s.relation_checks} "
              f"({100 * frac:.1f}%) applicable, all agreeing")
        if s.sampled:
            print(f"sampled triples above bound: {s.sampled} (seed {args.seed})")
        print(f"mismatches: {len(s.mismatches)}")
    if summary.mismatches:
        for m in summary.mismatches[:10]:
            print(f"counterexample: {json.dumps(m, sort_keys=True)}", file=sys.stderr)
        return 2
    return 0


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="nsg",
        description="Frobenius numbers and minimal relations of numerical "
        "semigroups with up to three generators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("frob", help="Frobenius number of 2 or 3 generators")
    p.add_argument("gens", nargs="+", help="generator values")
    p.add_argument("--method", choices=("formula", "oracle", "both"), default="formula",
                   help="formula (default), brute-force oracle, or both with cross-check")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--relations", action="store_true", help="include c1, c2, c3")
    p.add_argument("--trace", action="store_true", help="show gcd reduction steps")
    p.set_defaults(func=cmd_frob)

    p = sub.add_parser("relations", help="minimal relations c1, c2, c3 of a triple")
    p.add_argument("gens", nargs="+", help="three generator values")
    p.add_argument("--method", choices=("formula", "oracle", "both"), default="formula")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("gaps", help="list all non-representable integers")
    p.add_argument("gens", nargs="+", help="generator values")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gaps)

    p = sub.add_parser("verify", help="exhaustive formula-vs-oracle verification")
    p.add_argument("--max", type=int, default=150, help="largest n1 to enumerate (default 150)")
    p.add_argument("--sample", type=int, default=0, help="random triples above --max")
    p.add_argument("--seed", type=int, default=0, help="seed for --sample")
    p.add_argument("--sample-max", type=int, default=10_000, help="largest sampled n1")
    p.add_argument("--jobs", type=int, default=0, help="worker processes (0 = all cores)")
    p.add_argument("--frobenius-only", action="store_true",
                   help="skip relation-level checks (faster)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", help="process one generator set per input line")
    p.add_argument("infile", nargs="?", default="-", help="input file (default stdin)")
    p.add_argument("--format", choices=("text", "jsonl", "csv"), default="text")
    p.set_defaults(func=cmd_batch)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"nsg: error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"nsg: error: {exc}", file=sys.stderr)
        return 1
    except ConsistencyError as exc:
        print(f"nsg: consistency failure: {exc}", file=sys.stderr)
        return 2
    except NsgError as exc:
        print(f"nsg: error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"nsg: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
