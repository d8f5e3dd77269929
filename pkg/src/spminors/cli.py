"""Command line interface.

Exit codes: 0 success, 1 usage error, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from . import closed_form, cluster, factorization, minors, paths
from .laurent import LaurentPoly, canonical_string, to_json_obj
from .weyl_word import CWord, OutOfRange, locate


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


METHODS = {
    "closed": closed_form.minor_closed,
    "path": paths.minor_by_paths,
    "oracle": minors.minor_L_oracle,
    "dp": minors.minor_L_dp,
}


def _word_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--rank", type=int, required=True, help="rank r of Sp(2r)")
    p.add_argument("--cycles", type=int, required=True, help="number of cycles m")
    p.add_argument("--last", type=int, required=True, help="last letter of the final cycle")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma separated integers, got {text!r}") from None


def _word(ns) -> CWord:
    try:
        return CWord(ns.rank, ns.cycles, ns.last)
    except OutOfRange as exc:
        raise UsageError(str(exc)) from None


def _position(w: CWord, k: int) -> tuple[int, int]:
    try:
        return locate(w, k)
    except OutOfRange as exc:
        raise UsageError(str(exc)) from None


def _params(w: CWord, k: int) -> dict:
    mp, d = locate(w, k)
    return {"r": w.r, "m": w.m, "last": w.last, "k": k, "m_prime": mp, "d": d}


def cmd_minor(ns, out) -> int:
    w = _word(ns)
    mp, d = _position(w, ns.k)
    torus = None
    if ns.torus is not None:
        torus = _int_list(ns.torus)
        if len(torus) != w.r:
            raise UsageError(f"--torus needs {w.r} integers, got {len(torus)}")
    names = list(METHODS) if ns.method == "all" else [ns.method]
    values: dict[str, LaurentPoly] = {name: METHODS[name](w, ns.k) for name in names}
    strings = {name: canonical_string(v) for name, v in values.items()}
    value = values[names[0]]
    mismatch = len(set(strings.values())) > 1
    exponent = minors.torus_exponent(w.r, mp, d, torus) if torus is not None else None
    if ns.format == "json":
        obj = {"params": _params(w, ns.k), "method": ns.method,
               "canonical": strings[names[0]], "value": to_json_obj(value)}
        if torus is not None:
            obj["torus"] = torus
            obj["torus_exponent"] = exponent
        if mismatch:
            obj["mismatch"] = strings
        out.write(json.dumps(obj, sort_keys=True) + "\n")
    else:
        out.write(strings[names[0]] + "\n")
        if torus is not None:
            out.write(f"torus_exponent {exponent}\n")
    if mismatch:
        for name, s in strings.items():
            sys.stderr.write(f"{name}: {s}\n")
        return 2
    return 0


def cmd_paths(ns, out) -> int:
    w = _word(ns)
    _position(w, ns.k)
    wt, mp, d = paths.path_parameters(w, ns.k)
    space = wt.variables()
    found = paths.enumerate_paths(d, wt.m, mp, wt.r)
    if ns.dot:
        out.write(paths.to_dot(found, space))
        return 0
    for idx, p in enumerate(found, start=1):
        out.write(f"p{idx}\t{p}\t{canonical_string(paths.path_label(p, space))}\n")
    return 0


def cmd_tableaux(ns, out) -> int:
    w = _word(ns)
    _position(w, ns.k)
    table = closed_form.correspondence_table(w, ns.k)
    if table:
        out.write(table + "\n")
    return 0


def _btilde(ns) -> cluster.ExchangeMatrix:
    return cluster.build_btilde(_word(ns))


def cmd_btilde(ns, out) -> int:
    out.write(_btilde(ns).to_json() + "\n")
    return 0


def cmd_mutate(ns, out) -> int:
    B = _btilde(ns)
    seq = _int_list(ns.seq)
    try:
        B = cluster.mutate_sequence(B, seq)
    except cluster.BadDirection as exc:
        raise UsageError(str(exc)) from None
    obj = B.to_json_obj()
    obj["sequence"] = seq
    out.write(json.dumps(obj) + "\n")
    return 0


def cmd_factor_check(ns, out) -> int:
    w = _word(ns)
    if ns.trials < 1:
        raise UsageError("--trials must be positive")
    rng = random.Random(ns.seed)
    failures = 0
    for _ in range(ns.trials):
        v = factorization.random_assignment(w, rng)
        ok = (factorization.verify_factorization(w, v)
              and factorization.psi(w, factorization.phi(w, v)) == v)
        failures += not ok
    out.write(f"factor-check {w} trials={ns.trials} failures={failures}\n")
    return 2 if failures else 0


def sweep(max_rank: int):
    """Yield ``(w, k, agree)`` for every word up to ``max_rank`` and every position."""
    for r in range(1, max_rank + 1):
        for m in range(1, r + 1):
            for last in range(1, r + 1):
                w = CWord(r, m, last)
                oracle = minors.all_minors_L_oracle(w)
                for k in range(1, w.n + 1):
                    ref = oracle[k]
                    agree = (
                        ref == paths.minor_by_paths(w, k)
                        and ref == closed_form.minor_closed(w, k)
                        and ref == minors.minor_L_dp(w, k)
                        and all(c > 0 for c in ref.coefficients())
                    )
                    yield w, k, agree


def cmd_verify(ns, out) -> int:
    if ns.max_rank < 1:
        raise UsageError("--max-rank must be positive")
    total = bad = 0
    for w, k, agree in sweep(ns.max_rank):
        total += 1
        if not agree:
            bad += 1
            out.write(f"MISMATCH {w} k={k}\n")
    out.write(f"verify max_rank={ns.max_rank} cases={total} mismatches={bad}\n")
    return 2 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spminors", description="Generalized minors on Sp(2r) double Bruhat cells.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("minor", help="compute Delta^L(k; i)")
    _word_args(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=["closed", "path", "oracle", "dp", "all"], default="closed")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--torus", help="comma separated torus exponents a_1,...,a_r")
    p.set_defaults(func=cmd_minor)

    p = sub.add_parser("paths", help="list the paths of X_d(m, m')")
    _word_args(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("tableaux", help="tableau / factor / monomial table")
    _word_args(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("btilde", help="exchange matrix as JSON")
    _word_args(p)
    p.set_defaults(func=cmd_btilde)

    p = sub.add_parser("mutate", help="mutate the exchange matrix along a sequence")
    _word_args(p)
    p.add_argument("--seq", required=True, help="comma separated column labels")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("factor-check", help="check the factorization maps at random points")
    _word_args(p)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_factor_check)

    p = sub.add_parser("verify", help="cross-check all methods on every word up to a rank")
    p.add_argument("--max-rank", type=int, default=4)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    ns = build_parser().parse_args(argv)
    try:
        return ns.func(ns, out)
    except UsageError as exc:
        sys.stderr.write(f"spminors: error: {exc}\n")
        return 1

