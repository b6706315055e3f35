"""Command-line front end.

Subcommands: ``count`` and ``form`` run the modular pipeline, ``lucky``
reports the chosen prime, ``tridec`` prints a triangular decomposition mod a
given prime, and ``bench`` races the modular pipeline against the
integer-only oracle over a degree grid, writing a CSV and a matching PNG
chart next to it.

Exit codes: 0 success, 1 usage or parse error, 2 mathematical degeneracy
(non-coprime or non-zero-dimensional input).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import asdict
from typing import List, Optional

from .arith import PrimeField
from .errors import (NotCoprimeError, NotZeroDimensionalError, ParseError,
                     SepformError)
from .oracle import classical_separating_form
from .poly import NEG_INF, Poly, reduce_mod_prime
from .solver import count_and_lucky_prime, separating_form
from .sysfile import SystemFile, parse_system
from .triangular import triangular_decompose


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the contract here reserves 2
    # for mathematical degeneracy, so remap to 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    top = _Parser(prog="sepform",
                  description="Count solutions of bivariate systems and find "
                              "separating linear forms, exactly.")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("path", help="system file (expression or JSON format)")
        p.add_argument("--json", action="store_true", help="structured output")
        p.add_argument("--threads", type=int, default=1,
                       help="workers for the candidate-prime scan")
        p.add_argument("--verbose", action="store_true",
                       help="dump decomposition traces and bound breakdowns")

    common(sub.add_parser("count", help="number of distinct complex solutions"))
    common(sub.add_parser("form", help="separating linear form X + a*Y"))
    common(sub.add_parser("lucky", help="lucky prime used by the modular run"))

    tr = sub.add_parser("tridec", help="triangular decomposition mod a prime")
    common(tr)
    tr.add_argument("--modulus", type=int, required=True, help="prime modulus")

    be = sub.add_parser("bench",
                        help="modular vs integer-only timings over a degree grid")
    be.add_argument("--dmax", type=int, default=6, help="largest total degree")
    be.add_argument("--taumax", type=int, default=8,
                    help="coefficient bitsize for generated systems")
    be.add_argument("--out", required=True, help="CSV output path")
    be.add_argument("--seed", type=int, default=0,
                    help="corpus generation seed (results are deterministic "
                         "for a fixed corpus; timings naturally vary)")
    be.add_argument("--json", action="store_true", help="structured summary")
    be.add_argument("--threads", type=int, default=1)
    be.add_argument("--verbose", action="store_true")
    return top


def _load(path: str) -> SystemFile:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}", 0, 0)
    return parse_system(text, source_path=path)


def _emit(args, payload: dict, text_lines: List[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_count(args) -> int:
    sf = _load(args.path)
    result = count_and_lucky_prime(sf.P, sf.Q, threads=args.threads)
    payload = {"N": result.count, "mu": result.prime,
               "upper_bound": result.upper_bound,
               "early_exit": result.early_exit}
    lines = [f"N = {result.count}"]
    if args.verbose:
        payload["bound"] = asdict(result.bound)
        lines.append(f"lucky prime = {result.prime}  (examined "
                     f"{result.primes_examined}, early exit: {result.early_exit})")
        lines.append(f"unlucky-prime bound = {result.bound.total}")
    _emit(args, payload, lines)
    return 0


def _cmd_form(args) -> int:
    sf = _load(args.path)
    result = separating_form(sf.P, sf.Q, threads=args.threads)
    payload = {"a": result.a, "N": result.count, "mu": result.prime}
    lines = [f"a = {result.a}  (form X + {result.a}*Y), N = {result.count}"]
    if args.verbose:
        payload["certificate_degree"] = result.certificate_degree
        payload["bound"] = asdict(result.lucky.bound)
        lines.append(f"lucky prime = {result.prime}, certificate degree = "
                     f"{result.certificate_degree}")
    _emit(args, payload, lines)
    return 0


def _cmd_lucky(args) -> int:
    sf = _load(args.path)
    result = count_and_lucky_prime(sf.P, sf.Q, threads=args.threads)
    payload = {"mu": result.prime, "N": result.count,
               "primes_examined": result.primes_examined,
               "early_exit": result.early_exit}
    lines = [f"mu = {result.prime}"]
    if args.verbose:
        lines.append(f"N = {result.count}, primes examined = "
                     f"{result.primes_examined}, early exit: {result.early_exit}")
    _emit(args, payload, lines)
    return 0


def _cmd_tridec(args) -> int:
    sf = _load(args.path)
    field = PrimeField(args.modulus)
    P = reduce_mod_prime(sf.P, field)
    Q = reduce_mod_prime(sf.Q, field)
    if P.is_zero() or Q.is_zero():
        raise SepformError("an input vanishes modulo the given prime")
    dy = lambda f: f.degree("Y")
    if (dy(Q) if dy(Q) is not NEG_INF else -1) > (dy(P) if dy(P) is not NEG_INF else -1):
        P, Q = Q, P
    pairs = triangular_decompose(P, Q)
    payload = {"modulus": args.modulus,
               "components": [{"i": t.index, "A": str(t.A), "B": str(t.B)}
                              for t in pairs]}
    lines = [f"i = {t.index}:  A = {t.A},  B = {t.B}" for t in pairs] or \
            ["(no components: no solutions with the required fiber structure)"]
    _emit(args, payload, lines)
    return 0


def _random_dense_system(rng: random.Random, d: int, tau: int):
    lo, hi = -(2 ** tau - 1), 2 ** tau - 1
    def draw():
        terms = {}
        for ex in range(d + 1):
            for ey in range(d + 1 - ex):
                c = rng.randint(lo, hi)
                if c or ex + ey == d:
                    terms[(ex, ey)] = c if c else 1
        return Poly.from_terms(terms.items(), ("X", "Y"))
    return draw(), draw()


def _cmd_bench(args) -> int:
    from .solver import check_coprime
    rng = random.Random(args.seed)
    rows = []
    for d in range(2, args.dmax + 1):
        while True:
            P, Q = _random_dense_system(rng, d, args.taumax)
            try:
                check_coprime(P, Q)
                break
            except NotCoprimeError:
                continue
        t0 = time.perf_counter()
        result = separating_form(P, Q, threads=args.threads)
        t_mod = (time.perf_counter() - t0) * 1000.0
        t0 = time.perf_counter()
        a_cl, n_cl = classical_separating_form(P, Q)
        t_cl = (time.perf_counter() - t0) * 1000.0
        if (a_cl, n_cl) != (result.a, result.count):
            raise SepformError(
                f"oracle disagreement at d={d}: modular ({result.a}, "
                f"{result.count}) vs integer-only ({a_cl}, {n_cl})")
        rows.append((d, args.taumax, result.count, result.a, t_mod, t_cl))

    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write("d,tau,N,a,time_modular_ms,time_classical_ms\n")
        for d, tau, n, a, tm, tc in rows:
            fh.write(f"{d},{tau},{n},{a},{tm:.3f},{tc:.3f}\n")
    png = _render_bench_figure(rows, args.out)

    payload = {"csv": args.out, "figure": png, "rows": len(rows)}
    lines = [f"wrote {args.out} and {png} ({len(rows)} rows)"]
    if args.verbose:
        for d, tau, n, a, tm, tc in rows:
            lines.append(f"d={d} N={n} a={a} modular={tm:.1f}ms "
                         f"classical={tc:.1f}ms")
    _emit(args, payload, lines)
    return 0


def _render_bench_figure(rows, csv_path: str) -> str:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    png = csv_path.rsplit(".", 1)[0] + ".png"
    ds = [r[0] for r in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ds, [r[4] for r in rows], "o-", label="modular pipeline")
    ax.plot(ds, [r[5] for r in rows], "s--", label="integer-only oracle")
    ax.set_xlabel("total degree d")
    ax.set_ylabel("wall time (ms)")
    ax.set_yscale("log")
    ax.legend()
    ax.set_title("separating-form computation time")
    fig.tight_layout()
    fig.savefig(png, dpi=120)
    plt.close(fig)
    return png


_COMMANDS = {"count": _cmd_count, "form": _cmd_form, "lucky": _cmd_lucky,
             "tridec": _cmd_tridec, "bench": _cmd_bench}

_ERROR_CODES = [
    (ParseError, 1, "parse-error"),
    (NotCoprimeError, 2, "not-coprime"),
    (NotZeroDimensionalError, 2, "not-zero-dimensional"),
    (SepformError, 2, "degenerate"),
]


def main(argv: Optional[List[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except SepformError as exc:
        for cls, code, tag in _ERROR_CODES:
            if isinstance(exc, cls):
                if getattr(args, "json", False):
                    print(json.dumps({"error": {"code": tag, "message": str(exc)}},
                                     sort_keys=True))
                else:
                    print(f"error ({tag}): {exc}", file=sys.stderr)
                return code
        raise


if __name__ == "__main__":
    sys.exit(main())
