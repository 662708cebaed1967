"""Command-line interface: heckechar {table,reduce,murphy-trace,solve,verify}."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from .cache import ENV_VAR, ComboCache, default_cache_dir
from .errors import HeckeError, NotPolynomial, SingularPivot
from .hecke import DEFAULT_CAP, HARD_CAP, Word
from .murphy import MurphyProduct, murphy_product_trace
from .reduce import reduce_trace
from .solver import CHECKS, character_table, solve_all, verify_table
from .young import YoungDiagram

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_COMPUTE = 2
EXIT_USAGE = 3

log = logging.getLogger("heckechar")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


@dataclass
class RunConfig:
    command: str
    n: int | None
    fmt: str = "json"
    cache_dir: Path | None = None
    checks: tuple[str, ...] = CHECKS
    cap: int = DEFAULT_CAP

    def validate(self):
        if self.cap > HARD_CAP:
            raise UsageError(f"--cap cannot exceed {HARD_CAP}")
        if self.n is not None:
            if self.n < 2:
                raise UsageError("--n must be at least 2")
            if self.n > self.cap:
                raise UsageError(f"--n {self.n} exceeds the cap {self.cap} (raise it with --cap, at most {HARD_CAP})")
        if self.cap > DEFAULT_CAP:
            log.warning("cap raised to %d; expect much longer running times", self.cap)

    def cache(self) -> ComboCache | None:
        return ComboCache(self.cache_dir) if self.cache_dir else None


def _parse_checks(s: str) -> tuple[str, ...]:
    items = tuple(x.strip() for x in s.split(",") if x.strip())
    bad = [x for x in items if x not in CHECKS]
    if bad or not items:
        raise argparse.ArgumentTypeError(f"checks must be a comma list from {','.join(CHECKS)}")
    return items


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="heckechar", description="Character tables of Iwahori-Hecke algebras H_n(q) via Murphy operators.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, need_n=True):
        sp.add_argument("--n", type=int, required=need_n, help="rank of the symmetric group")
        sp.add_argument("--cap", type=int, default=DEFAULT_CAP, help=f"largest allowed n (default {DEFAULT_CAP}, at most {HARD_CAP})")
        sp.add_argument("--cache-dir", type=Path, default=None, help=f"combination cache directory (env {ENV_VAR})")

    t = sub.add_parser("table", help="print the character table")
    common(t)
    t.add_argument("--format", choices=["json", "csv", "latex"], default="json")
    t.add_argument("--output", type=Path, default=None, help="write to a file instead of stdout")
    t.add_argument("--no-verify", action="store_true", help="skip the embedded verification")

    r = sub.add_parser("reduce", help="reduce the trace of a word")
    common(r)
    r.add_argument("--word", required=True, help="comma-separated generator indices, e.g. 1,2,1")

    m = sub.add_parser("murphy-trace", help="trace of a Murphy product in one irrep")
    common(m, need_n=False)
    m.add_argument("--diagram", required=True, help="partition rows, e.g. 3,1")
    m.add_argument("--indices", default="", help="Murphy indices, e.g. 2,4")

    s = sub.add_parser("solve", help="dump the Murphy combinations of every cycle type")
    common(s)

    v = sub.add_parser("verify", help="check a character table")
    common(v)
    v.add_argument("--checks", type=_parse_checks, default=CHECKS, help=f"comma list from {','.join(CHECKS)}")
    return p


def _emit(text: str, output: Path | None = None):
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_table(cfg: RunConfig, args) -> int:
    table = character_table(cfg.n, cfg.cache())
    text = {"json": lambda: _dump(table.to_json()), "csv": table.to_csv, "latex": table.to_latex}[cfg.fmt]()
    _emit(text, args.output)
    if args.no_verify:
        return EXIT_OK
    report = verify_table(table)
    for r in report.results:
        print(r.line(), file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_reduce(cfg: RunConfig, args) -> int:
    word = Word.parse(args.word, cfg.n)
    _emit(_dump(reduce_trace(word).to_json()))
    return EXIT_OK


def cmd_murphy_trace(cfg: RunConfig, args) -> int:
    g = YoungDiagram.parse(args.diagram)
    if cfg.n is not None and g.size != cfg.n:
        raise UsageError(f"diagram ({g.to_str()}) has {g.size} boxes, not {cfg.n}")
    idx = [int(x) for x in args.indices.split(",") if x.strip()]
    _emit(str(murphy_product_trace(g, MurphyProduct(idx))) + "\n")
    return EXIT_OK


def cmd_solve(cfg: RunConfig, args) -> int:
    combos = solve_all(cfg.n, cfg.cache())
    _emit(_dump({c.key(): combo.to_strings() for c, combo in combos.items()}))
    return EXIT_OK


def cmd_verify(cfg: RunConfig, args) -> int:
    report = verify_table(character_table(cfg.n, cfg.cache()), cfg.checks)
    for r in report.results:
        print(r.line())
        for ce in r.counterexamples[:10]:
            print("  " + ce)
    return EXIT_OK if report.passed else EXIT_VERIFY


COMMANDS = {
    "table": cmd_table,
    "reduce": cmd_reduce,
    "murphy-trace": cmd_murphy_trace,
    "solve": cmd_solve,
    "verify": cmd_verify,
}


def _error_record(exc: Exception) -> str:
    return json.dumps({"error": type(exc).__name__, "message": str(exc)})


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    cfg = RunConfig(
        command=args.command,
        n=args.n,
        fmt=getattr(args, "format", "json"),
        cache_dir=args.cache_dir or default_cache_dir(),
        checks=getattr(args, "checks", CHECKS),
        cap=args.cap,
    )
    try:
        cfg.validate()
        return COMMANDS[args.command](cfg, args)
    except (SingularPivot, NotPolynomial) as exc:
        print(_error_record(exc), file=sys.stderr)
        return EXIT_COMPUTE
    except (UsageError, HeckeError, ValueError) as exc:
        print(_error_record(exc), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
