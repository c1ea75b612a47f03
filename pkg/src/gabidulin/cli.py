#!/usr/bin/env python
"""
Command-line interface for the gabidulin package.

Exit codes: 0 success, 1 failed check or failed decoding, 2 usage or input errors.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from .cache import AdmissibilityCache, get_default_cache
from .codes import GabidulinCode
from .constants import DEFAULT_BOX, DEFAULT_SEED
from .errors import (
    GabidulinError,
    InadmissibleAutomorphism,
    InvalidCodeParameters,
    InvalidRank,
    InvalidSpec,
    LengthMismatch,
    ParseError,
    TowerMismatch,
)
from .formats import build_field, read_spec, read_word, serialize_word, spec_digest
from .models import AdmissibilityReport, ReproCheck
from .progress import ProgressTracker
from .rank import Word, k_rank, random_rank_error, weights
from .registry import repro_registry
from .repro import run_repro
from .sampling import make_rng

logger = logging.getLogger(__name__)

console = Console(highlight=False)
err_console = Console(stderr=True, highlight=False)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

USAGE_ERRORS = (
    ParseError,
    InvalidSpec,
    InvalidCodeParameters,
    InadmissibleAutomorphism,
    LengthMismatch,
    InvalidRank,
    TowerMismatch,
    OSError,
)


class UsageError(Exception):
    """Arguments that parse but cannot be honoured."""


def setup_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


def yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def load_field(spec_arg: str):
    spec = read_spec(spec_arg)
    tower, theta = build_field(spec)
    return spec, tower, theta


def field_check(spec_arg: str, use_cache: bool = True, cache_dir: Optional[Path] = None) -> int:
    """Print the admissibility report; exit 0 iff θ is admissible."""
    spec = read_spec(spec_arg)
    digest = spec_digest(spec)
    cache: Optional[AdmissibilityCache] = get_default_cache(cache_dir) if use_cache else None
    report: Optional[AdmissibilityReport] = cache.get(digest) if cache else None
    if report is None:
        _, theta = build_field(spec)
        report = theta.is_admissible()
        if cache:
            cache.put(digest, report)
    console.out(str(report))
    return EXIT_OK if report.admissible else EXIT_FAILURE


def code_roundtrip(
    spec_arg: str,
    n: Optional[int],
    k: int,
    t: Optional[int],
    seed: int = DEFAULT_SEED,
    trials: int = 1,
    box: int = DEFAULT_BOX,
    show_progress: bool = True,
) -> int:
    """Encode random messages, inject rank-t errors and decode them again."""
    _, tower, theta = load_field(spec_arg)
    n = theta.degree if n is None else n
    if not 1 <= k <= n:
        raise UsageError(f"--k must satisfy 1 <= k <= n = {n}")
    radius = (n - k) // 2
    t = radius if t is None else t
    if not 0 <= t <= radius:
        raise UsageError(f"--t {t} exceeds the decoding radius floor((n - k) / 2) = {radius}")
    if trials < 1:
        raise UsageError("--trials must be at least 1")

    rng = make_rng(seed)
    support = GabidulinCode.random_support(theta, n, rng, box)
    code = GabidulinCode(theta, support, k)

    with ProgressTracker(trials, "Decoding", show_progress=show_progress) as tracker:
        for trial in range(trials):
            message = code.random_message(rng, box)
            error = random_rank_error(theta.field, n, t, rng, box)
            outcome = code.decode(code.encode(message) + error)
            ok = outcome.ok and outcome.message == message and outcome.error == error
            if not ok:
                logger.warning(f"trial {trial}: decoding returned {outcome.status.value}")
            tracker.record(ok)

    console.out(f"code: N = {n}, k = {k}, t = {t} (radius {code.radius}), seed {seed}")
    console.out(f"trials: {trials}, recovered {tracker.recovered}/{trials}")
    console.out(f"recovered: {yes_no(tracker.all_recovered)}")
    return EXIT_OK if tracker.all_recovered else EXIT_FAILURE


def word_weights(spec_arg: str, word_path: str) -> int:
    _, tower, theta = load_field(spec_arg)
    word = read_word(word_path, tower.top)
    report = weights(theta, word)
    console.out(str(report))
    unified = report.unified if theta.fixed_field_dimension() == 1 else None
    if unified is None:
        console.out("unified metric: no (pick w1 or w2 explicitly)")
    else:
        console.out(f"unified metric: yes (rank {unified})")
    return EXIT_OK


def render_checks(name: str, checks: List[ReproCheck]) -> Table:
    table = Table(title=name)
    table.add_column("quantity")
    table.add_column("expected")
    table.add_column("observed")
    table.add_column("ok")
    for check in checks:
        table.add_row(check.quantity, str(check.expected), str(check.observed), yes_no(check.ok))
    return table


def repro(example_id: str) -> int:
    names = repro_registry.names() if example_id == "all" else [example_id]
    unknown = [name for name in names if name not in repro_registry]
    if unknown:
        raise UsageError(
            f"unknown example {unknown[0]!r}; choose from {', '.join(repro_registry.names())} or all"
        )
    failed = []
    for name in names:
        checks = run_repro(name)
        console.print(render_checks(name, checks))
        failed.extend(f"{name}: {c.quantity}" for c in checks if not c.ok)
    if failed:
        for item in failed:
            err_console.print(f"mismatch in {item}", markup=False)
        return EXIT_FAILURE
    console.out(f"all {len(names)} example(s) match")
    return EXIT_OK


def _support(theta, tower, g_path: Optional[str], n: Optional[int]) -> Word:
    if g_path:
        return read_word(g_path, tower.top)
    return GabidulinCode.default_support(theta, theta.degree if n is None else n)


def encode(spec_arg: str, msg_path: str, g_path: Optional[str] = None, n: Optional[int] = None) -> int:
    _, tower, theta = load_field(spec_arg)
    message = read_word(msg_path, tower.top)
    code = GabidulinCode(theta, _support(theta, tower, g_path, n), len(message))
    console.out(serialize_word(code.encode(message.entries)), end="")
    return EXIT_OK


def corrupt(spec_arg: str, word_path: str, t: int, seed: int = DEFAULT_SEED, box: int = DEFAULT_BOX) -> int:
    _, tower, _ = load_field(spec_arg)
    word = read_word(word_path, tower.top)
    error = random_rank_error(tower.top, len(word), t, seed, box)
    console.out(serialize_word(word + error), end="")
    return EXIT_OK


def decode(spec_arg: str, word_path: str, k: int, g_path: Optional[str] = None) -> int:
    _, tower, theta = load_field(spec_arg)
    word = read_word(word_path, tower.top)
    code = GabidulinCode(theta, _support(theta, tower, g_path, len(word)), k)
    outcome = code.decode(word)
    if not outcome.ok:
        err_console.print(f"decoding failed: {outcome.status.value}", markup=False)
        return EXIT_FAILURE
    err_console.print(
        f"decoded with an error of rank {k_rank(tower.top, outcome.error.entries)}", markup=False
    )
    console.out(serialize_word(Word(tower.top, outcome.message)), end="")
    return EXIT_OK


def format_size(size_bytes: float) -> str:
    for unit in ("B", "KB", "MB"):
        if size_bytes < 1024:
            return f"{size_bytes:.2f} {unit}"
        size_bytes /= 1024
    return f"{size_bytes:.2f} GB"


def cache_info(cache_dir: Optional[Path] = None) -> int:
    cache = get_default_cache(cache_dir)
    stats = cache.get_stats()
    table = Table(title="Admissibility cache")
    table.add_column("property")
    table.add_column("value")
    table.add_row("directory", str(cache.cache_dir))
    table.add_row("entries", f"{stats.get('entries', 0):,}")
    table.add_row("size", format_size(stats.get("size_bytes", 0)))
    if "hits" in stats:
        table.add_row("hits", f"{stats['hits']:,}")
        table.add_row("misses", f"{stats['misses']:,}")
        table.add_row("hit rate", f"{stats['hit_rate']:.1f}%")
    console.print(table)
    return EXIT_OK


def cache_clear(cache_dir: Optional[Path] = None) -> int:
    removed = get_default_cache(cache_dir).clear()
    console.out(f"Cache cleared. Removed {removed:,} entries.")
    return EXIT_OK


def setup_field_parser(subparsers):
    parser = subparsers.add_parser("field", help="Inspect a tower and its automorphism")
    actions = parser.add_subparsers(dest="action", required=True)
    check = actions.add_parser("check", help="Report whether θ is admissible")
    check.add_argument("spec", help="Spec file or preset:NAME")
    check.add_argument("--no-cache", action="store_true", help="Bypass the report cache")
    check.add_argument("--cache-dir", type=Path, default=None, help="Cache directory")
    return parser


def setup_code_parser(subparsers):
    parser = subparsers.add_parser("code", help="Gabidulin code experiments")
    actions = parser.add_subparsers(dest="action", required=True)
    roundtrip = actions.add_parser("roundtrip", help="Encode, corrupt and decode random messages")
    roundtrip.add_argument("spec", help="Spec file or preset:NAME")
    roundtrip.add_argument("--n", type=int, help="Code length N (default m)")
    roundtrip.add_argument("--k", type=int, required=True, help="Code dimension")
    roundtrip.add_argument("--t", type=int, help="Error rank (default the decoding radius)")
    roundtrip.add_argument("--seed", type=int, default=DEFAULT_SEED)
    roundtrip.add_argument("--trials", type=int, default=1)
    roundtrip.add_argument("--box", type=int, default=DEFAULT_BOX, help="Random coefficient bound")
    roundtrip.add_argument("--no-progress", action="store_true", help="Disable progress bar")
    return parser


def setup_word_parser(subparsers):
    parser = subparsers.add_parser("word", help="Rank-metric quantities of a word")
    actions = parser.add_subparsers(dest="action", required=True)
    weights_parser = actions.add_parser("weights", help="Print w0 w1 w2 w3")
    weights_parser.add_argument("spec", help="Spec file or preset:NAME")
    weights_parser.add_argument("word", help="Word file")
    return parser


def setup_repro_parser(subparsers):
    parser = subparsers.add_parser("repro", help="Re-compute a worked example")
    parser.add_argument("example", help=f"One of {', '.join(repro_registry.names())} or all")
    return parser


def setup_encode_parser(subparsers):
    parser = subparsers.add_parser("encode", help="Encode a message word")
    parser.add_argument("spec", help="Spec file or preset:NAME")
    parser.add_argument("message", help="Word file with k entries")
    parser.add_argument("--g", dest="support", help="Support word file")
    parser.add_argument("--n", type=int, help="Length of the default power-basis support")
    return parser


def setup_corrupt_parser(subparsers):
    parser = subparsers.add_parser("corrupt", help="Add a random error of rank t")
    parser.add_argument("spec", help="Spec file or preset:NAME")
    parser.add_argument("word", help="Word file")
    parser.add_argument("--t", type=int, required=True, help="Error rank")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--box", type=int, default=DEFAULT_BOX, help="Random coefficient bound")
    return parser


def setup_decode_parser(subparsers):
    parser = subparsers.add_parser("decode", help="Decode a received word")
    parser.add_argument("spec", help="Spec file or preset:NAME")
    parser.add_argument("word", help="Received word file")
    parser.add_argument("--g", dest="support", help="Support word file (default power basis)")
    parser.add_argument("--k", type=int, required=True, help="Code dimension")
    return parser


def setup_cache_parser(subparsers):
    parser = subparsers.add_parser("cache", help="Manage the admissibility cache")
    actions = parser.add_subparsers(dest="action", required=True)
    for name, help_text in (("info", "Show cache information"), ("clear", "Clear the cache")):
        action = actions.add_parser(name, help=help_text)
        action.add_argument("--cache-dir", type=Path, default=None, help="Cache directory")
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gab",
        description="Gabidulin codes over number-field towers",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    subparsers = parser.add_subparsers(dest="command", help="Command to run")
    setup_field_parser(subparsers)
    setup_code_parser(subparsers)
    setup_word_parser(subparsers)
    setup_repro_parser(subparsers)
    setup_encode_parser(subparsers)
    setup_corrupt_parser(subparsers)
    setup_decode_parser(subparsers)
    setup_cache_parser(subparsers)
    return parser


def dispatch(args) -> int:
    if args.command == "field":
        return field_check(args.spec, use_cache=not args.no_cache, cache_dir=args.cache_dir)
    elif args.command == "code":
        return code_roundtrip(
            args.spec,
            n=args.n,
            k=args.k,
            t=args.t,
            seed=args.seed,
            trials=args.trials,
            box=args.box,
            show_progress=not args.no_progress,
        )
    elif args.command == "word":
        return word_weights(args.spec, args.word)
    elif args.command == "repro":
        return repro(args.example)
    elif args.command == "encode":
        return encode(args.spec, args.message, args.support, args.n)
    elif args.command == "corrupt":
        return corrupt(args.spec, args.word, args.t, args.seed, args.box)
    elif args.command == "decode":
        return decode(args.spec, args.word, args.k, args.support)
    elif args.command == "cache":
        if args.action == "info":
            return cache_info(args.cache_dir)
        return cache_clear(args.cache_dir)
    raise UsageError("no command given")


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the CLI."""
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose)

    if args.command is None:
        parser.print_help()
        return EXIT_USAGE
    try:
        return dispatch(args)
    except UsageError as e:
        err_console.print(f"error: {e}", markup=False)
        return EXIT_USAGE
    except USAGE_ERRORS as e:
        err_console.print(f"error: {e}", markup=False)
        return EXIT_USAGE
    except (GabidulinError, AssertionError) as e:
        err_console.print(f"failed: {e}", markup=False)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main() or 0)
