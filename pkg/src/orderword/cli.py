"""Command-line front end: inspect single words or run verification campaigns."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .analysis import MagnusOrder, decompose
from .series import TruncationPolicy, mu, series_text
from .verify import check_word, run_campaign, weinbaum_factorizations
from .words import Word, parse_word, uniquely_positioned


@dataclass(frozen=True)
class CliConfig:
    """Options shared by every subcommand."""

    rank: int
    precedence: tuple[int, ...] | None
    cap: int | None
    workers: int = 1
    out_path: str | None = None

    def order(self) -> MagnusOrder:
        policy = TruncationPolicy(cap=self.cap) if self.cap is not None else TruncationPolicy()
        return MagnusOrder(self.rank, precedence=self.precedence, policy=policy)


def _build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--rank", type=int, default=2, help="alphabet size (default 2)")
    shared.add_argument(
        "--swap-order",
        action="store_true",
        help="reverse the variable precedence of the order",
    )
    shared.add_argument(
        "--cap", type=int, default=None, help="override the truncation degree cap"
    )

    parser = argparse.ArgumentParser(
        prog="orderword",
        description="Order free-group words by truncated series and decompose them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", parents=[shared], help="print the series image of a word")
    p.add_argument("word")
    p.add_argument("--degree", type=int, default=2, help="truncation degree (default 2)")

    p = sub.add_parser("compare", parents=[shared], help="order two words")
    p.add_argument("first")
    p.add_argument("second")

    p = sub.add_parser("decompose", parents=[shared], help="maximal ascent * descent split")
    p.add_argument("word")

    p = sub.add_parser("verify", parents=[shared], help="run every check on one word")
    p.add_argument("word")

    p = sub.add_parser("weinbaum", parents=[shared], help="uniquely positioned factorizations")
    p.add_argument("word")

    p = sub.add_parser("campaign", parents=[shared], help="check a whole length range")
    p.add_argument("--min-len", type=int, required=True)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default=None, help="write the JSON report here")
    p.add_argument(
        "--dedup",
        choices=("none", "rotation_class"),
        default="rotation_class",
        help="enumerate all words or one per rotation class (default)",
    )
    return parser


def _config(args: argparse.Namespace) -> CliConfig:
    if args.rank < 1:
        raise ValueError("rank must be positive")
    precedence = tuple(range(args.rank, 0, -1)) if args.swap_order else None
    return CliConfig(
        rank=args.rank,
        precedence=precedence,
        cap=args.cap,
        workers=getattr(args, "workers", 1),
        out_path=getattr(args, "out", None),
    )


def _show(w: Word) -> str:
    return str(w)


def cmd_series(args: argparse.Namespace) -> int:
    config = _config(args)
    word = parse_word(args.word, config.rank)
    if args.degree < 0:
        raise ValueError("degree must be nonnegative")
    print(series_text(mu(word, args.degree), config.precedence))
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    config = _config(args)
    order = config.order()
    verdict = order.compare(
        parse_word(args.first, config.rank), parse_word(args.second, config.rank)
    )
    symbol = {"greater": ">", "less": "<", "equal": "="}[verdict.value]
    print(f"{args.first} {symbol} {args.second}")
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    config = _config(args)
    word = parse_word(args.word, config.rank)
    dec = decompose(word, config.order())
    ascent_unique = "yes" if uniquely_positioned(dec.ascent, word) else "no"
    if dec.descent_unique is None:
        descent_unique = "n/a"
    else:
        descent_unique = "yes" if dec.descent_unique else "no"
    print(
        f"W' = {_show(dec.chosen)} ({dec.origin}), "
        f"A = {_show(dec.ascent)}, D = {_show(dec.descent)}, "
        f"A unique: {ascent_unique}, D unique: {descent_unique}"
    )
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    config = _config(args)
    word = parse_word(args.word, config.rank)
    report = check_word(word, config.order(), check_monotonic=config.precedence is None)
    dec = report.decomposition_summary
    print(f"word: {_show(word)}")
    if dec is not None:
        print(f"W' = {dec['chosen']} ({dec['origin']}), A = {dec['ascent']}, D = {dec['descent']}")
    print(f"A uniquely positioned: {_yesno(report.ascent_uniquely_positioned)}")
    print(f"D status: {report.descent_status}")
    print(f"monotonic: {_yesno(report.monotonic)}")
    print(f"weinbaum count: {report.weinbaum_count}")
    if report.anomalies:
        for anomaly in report.anomalies:
            print(f"anomaly: {anomaly.label}: {anomaly.detail}")
        return 3
    print("anomalies: none")
    return 0


def _yesno(value: bool | None) -> str:
    if value is None:
        return "n/a"
    return "yes" if value else "no"


def cmd_weinbaum(args: argparse.Namespace) -> int:
    config = _config(args)
    word = parse_word(args.word, config.rank)
    pairs = weinbaum_factorizations(word)
    for head, tail in pairs:
        print(f"{_show(head)} | {_show(tail)}")
    print(f"count={len(pairs)}")
    return 0 if pairs else 3


def cmd_campaign(args: argparse.Namespace) -> int:
    config = _config(args)
    report = run_campaign(
        rank=config.rank,
        min_length=args.min_len,
        max_length=args.max_len,
        precedence=config.precedence,
        workers=config.workers,
        out_path=config.out_path,
        dedup=args.dedup,
        cap=config.cap,
    )
    print(
        f"checked={report.words_checked} anomalies={report.anomaly_count} "
        f"seconds={report.duration_seconds:.2f}"
    )
    return 0 if report.anomaly_count == 0 else 3


_COMMANDS = {
    "series": cmd_series,
    "compare": cmd_compare,
    "decompose": cmd_decompose,
    "verify": cmd_verify,
    "weinbaum": cmd_weinbaum,
    "campaign": cmd_campaign,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"anomaly: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
