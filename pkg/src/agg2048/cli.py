"""Command-line interface.

Exit codes: 0 success / all checks pass, 1 verified failure (one-shot
fail, invariant violation), 2 usage or sequence error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import change, game, verify
from .errors import ResourceLimitError, SequenceError
from .sentinel import UNBOUNDED, is_unbounded
from .sequences import BUILTIN_NAMES, builtin_sequence, from_file


class Emitter:
    """One output record per line, in text, csv, or jsonl form."""

    def __init__(self, fmt: str, fields: tuple[str, ...], out=None):
        self.fmt = fmt
        self.fields = fields
        self.out = out or sys.stdout
        self._wrote_header = False

    def _render(self, v):
        if is_unbounded(v):
            return "UNBOUNDED"
        if isinstance(v, (list, tuple)):
            return "{" + ",".join(str(x) for x in v) + "}"
        return v

    def row(self, **values) -> None:
        vals = {f: self._render(values[f]) for f in self.fields if f in values}
        if self.fmt == "jsonl":
            print(json.dumps(vals, separators=(",", ":")), file=self.out)
        elif self.fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="")
            if not self._wrote_header:
                writer.writerow(list(vals))
                buf.write("\n")
                self._wrote_header = True
            writer.writerow([vals[f] for f in vals])
            print(buf.getvalue(), file=self.out)
        else:
            print(" ".join(f"{k}={v}" for k, v in vals.items()), file=self.out)


def _add_sequence_args(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--sequence", metavar="NAME", help="builtin sequence name")
    g.add_argument("--file", metavar="PATH", help="sequence file (one value per line)")


def _resolve_sequence(args):
    if args.sequence:
        return builtin_sequence(args.sequence)
    return from_file(args.file)


def _add_format_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "csv", "jsonl"), default="text")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="agg2048",
        description="Score bounds of abstract 2048-style games and greedy "
                    "change-making hard inputs, and their equality.")
    sub = ap.add_subparsers(dest="command", required=True)

    for name, with_singles in (("totals", True), ("ggg", False)):
        p = sub.add_parser(
            name,
            help="maximum-score bounds per cell count" if with_singles
            else "hard-to-change greedy inputs per coin count")
        _add_sequence_args(p)
        lim = p.add_mutually_exclusive_group(required=True)
        lim.add_argument("--terms", type=int, metavar="K",
                         help="emit K terms (or UNBOUNDED, whichever first)")
        lim.add_argument("--threshold", type=int, metavar="N",
                         help="emit every term with value <= N")
        p.add_argument("--scan-cap", type=int, default=change.DEFAULT_SCAN_CAP,
                       metavar="M", help="sequence elements scanned per term "
                       "before reporting UNBOUNDED")
        _add_format_arg(p)
        p.set_defaults(func=cmd_totals, with_singles=with_singles)

    p = sub.add_parser("greedy", help="greedy representation of an amount")
    _add_sequence_args(p)
    p.add_argument("amount", type=int)
    p.add_argument("--optimal", action="store_true",
                   help="also run the minimum-coin DP and flag suboptimality")
    p.add_argument("--cap", type=int, default=change.DEFAULT_DP_CAP,
                   help="largest amount the DP will accept")
    _add_format_arg(p)
    p.set_defaults(func=cmd_greedy)

    p = sub.add_parser("oneshot", help="totally-greedy one-shot test over prefixes")
    _add_sequence_args(p)
    p.add_argument("--prefixes", type=int, default=20)
    _add_format_arg(p)
    p.set_defaults(func=cmd_oneshot)

    p = sub.add_parser("verify", help="run a cross-check suite")
    p.add_argument("suite", choices=sorted(verify.SUITES))
    p.add_argument("--cap", type=int, default=10**5,
                   help="value cap for the minmax suite")
    p.add_argument("--cells", type=int, default=3,
                   help="cell counts for the reachability suite")
    p.add_argument("--sequence", default="pow2",
                   help="sequence for the reachability suite")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sequences", help="list builtin sequences")
    _add_format_arg(p)
    p.set_defaults(func=cmd_sequences)

    return ap


def cmd_totals(args) -> int:
    seq = _resolve_sequence(args)
    fields = ("n", "single", "total") if args.with_singles else ("n", "ggg")
    em = Emitter(args.format, fields)
    if args.with_singles:
        stream = game.bounds_stream(seq, scan_cap=args.scan_cap,
                                    threshold=args.threshold)
    else:
        raw = change.ggg_stream(seq, scan_cap=args.scan_cap,
                                threshold=args.threshold)
        stream = (game.BoundState(n, None, v) for n, v in enumerate(raw, 1))
    emitted = 0
    # pull lazily: asking for a term past the limit could mean a scan far
    # beyond what was requested
    while args.terms is None or emitted < args.terms:
        state = next(stream, None)
        if state is None:
            break
        if args.with_singles:
            em.row(n=state.n, single=state.single, total=state.total)
        else:
            em.row(n=state.n, ggg=state.total)
        emitted += 1
        if is_unbounded(state.total):
            break
    return 0


def cmd_greedy(args) -> int:
    seq = _resolve_sequence(args)
    rep = change.greedy_representation(args.amount, seq)
    record = {"amount": args.amount, "coins": list(rep.coins),
              "count": rep.count}
    fields = ["amount", "coins", "count"]
    if args.optimal:
        members = seq.members().values_up_to(max(args.amount, 1))
        optimal = change.min_coins(args.amount, members, cap=args.cap)
        record["optimal"] = optimal
        record["verdict"] = "SUBOPTIMAL" if rep.count > optimal else "OPTIMAL"
        fields += ["optimal", "verdict"]
    Emitter(args.format, tuple(fields)).row(**record)
    return 0


def cmd_oneshot(args) -> int:
    seq = _resolve_sequence(args)
    result = change.one_shot_test(seq, args.prefixes)
    em = Emitter(args.format,
                 ("prefix", "x", "y", "k", "test_value", "greedy_coins", "verdict"))
    for r in result.reports:
        em.row(prefix=r.prefix_length, x=r.x, y=r.y, k=r.k,
               test_value=r.k * r.y, greedy_coins=r.greedy_coins,
               verdict="pass" if r.passed else "FAIL")
    if result.exhausted:
        print(f"PARTIAL: sequence exhausted after {len(result.reports)} prefixes",
              file=sys.stderr)
    verdict = "TOTALLY GREEDY" if result.all_pass else "NOT TOTALLY GREEDY"
    print(f"{verdict} through {len(result.reports)} prefixes")
    return 0 if result.all_pass else 1


def cmd_verify(args) -> int:
    suite = args.suite
    if suite == "minmax":
        results = verify.verify_minmax(cap=args.cap)
    elif suite == "reachability":
        results = verify.verify_reachability(cells=args.cells,
                                             seq_name=args.sequence)
    else:
        results = verify.SUITES[suite]()
    ok = True
    for r in results:
        tag = "PASS" if r.ok else "FAIL"
        ok &= r.ok
        print(f"{tag}  {r.label}" + (f"  [{r.detail}]" if r.detail else ""))
    return 0 if ok else 1


def cmd_sequences(args) -> int:
    em = Emitter(args.format, ("name", "first_values"))
    for name in BUILTIN_NAMES:
        em.row(name=name, first_values=builtin_sequence(name).prefix(8))
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except SequenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
