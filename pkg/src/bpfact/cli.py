"""``bpfact`` command line.

Exit codes: 0 ok, 1 verification mismatch or non-convergence, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

from bpfact import enumeration as en
from bpfact import factorization as fz
from bpfact.oracle import VERIFIERS, BudgetExceeded, OracleConfig

MAX_DISTINCT_CHARS = 255
SEPARATORS = {"ascii": ".", "mid-dot": "·"}


class UsageError(Exception):
    pass


@dataclass
class TextCodec:
    """Maps text characters to symbol ids and back."""

    mode: str = "chars"
    mapping: list = field(default_factory=list)

    @classmethod
    def fit(cls, text: str, mode: str = "chars") -> "TextCodec":
        if not text:
            raise UsageError("empty word")
        if mode == "digits":
            bad = [c for c in text if c not in "0123456789"]
            if bad:
                raise UsageError(f"invalid digit {bad[0]!r} in {text!r}")
            return cls("digits", list("0123456789"))
        if mode != "chars":
            raise UsageError(f"unknown codec {mode!r}")
        mapping = list(dict.fromkeys(text))
        if len(mapping) > MAX_DISTINCT_CHARS:
            raise UsageError(f"more than {MAX_DISTINCT_CHARS} distinct characters")
        return cls("chars", mapping)

    def encode(self, text: str) -> tuple[int, ...]:
        index = {c: i for i, c in enumerate(self.mapping)}
        try:
            return tuple(index[c] for c in text)
        except KeyError as e:
            raise UsageError(f"character {e.args[0]!r} not in codec") from None

    def decode(self, symbols) -> str:
        return "".join(self.mapping[s] for s in symbols)


def parse_word(text: str, codec="chars") -> tuple[int, ...]:
    """Digits map literally; chars get ids in order of first occurrence."""
    if isinstance(codec, str):
        codec = TextCodec.fit(text, codec)
    return codec.encode(text)


# -- factorize ---------------------------------------------------------------


def _factorizations(word, mode):
    if mode == "largest":
        return [fz.largest_bpf(word)]
    if mode == "smallest":
        return [fz.smallest_bpf(word)]
    return fz.all_bpfs(word)


def cmd_factorize(args, out) -> int:
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            texts = [line.rstrip("\r\n") for line in fh]
        texts = [t for t in texts if t]
    elif args.word is not None:
        texts = [args.word]
    else:
        raise UsageError("give a WORD or --input FILE")
    sep = SEPARATORS[args.separator]
    for text in texts:
        codec = TextCodec.fit(text, args.codec)
        word = codec.encode(text)
        for f in _factorizations(word, args.mode):
            blocks = [codec.decode(b) for b in f.blocks()]
            if args.format == "json":
                rec = {"word": text, "kind": args.mode, "codec": args.codec, "blocks": blocks, "width": f.width}
                print(json.dumps(rec, ensure_ascii=False), file=out)
            else:
                print(f"{sep.join(blocks)}  width={f.width}", file=out)
    return 0


# -- table ----------------------------------------------------------------------


def _span(text: str, name: str) -> range:
    try:
        a, _, b = text.partition(":")
        lo, hi = int(a), int(b or a)
    except ValueError:
        raise UsageError(f"--{name} expects A:B, got {text!r}") from None
    if lo < 0 or hi < lo:
        raise UsageError(f"--{name} range {text!r} is empty or negative")
    return range(lo, hi + 1)


def build_table(kind: str, k: int, rows: range, cols) -> tuple[list[str], list[list[int]]]:
    if k < 2:
        raise UsageError("--k must be at least 2")
    if kind == "unbordered":
        return ["n", "u"], [[n, en.unbordered_count(k, n)] for n in rows]
    if kind == "ib":
        cols = cols or range(1, rows[-1] + 1)
        table = en.ib_table(k, rows, cols)
    else:
        cols = cols or range(1, max(1, rows[-1] // 2) + 1)
        table = en.unique_border_table(k, rows, cols)
    header = ["n"] + [f"t={t}" for t in cols]
    return header, [[n] + [table[n, t] for t in cols] for n in rows]


def cmd_table(args, out) -> int:
    rows = _span(args.rows, "rows")
    cols = _span(args.cols, "cols") if args.cols else None
    header, data = build_table(args.kind, args.k, rows, cols)
    if args.format == "json":
        rec = {"table": args.kind, "k": args.k, "rows": args.rows, "cols": args.cols, "header": header, "data": data}
        print(json.dumps(rec), file=out)
        return 0
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter="\t" if args.format == "tsv" else ",", lineterminator="\n")
    writer.writerow(header)
    writer.writerows(data)
    out.write(buf.getvalue())
    return 0


# -- limit / maxwidth / verify ---------------------------------------------------


def cmd_limit(args, out) -> int:
    if args.k < 2:
        raise UsageError("--k must be at least 2")
    estimate = en.estimate_E_limit if args.quantity == "expected" else en.estimate_P_limit
    try:
        est = estimate(args.k, args.tol, args.n_cap, args.digits)
    except ValueError as e:
        raise UsageError(str(e)) from None
    rec = {
        "quantity": args.quantity,
        "k": args.k,
        "tol": args.tol,
        "n_cap": args.n_cap,
        "value": est.value,
        "n_used": est.n_used,
        "last_delta": f"{est.last_delta:.6e}",
        "converged": est.converged,
    }
    print(json.dumps(rec), file=out)
    return 0 if est.converged else 1


def cmd_maxwidth(args, out) -> int:
    if args.k < 2 or args.n < 0:
        raise UsageError("need --k >= 2 and --n >= 0")
    f = en.max_smallest_width(args.k, args.n)
    print(f"k={args.k}\tn={args.n}\tmax_width={f}", file=out)
    if args.witness:
        w = en.max_width_witness(args.k, args.n)
        got = fz.smallest_bpf(w).width if w else 0
        print(f"witness={''.join(map(str, w))}\tsmallest_width={got}", file=out)
        return 0 if got == f else 1
    return 0


def cmd_verify(args, out) -> int:
    cfg = OracleConfig(budget=args.budget, jobs=args.jobs)
    try:
        report = VERIFIERS[args.subject](args.k, args.n_max, cfg)
    except (BudgetExceeded, ValueError) as e:
        raise UsageError(str(e)) from None
    print(json.dumps(report.as_dict()), file=out)
    return 0 if report.passed else 1


# -- entry point -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bpfact", description="Block-palindrome factorizations of words.")
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("factorize", help="largest, smallest or all BP-factorizations of a word")
    f.add_argument("word", nargs="?")
    f.add_argument("--input", help="file with one word per line")
    f.add_argument("--mode", choices=["largest", "smallest", "all"], default="largest")
    f.add_argument("--codec", choices=["chars", "digits"], default="chars")
    f.add_argument("--format", choices=["text", "json"], default="text")
    f.add_argument("--separator", choices=sorted(SEPARATORS), default="ascii")
    f.set_defaults(func=cmd_factorize)

    t = sub.add_parser("table", help="count tables")
    t.add_argument("kind", choices=["ib", "ub", "unbordered"])
    t.add_argument("--k", type=int, required=True)
    t.add_argument("--rows", required=True, metavar="A:B")
    t.add_argument("--cols", metavar="A:B")
    t.add_argument("--format", choices=["tsv", "csv", "json"], default="tsv")
    t.set_defaults(func=cmd_table)

    lim = sub.add_parser("limit", help="estimate a limiting expectation or probability")
    lim.add_argument("quantity", choices=["expected", "unique-border"])
    lim.add_argument("--k", type=int, required=True)
    lim.add_argument("--tol", required=True)
    lim.add_argument("--n-cap", type=int, required=True)
    lim.add_argument("--digits", type=int, default=4)
    lim.set_defaults(func=cmd_limit)

    m = sub.add_parser("maxwidth", help="maximum width of a smallest BP-factorization")
    m.add_argument("--k", type=int, required=True)
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--witness", action="store_true")
    m.set_defaults(func=cmd_maxwidth)

    v = sub.add_parser("verify", help="exhaustive cross-check against brute force")
    v.add_argument("subject", choices=["ib", "ub", "maxwidth", "theorem5", "borders"])
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--budget", type=int, default=OracleConfig.budget)
    v.set_defaults(func=cmd_verify)
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, OSError) as e:
        print(f"bpfact: error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
