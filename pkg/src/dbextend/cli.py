"""Command line interface: generate, extend, verify, inspect.

Exit codes: 0 pass, 1 verification failure, 2 usage or parse error,
3 input is not a de Bruijn sequence.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from collections.abc import Sequence

from .extender import extend, insertion_trace, rotate_to_start
from .graph import DEFAULT_SIZE_CAP, GraphParams, NotDeBruijn, generate_de_bruijn, sequence_to_cycle
from .matching import perfect_matching, sections_of
from .petals import build_petals_tree
from .verifier import verify_extension, verify_order

DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3


class UsageError(Exception):
    pass


def format_word(word: Sequence[int], size: int) -> str:
    """One character per symbol for alphabets of at most 36 symbols, else comma separated."""
    if size <= len(DIGITS):
        return "".join(DIGITS[a] for a in word)
    return ",".join(map(str, word))


def parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    try:
        if "," in text:
            return tuple(int(t) for t in text.split(","))
        return tuple(DIGITS.index(c) for c in text.lower())
    except ValueError:
        raise UsageError(f"cannot parse sequence {text!r}") from None


def size_cap() -> int:
    raw = os.environ.get("DEBRUIJN_SIZE_CAP")
    if raw is None:
        return DEFAULT_SIZE_CAP
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"DEBRUIJN_SIZE_CAP must be an integer, got {raw!r}") from None


def _read_seq(args) -> tuple[int, ...]:
    if getattr(args, "file", None):
        try:
            with open(args.file) as fh:
                return parse_word(fh.read())
        except OSError as e:
            raise UsageError(str(e)) from None
    if args.seq is None:
        raise UsageError("--seq or --file is required")
    if args.seq == "-":
        return parse_word(sys.stdin.read())
    return parse_word(args.seq)


def report_dict(result) -> dict:
    """Machine-readable report of an extension. Field names are a stable contract."""
    k, n = result.k, result.n
    rep = verify_extension(result.input, result.output, k, n, witness=result.embedding)
    return {
        "k": k,
        "n": n,
        "start": format_word(result.start, k),
        "input": format_word(result.input, k),
        "output": format_word(result.output, k + 1),
        "embedding": list(result.embedding),
        "insertions": [
            {
                "section": ins.section,
                "anchor": format_word(ins.anchor, k),
                "position": ins.position,
                "petal_len": ins.petal_len,
            }
            for ins in result.insertions
        ],
        "matching": [
            {"section": r["section"], "vertex": format_word(r["vertex"], k), "edge_index": r["edge_index"]}
            for r in result.matching.rows()
        ],
        "window_bound": result.window_bound,
        "checks": rep.checks(),
    }


def cmd_generate(args) -> int:
    cap = size_cap()
    if args.k < 2 or args.n < 1:
        raise UsageError("need --k >= 2 and --n >= 1")
    if args.k**args.n > cap:
        raise UsageError(f"k^n = {args.k}^{args.n} exceeds size cap {cap}")
    start = parse_word(args.start) if args.start is not None else None
    rng = random.Random(args.seed) if args.seed is not None else None
    try:
        seq = generate_de_bruijn(args.k, args.n, start=start, rng=rng, cap=cap)
    except ValueError as e:
        raise UsageError(str(e)) from None
    print(format_word(seq, args.k))
    return EXIT_OK


def cmd_extend(args) -> int:
    cap = size_cap()
    if args.k < 2 or args.n < 1:
        raise UsageError("need --k >= 2 and --n >= 1")
    if (args.k + 1) ** args.n > cap:
        raise UsageError(f"(k+1)^n = {args.k + 1}^{args.n} exceeds size cap {cap}")
    v = _read_seq(args)
    start = parse_word(args.start) if args.start is not None else None
    try:
        result = extend(v, args.k, args.n, start=start)
    except NotDeBruijn as e:
        print(f"input is not de Bruijn of order {args.n} over {args.k} symbols: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as e:
        print(f"precondition failed: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    print(format_word(result.output, args.k + 1))
    if args.trace:
        for line in insertion_trace(result):
            print(line, file=sys.stderr)
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(report_dict(result), fh, indent=2)
            fh.write("\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.k < 2 or args.n < 1:
        raise UsageError("need --k >= 2 and --n >= 1")
    w = parse_word(args.w)
    if args.v is None:
        chk = verify_order(w, args.k, args.n)
        checks = {"de_bruijn": chk}
    else:
        v = parse_word(args.v)
        rep = verify_extension(v, w, args.k, args.n)
        checks = {"de_bruijn": rep.de_bruijn, "subsequence": rep.subsequence, "window": rep.window}
    ok = all(c.ok for c in checks.values())
    if args.json:
        print(json.dumps({"passed": ok, "checks": {n: c.ok for n, c in checks.items()}}))
    else:
        for name, c in checks.items():
            print(f"{name}: {'PASS' if c.ok else 'FAIL'}" + (f" ({c.detail})" if c.detail else ""))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_inspect(args) -> int:
    k, n = args.k, args.n
    if k < 2 or n < 1:
        raise UsageError("need --k >= 2 and --n >= 1")
    m = n - 1
    if args.what in ("petals-tree", "petals"):
        tree = build_petals_tree(k, m)
        if args.what == "petals-tree":
            _dump_tree(tree, args.json)
        else:
            rows = []
            for v in GraphParams(k, m).vertices():
                p = tree.petal(v)
                rows.append({
                    "anchor": format_word(v, k),
                    "length": len(p),
                    "labels": format_word(p.labels, k + 1),
                    "necklaces": sorted(
                        format_word(nd.necklace.canon, k + 1) for nd in _subtree(tree, tree.anchor_node(v))
                    ),
                })
            if args.json:
                print(json.dumps(rows, indent=2))
            else:
                for r in rows:
                    print(f"petal {r['anchor']}: {r['length']} edges, labels {r['labels']}, "
                          f"necklaces {' '.join(r['necklaces'])}")
        return EXIT_OK

    v = _read_seq(args)
    if args.start is not None:
        try:
            v = rotate_to_start(v, parse_word(args.start))
        except ValueError as e:
            raise UsageError(str(e)) from None
    try:
        cycle = sequence_to_cycle(v, GraphParams(k, m))
    except NotDeBruijn as e:
        print(f"input is not de Bruijn: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    sec = sections_of(cycle)
    if args.what == "sections":
        rows = [
            {"section": j, "edge_indices": [i for i, _ in s], "heads": [format_word(h, k) for h in sec.heads(j)]}
            for j, s in enumerate(sec.sections)
        ]
        if args.json:
            print(json.dumps(rows, indent=2))
        else:
            for r in rows:
                print(f"section {r['section']}: edges {r['edge_indices']} heads ({', '.join(r['heads'])})")
    else:
        mr = perfect_matching(sec)
        rows = [
            {"section": r["section"], "vertex": format_word(r["vertex"], k), "edge_index": r["edge_index"]}
            for r in mr.rows()
        ]
        if args.json:
            print(json.dumps(rows, indent=2))
        else:
            for r in rows:
                print(f"section {r['section']} -> vertex {r['vertex']} at edge {r['edge_index']}")
    return EXIT_OK


def _subtree(tree, node):
    out = [node]
    for c in node.children:
        out.extend(_subtree(tree, tree.nodes[c]))
    return out


def _dump_tree(tree, as_json: bool) -> None:
    size = tree.k + 1
    if as_json:
        rows = tree.dump()
        for r in rows:
            r["node"] = format_word(r["node"], size)
            r["parent"] = None if r["parent"] is None else format_word(r["parent"], size)
            r["entry_vertex"] = format_word(r["entry_vertex"], size)
            r["children"] = [format_word(c, size) for c in r["children"]]
        print(json.dumps(rows, indent=2))
        return

    def show(node, indent):
        print(f"{'  ' * indent}[{format_word(node.necklace.canon, size)}] "
              f"depth {node.depth} entry {format_word(node.entry_vertex, size) or '-'}")
        for c in node.children:
            show(tree.nodes[c], indent + 1)

    print("root")
    for r in sorted(tree.roots(), key=lambda nd: nd.entry_vertex):
        show(r, 1)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="dbextend",
        description="Extend de Bruijn sequences by one new symbol with a bounded gap between its occurrences.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="print a de Bruijn sequence (Hierholzer)")
    g.add_argument("--k", type=int, required=True, help="alphabet size")
    g.add_argument("--n", type=int, required=True, help="order")
    g.add_argument("--method", choices=["hierholzer"], default="hierholzer")
    g.add_argument("--start", help="start vertex (n-1 symbols)")
    g.add_argument("--seed", type=int, help="shuffle each vertex's label order with this seed")
    g.set_defaults(func=cmd_generate)

    e = sub.add_parser("extend", help="extend a de Bruijn sequence by the symbol k")
    e.add_argument("--seq", help="input sequence, or - for stdin")
    e.add_argument("--file", help="read the input sequence from a file")
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--start", help="start vertex, a window of n-1 symbols of the input")
    e.add_argument("--report", metavar="PATH", help="write a JSON report")
    e.add_argument("--trace", action="store_true", help="print the insertion trace to stderr")
    e.set_defaults(func=cmd_extend)

    v = sub.add_parser("verify", help="check an extension, or just the de Bruijn property")
    v.add_argument("--v", help="original sequence; omit to only check w over k symbols")
    v.add_argument("--w", required=True)
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("inspect", help="dump intermediate structures")
    i.add_argument("what", choices=["sections", "matching", "petals-tree", "petals"])
    i.add_argument("--seq")
    i.add_argument("--file")
    i.add_argument("--k", type=int, required=True)
    i.add_argument("--n", type=int, required=True)
    i.add_argument("--start")
    i.add_argument("--json", action="store_true")
    i.set_defaults(func=cmd_inspect)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
