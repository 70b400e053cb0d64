"""Command-line interface: ``fibra <subcommand> ...``.

Exit codes: 0 success (or every check matched), 1 a closed form disagreed
with its enumeration, 2 usage or domain error, 3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .analysis import (
    PrimitivityMode,
    TandemType,
    complexity2d_finite,
    complexity2d_infinite,
    count_factors_2d,
    count_Ia_closed,
    count_Ib_closed,
    count_quartics_closed,
    distinct_Ia_closed,
    distinct_Ib_closed,
    distinct_quartics_closed,
    enumerate_quartics,
    enumerate_tandems,
    verify_sweep,
)
from .array2d import DEFAULT_SEEDS, FibArrayParams, Grid, fib_array
from .dfao import FIB_DFAO, export_automaton, padded_pair, prefix_via_dfao
from .errors import DomainError, FibraError, ResourceError
from .fibcore import fib
from .morphism2d import fib_array_via_mu
from .word1d import complexity_closed, complexity_enum, fib_word

INDEX_CONVENTIONS = {
    "dfao": "0-based (row, col)",
    "tandem_positions": "1-based (row, col) of the first root copy",
    "square_positions": "1-based start",
}

TANDEM_TYPES = ["Ia", "Ib", "IIa", "IIb", "quartic"]


class CheckFailed(Exception):
    """Raised by a handler after emitting output whose checks did not all match."""

    def __init__(self, text: str):
        self.text = text


def _seeds(text: str) -> tuple[str, str, str, str]:
    if len(text) != 4:
        raise argparse.ArgumentTypeError("--seeds takes four symbols for f00 f01 f10 f11, e.g. abcd")
    return tuple(text)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="fibra",
        description="Fibonacci words and arrays: generation, tandem counts, factor complexity.",
        epilog="DFAO coordinates are 0-based; tandem and square positions are 1-based.",
    )
    ap.add_argument("--version", action="version", version=f"fibra {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen1d", help="print the Fibonacci word f_n")
    p.add_argument("n", type=int)
    p.add_argument("--first", default="a", help="image of f_0 (default a)")
    p.add_argument("--second", default="b", help="image of f_1 (default b)")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("gen2d", help="print the Fibonacci array f_{m,n}")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=["recursive", "morphism", "dfao"], default="recursive")
    p.add_argument("--seeds", type=_seeds, default=DEFAULT_SEEDS,
                   help="symbols of f00 f01 f10 f11 (default abcd)")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("tandems", help="count tandems of one type in f_{m,n}")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--type", choices=TANDEM_TYPES, default="Ia")
    p.add_argument("--distinct", action="store_true", help="count distinct tandem words")
    p.add_argument("--source", choices=["closed", "oracle", "both"], default="both")
    p.add_argument("--mode", choices=[m.value for m in PrimitivityMode], default="directional")
    p.add_argument("--list", action="store_true", help="also list oracle occurrences")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")

    p = sub.add_parser("complexity", help="factor complexity of f_n, f_{m,n} or f_{inf,inf}")
    csub = p.add_subparsers(dest="which", required=True)
    q = csub.add_parser("1d", help="p_k(f_n) for every k")
    q.add_argument("n", type=int)
    q.add_argument("--table", action="store_true", help="CSV rows for f_2 .. f_n")
    q.add_argument("--source", choices=["closed", "oracle", "both"], default="closed")
    q.add_argument("--format", choices=["text", "json", "csv"], default="text")
    q = csub.add_parser("2d", help="p_{k,l}(f_{m,n})")
    q.add_argument("m", type=int)
    q.add_argument("n", type=int)
    q.add_argument("--k", type=int)
    q.add_argument("--l", type=int)
    q.add_argument("--table", action="store_true", help="full k-by-l table")
    q.add_argument("--source", choices=["closed", "oracle", "both"], default="closed")
    q.add_argument("--format", choices=["text", "json", "csv"], default="text")
    q = csub.add_parser("inf", help="p_{k,l} of the infinite 2D word")
    q.add_argument("k", type=int)
    q.add_argument("l", type=int)
    q.add_argument("--table", action="store_true", help="table for sizes up to (k,l)")
    q.add_argument("--format", choices=["text", "json", "csv"], default="text")

    p = sub.add_parser("dfao", help="query or export the 2D Fibonacci DFAO")
    dsub = p.add_subparsers(dest="action", required=True)
    q = dsub.add_parser("at", help="symbol at 0-based (m, n)")
    q.add_argument("m", type=int)
    q.add_argument("n", type=int)
    q.add_argument("--trace", action="store_true", help="show the transition path")
    q.add_argument("--format", choices=["text", "json"], default="text")
    q = dsub.add_parser("export", help="graph description of the automaton")
    q.add_argument("--format", choices=["dot", "json"], default="dot")

    p = sub.add_parser("verify", help="closed forms vs enumeration over a range of (m, n)")
    p.add_argument("--max-m", type=int, default=7)
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--mode", choices=[m.value for m in PrimitivityMode], default="directional")
    p.add_argument("--no-complexity", action="store_true", help="skip the 2D complexity checks")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    return ap


def dump_json(obj) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def envelope(command: str, parameters: dict, payload, **metadata) -> str:
    meta = {"tool": "fibra", "version": __version__, "index_conventions": INDEX_CONVENTIONS}
    meta.update(metadata)
    return dump_json({"command": command, "parameters": parameters, "metadata": meta, "payload": payload})


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def emit_csv_table(table: dict[int, list[int]]) -> str:
    """Header of factor lengths, then one ragged row of p_k(f_n) per n."""
    width = max(len(row) for row in table.values())
    return _csv([list(range(1, width + 1))] + [table[n] for n in sorted(table)])


# ------------------------------------------------------------------ handlers

def cmd_gen1d(args) -> str:
    word = fib_word(args.n, args.first, args.second).content
    if args.format == "json":
        return envelope("gen1d", {"n": args.n, "first": args.first, "second": args.second},
                        {"word": word, "length": len(word)})
    return word + "\n"


def _gen2d(m: int, n: int, method: str, seeds) -> Grid:
    if method == "recursive":
        return fib_array(m, n, seeds)
    seeds = FibArrayParams(m, n, seeds).seeds
    if m < 1 or n < 1:
        raise DomainError(f"--method {method} needs m, n >= 1, got ({m},{n})")
    if method == "morphism":
        g = fib_array_via_mu(m, n)
    else:
        g = prefix_via_dfao(fib(m), fib(n))
    if tuple(seeds) != DEFAULT_SEEDS:
        table = str.maketrans("abcd", "".join(seeds))
        g = Grid(tuple(line.translate(table) for line in g.lines))
    return g


def cmd_gen2d(args) -> str:
    g = _gen2d(args.m, args.n, args.method, args.seeds)
    if args.format == "json":
        return envelope("gen2d", {"m": args.m, "n": args.n, "method": args.method,
                                  "seeds": "".join(args.seeds)},
                        {"rows": list(g.lines), "size": [g.rows, g.cols]})
    return g.to_text() + "\n"


_CLOSED = {
    ("Ia", False): count_Ia_closed,
    ("Ib", False): count_Ib_closed,
    ("IIa", False): count_quartics_closed,
    ("IIb", False): count_quartics_closed,
    ("quartic", False): count_quartics_closed,
    ("Ia", True): distinct_Ia_closed,
    ("Ib", True): distinct_Ib_closed,
    ("IIa", True): distinct_quartics_closed,
    ("IIb", True): distinct_quartics_closed,
    ("quartic", True): distinct_quartics_closed,
}


def cmd_tandems(args) -> str:
    mode = PrimitivityMode(args.mode)
    result: dict = {"type": args.type, "distinct": args.distinct}
    if args.source in ("closed", "both"):
        result["closed"] = _CLOSED[(args.type, args.distinct)](args.m, args.n)
    if args.source in ("oracle", "both"):
        g = fib_array(args.m, args.n)
        if args.type == "quartic":
            found = enumerate_quartics(g, mode, distinct=args.distinct)
        else:
            found = enumerate_tandems(g, TandemType(args.type), mode, distinct=args.distinct)
        result["oracle"] = len(found)
        if args.list:
            if args.distinct:
                result["words"] = sorted(list(w.lines) for w in found)
            else:
                result["occurrences"] = [
                    {"root_rows": o.root_rows, "root_cols": o.root_cols, "row": o.row, "col": o.col}
                    for o in found
                ]
    if args.source == "both":
        result["match"] = result["closed"] == result["oracle"]
    params = {"m": args.m, "n": args.n, "type": args.type, "distinct": args.distinct,
              "source": args.source, "mode": mode.value}
    if args.format == "json":
        out = envelope("tandems", params, result, primitivity_mode=mode.value)
    elif args.format == "csv" and "occurrences" in result:
        fields = ["root_rows", "root_cols", "row", "col"]
        out = _csv([fields] + [[occ[f] for f in fields] for occ in result["occurrences"]])
    elif args.format == "csv" and "words" in result:
        out = _csv([["word"]] + [["/".join(rows)] for rows in result["words"]])
    elif args.format == "csv":
        keys = [k for k in ("type", "distinct", "closed", "oracle", "match") if k in result]
        out = _csv([["m", "n", *keys], [args.m, args.n, *(_cell(result[k]) for k in keys)]])
    else:
        parts = [f"m={args.m}", f"n={args.n}"]
        parts += [f"{k}={_cell(result[k])}" for k in ("type", "distinct", "closed", "oracle", "match") if k in result]
        out = " ".join(parts) + "\n"
        for occ in result.get("occurrences", []):
            out += f"  root {occ['root_rows']}x{occ['root_cols']} at ({occ['row']},{occ['col']})\n"
        for rows in result.get("words", []):
            out += "  " + "/".join(rows) + "\n"
    if result.get("match") is False:
        raise CheckFailed(out)
    return out


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _check_source(values: dict, source: str, text: str) -> str:
    if source == "both" and values["closed"] != values["oracle"]:
        raise CheckFailed(text)
    return text


def cmd_complexity(args) -> str:
    if args.which == "1d":
        return _complexity_1d(args)
    if args.which == "2d":
        return _complexity_2d(args)
    return _complexity_inf(args)


def _complexity_1d(args) -> str:
    if args.n < 2:
        raise DomainError(f"complexity 1d needs n >= 2, got {args.n}")
    indices = range(2, args.n + 1) if args.table else [args.n]
    closed = {n: [complexity_closed(n, k) for k in range(1, fib(n) + 1)] for n in indices}
    oracle = {}
    if args.source in ("oracle", "both"):
        for n in indices:
            word = fib_word(n).content
            oracle[n] = [complexity_enum(word, k) for k in range(1, fib(n) + 1)]
    shown = oracle if args.source == "oracle" else closed
    params = {"n": args.n, "table": args.table, "source": args.source}
    if args.format == "json":
        payload = {"rows": {str(n): shown[n] for n in indices}}
        if args.source == "both":
            payload["match"] = closed == oracle
        out = envelope("complexity-1d", params, payload)
    elif args.format == "csv" or args.table:
        out = emit_csv_table(shown)
    else:
        out = ",".join(map(str, shown[args.n])) + "\n"
    if args.source == "both" and closed != oracle:
        raise CheckFailed(out)
    return out


def _complexity_2d(args) -> str:
    m, n = args.m, args.n
    if (args.k is None) != (args.l is None):
        raise DomainError("give both --k and --l, or neither")
    if args.k is not None and not args.table:
        sizes = [(args.k, args.l)]
    else:
        sizes = [(k, l) for k in range(1, fib(m) + 1) for l in range(1, fib(n) + 1)]
    closed = {s: complexity2d_finite(m, n, *s) for s in sizes}
    oracle = {}
    if args.source in ("oracle", "both"):
        g = fib_array(m, n)
        oracle = {s: count_factors_2d(g, *s) for s in sizes}
    shown = oracle if args.source == "oracle" else closed
    params = {"m": m, "n": n, "k": args.k, "l": args.l, "table": args.table, "source": args.source}
    out = _emit_2d(shown, sizes, params, "complexity-2d", args.format)
    if args.source == "both" and closed != oracle:
        raise CheckFailed(out)
    return out


def _complexity_inf(args) -> str:
    sizes = ([(k, l) for k in range(1, args.k + 1) for l in range(1, args.l + 1)]
             if args.table else [(args.k, args.l)])
    values = {s: complexity2d_infinite(*s) for s in sizes}
    params = {"k": args.k, "l": args.l, "table": args.table}
    return _emit_2d(values, sizes, params, "complexity-inf", args.format)


def _emit_2d(values: dict, sizes: list, params: dict, command: str, fmt: str) -> str:
    if fmt == "json":
        payload = [{"k": k, "l": l, "count": values[(k, l)]} for k, l in sizes]
        return envelope(command, params, payload)
    if len(sizes) == 1 and fmt == "text":
        return f"{values[sizes[0]]}\n"
    ks = sorted({k for k, _ in sizes})
    ls = sorted({l for _, l in sizes})
    rows = [["k\\l", *ls]] + [[k, *(values[(k, l)] for l in ls)] for k in ks]
    return _csv(rows)


def cmd_dfao(args) -> str:
    if args.action == "export":
        if args.format == "json":
            return envelope("dfao-export", {"format": "json"}, export_automaton("dict"))
        return export_automaton("dot") + "\n"
    rep = padded_pair(args.m, args.n)
    states = [FIB_DFAO.initial]
    for pair in rep.pairs():
        states.append(FIB_DFAO.transition(states[-1], pair))
    symbol = states[-1]
    if args.format == "json":
        payload = {"symbol": symbol, "row_rep": rep.row_rep, "col_rep": rep.col_rep, "path": states}
        return envelope("dfao-at", {"m": args.m, "n": args.n}, payload)
    if args.trace:
        steps = " ".join(f"-{p}-> {s}" for p, s in zip(rep.pairs(), states[1:]))
        return f"{symbol}\n({rep.row_rep or 'ε'},{rep.col_rep or 'ε'}): {states[0]} {steps}\n"
    return symbol + "\n"


def cmd_verify(args) -> str:
    mode = PrimitivityMode(args.mode)
    reports = verify_sweep(args.max_m, args.max_n, mode, complexity=not args.no_complexity)
    ok = all(r.match for r in reports)
    params = {"max_m": args.max_m, "max_n": args.max_n, "mode": mode.value,
              "complexity": not args.no_complexity}
    if args.format == "json":
        out = envelope("verify", params, {"all_match": ok, "reports": [r.to_dict() for r in reports]},
                       primitivity_mode=mode.value)
    elif args.format == "csv":
        rows = [["m", "n", "quantity", "closed", "oracle", "match", "note"]]
        for r in reports:
            rows += [[r.m, r.n, e.quantity, e.closed, e.oracle, _cell(e.match), e.note] for e in r.entries]
        out = _csv(rows)
    else:
        lines = []
        for r in reports:
            for e in r.entries:
                flag = "ok  " if e.match else "FAIL"
                lines.append(f"{flag} m={r.m} n={r.n} {e.quantity}: closed={e.closed} oracle={e.oracle}"
                             + (f"  [{e.note}]" if e.note and not e.match else ""))
        checks = sum(len(r.entries) for r in reports)
        failed = sum(not e.match for r in reports for e in r.entries)
        lines.append(f"{checks - failed}/{checks} checks matched (mode={mode.value})")
        out = "\n".join(lines) + "\n"
    if not ok:
        raise CheckFailed(out)
    return out


HANDLERS = {
    "gen1d": cmd_gen1d,
    "gen2d": cmd_gen2d,
    "tandems": cmd_tandems,
    "complexity": cmd_complexity,
    "dfao": cmd_dfao,
    "verify": cmd_verify,
}


def _error(kind: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": kind, "message": message}, sort_keys=True) + "\n")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = HANDLERS[args.command](args)
    except CheckFailed as exc:
        sys.stdout.write(exc.text)
        return 1
    except (ResourceError, OverflowError, MemoryError) as exc:
        _error("resource", str(exc))
        return 3
    except FibraError as exc:
        _error(exc.kind, str(exc))
        return 2
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
