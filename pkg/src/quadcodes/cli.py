"""Command-line interface: ``quadcodes <command> [options]``.

Exit codes: 0 success, 1 usage or parse error, 2 infeasible deck,
3 invalid mathematical input, 4 budget exceeded, 5 ``--check`` mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Dict, List, Optional, Sequence

from . import golden, kernels
from .deck import AffineMap, check_dim, enumerate_quads, format_quaternary, parse_cards
from .errors import BudgetExceeded, InfeasibleDeck, InvalidDistribution, InvalidQuadCode
from .gf2 import random_invertible
from .quadcode import (
    QuadCode,
    code_from_cards,
    min_realizing_dimension,
    parse_code,
    realize_cards,
    weight_distribution,
)
from .search import (
    EXACT_B_LENGTH,
    EXACT_F_DIM,
    compute_B_with_witness,
    compute_D,
    compute_F_with_witness,
    lazy_caterer_bound,
    lazy_caterer_dimension,
    probabilistic_threshold,
)
from .squares import (
    BROKEN_DIAGONALS,
    SquareKind,
    affine_image,
    count_squares,
    dimension_table,
    identity_square,
    is_square_of_kind,
    parse_square,
    predicted_count,
    square_code,
    square_weight_enumerator,
    verify_hamming_15_11,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_INVALID = 3
EXIT_BUDGET = 4
EXIT_CHECK = 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class Outcome:
    """What a command produced: payload, text rendering, and status."""

    def __init__(self, result: dict, text: str, deck=None, exact: bool = True, seed=None, code: int = EXIT_OK):
        self.result = result
        self.text = text
        self.deck = deck
        self.exact = exact
        self.seed = seed
        self.code = code


def _cell(v) -> str:
    return "-" if v is None else str(v)


def _aligned(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    cells = [[str(h) for h in header]] + [[_cell(v) for v in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells)


def _compare(source: str, golden_values: Dict, computed: Dict) -> dict:
    mismatches = []
    for key, want in golden_values.items():
        got = computed.get(key)
        if got != want:
            mismatches.append({"key": key, "expected": want, "computed": got})
    return {"source": source, "ok": not mismatches, "mismatches": mismatches}


def _check_text(check: dict) -> str:
    if check["ok"]:
        return f"check against {check['source']}: OK"
    lines = [f"check against {check['source']}: MISMATCH"]
    for m in check["mismatches"]:
        lines.append(f"  {m['key']}: expected {_cell(m['expected'])}, computed {_cell(m['computed'])}")
    return "\n".join(lines)


# ---------------------------------------------------------------- analyze

def cmd_analyze(args) -> Outcome:
    n = check_dim(args.deck)
    seq = parse_cards(args.cards, n)
    code = code_from_cards(seq)
    dist = weight_distribution(code)
    quads = enumerate_quads(seq.cards)
    result = {
        "cards": list(seq.cards),
        "dimension": code.dimension,
        "length": code.length,
        "generators": code.to_strings(),
        "weight_distribution": list(dist.counts),
        "quads": dist[4],
        "quad_list": [list(q) for q in quads],
        "min_realizing_dimension": min_realizing_dimension(code),
    }
    lines = [
        f"cards: {', '.join(str(c) for c in seq.cards)}",
        f"length {code.length}, dimension k={code.dimension}",
        "generators:",
    ]
    lines += [f"  {g}" for g in result["generators"]] or ["  (none)"]
    lines.append("weight distribution:")
    lines.append(_aligned(["w", "A_w"], [(w, a) for w, a in enumerate(dist.counts) if a]))
    lines.append(f"quads={dist[4]}")
    lines += [f"  {q}" for q in result["quad_list"]]
    lines.append(f"minimal deck dimension: {result['min_realizing_dimension']}")
    return Outcome(result, "\n".join(lines), deck=n)


# ---------------------------------------------------------------- realize

def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def cmd_realize(args) -> Outcome:
    n = check_dim(args.deck)
    code = QuadCode.from_code(parse_code(_read(args.code_file)))
    seq = realize_cards(code, n)
    if code_from_cards(seq) != code:
        raise AssertionError("realized cards do not reproduce the code")
    result = {
        "length": code.length,
        "dimension": code.dimension,
        "cards": list(seq.cards),
        "quaternary": [format_quaternary(c, n) for c in seq.cards] if n else None,
        "verified": True,
    }
    text = "\n".join(
        [
            f"code of length {code.length}, dimension {code.dimension} in deck 2^{n}:",
            ", ".join(str(c) for c in seq.cards),
        ]
        + ([", ".join(result["quaternary"])] if n else [])
        + ["round trip verified"]
    )
    return Outcome(result, text, deck=n)


# ---------------------------------------------------------------- tables

def _table_d(args) -> Outcome:
    table = compute_D(args.max_cards, best_effort=args.best_effort)
    max_q = table.max_quads()
    rows = table.rows(max_q)
    result = table.to_json()
    result["max_quads"] = max_q
    text = _aligned(["l\\q"] + list(range(max_q + 1)), [[l] + r for l, r in enumerate(rows, start=1)])
    out = Outcome(result, text, exact=table.exact)
    if args.check:
        computed, expected = {}, {}
        sources = [("Table 1", golden.TABLE_1_D, golden.TABLE_1_MAX_QUADS)]
        sources.append(("eight-card classification", {8: golden.EIGHT_CARDS_D}, max(golden.EIGHT_CARDS_D)))
        used = []
        for name, ref, qmax in sources:
            for l, cells in ref.items():
                if l > table.max_cards:
                    continue
                if name not in used:
                    used.append(name)
                for q in range(max(qmax, max_q) + 1):
                    key = f"D({l},{q})"
                    expected[key] = cells.get(q)
                    computed[key] = table.get(l, q)
        _attach_check(out, _compare(" + ".join(used), expected, computed))
    return out


def _table_b(args) -> Outcome:
    if args.max_length > EXACT_B_LENGTH and not args.best_effort:
        raise BudgetExceeded(f"exact B stops at length {EXACT_B_LENGTH}; pass --best-effort")
    values, witnesses = {}, {}
    for l in range(1, args.max_length + 1):
        size, code = compute_B_with_witness(l, best_effort=args.best_effort)
        values[l] = size
        witnesses[l] = code.to_strings()
    result = {"B": {str(l): v for l, v in values.items()}, "witnesses": {str(l): w for l, w in witnesses.items()}}
    text = _aligned(["l", "B(l)"], list(values.items()))
    out = Outcome(result, text, exact=args.max_length <= EXACT_B_LENGTH)
    if args.check:
        ref = {f"B({l})": v for l, v in golden.TABLE_3_B.items() if l <= args.max_length}
        _attach_check(out, _compare("Table 3", ref, {f"B({l})": v for l, v in values.items()}))
    return out


def _table_f(args) -> Outcome:
    if args.max_dim > EXACT_F_DIM and not args.best_effort:
        raise BudgetExceeded(f"exact F stops at n = {EXACT_F_DIM}; pass --best-effort")
    values, witnesses, exact = {}, {}, True
    for n in range(1, args.max_dim + 1):
        res = compute_F_with_witness(n, best_effort=args.best_effort)
        if enumerate_quads(res.witness):
            raise AssertionError(f"witness for n={n} contains a quad")
        values[n] = res.size
        witnesses[n] = list(res.witness)
        exact = exact and res.exact
    result = {"F": {str(n): v for n, v in values.items()}, "witnesses": {str(n): w for n, w in witnesses.items()}}
    text = _aligned(["n", "F(n)", "witness"], [(n, v, " ".join(map(str, witnesses[n]))) for n, v in values.items()])
    out = Outcome(result, text, exact=exact)
    if args.check:
        ref = {f"F({n})": v for n, v in golden.TABLE_4_F.items() if n <= args.max_dim}
        _attach_check(out, _compare("Table 4", ref, {f"F({n})": v for n, v in values.items()}))
    return out


def _table_bounds(args) -> Outcome:
    if args.cards < 4:
        raise UsageError("--cards must be at least 4")
    if args.max_dim < 3:
        raise UsageError("--max-dim must be at least 3")
    lower = {l: lazy_caterer_dimension(l) for l in range(4, args.cards + 1)}
    caterer = {l: lazy_caterer_bound(l) for l in range(4, args.cards + 1)}
    upper = {n: probabilistic_threshold(n) for n in range(3, args.max_dim + 1)}
    result = {
        "lower": {str(l): v for l, v in lower.items()},
        "lazy_caterer": {str(l): v for l, v in caterer.items()},
        "upper": {str(n): v for n, v in upper.items()},
    }
    text = "\n".join(
        [
            "smallest deck dimension for l quad-free cards (lower bound):",
            _aligned(["l"] + list(lower), [["n >="] + list(lower.values())]),
            "",
            "quad-free set size guaranteed in deck 2^n:",
            _aligned(["n"] + list(upper), [["l"] + list(upper.values())]),
        ]
    )
    out = Outcome(result, text)
    if args.check:
        ref = {f"lower({l})": v for l, v in golden.TABLE_5_LOWER.items() if l <= args.cards}
        ref.update({f"upper({n})": v for n, v in golden.TABLE_6_UPPER.items() if n <= args.max_dim})
        got = {f"lower({l})": v for l, v in lower.items()}
        got.update({f"upper({n})": v for n, v in upper.items()})
        _attach_check(out, _compare("Table 5 + Table 6", ref, got))
    return out


def _attach_check(out: Outcome, check: dict) -> None:
    out.result["check"] = check
    out.text += "\n" + _check_text(check)
    if not check["ok"]:
        out.code = EXIT_CHECK


def cmd_tables(args) -> Outcome:
    return {"d": _table_d, "b": _table_b, "f": _table_f, "bounds": _table_bounds}[args.which](args)


# ---------------------------------------------------------------- noquads

def cmd_noquads(args) -> Outcome:
    n = check_dim(args.deck)
    res = compute_F_with_witness(n, best_effort=args.best_effort)
    if args.max:
        size, cards = res.size, list(res.witness)
    else:
        if args.size < 0:
            raise UsageError("--size must be non-negative")
        size = args.size
        cards = list(res.witness[:size]) if size <= res.size else None
    result = {"size": size, "max": res.size if args.max else None, "cards": cards, "exists": cards is not None}
    if cards is not None:
        result["verified_quad_free"] = not enumerate_quads(cards)
        if not result["verified_quad_free"]:
            raise AssertionError("witness contains a quad")
        text = f"{len(cards)} cards, verified quad-free: " + ", ".join(map(str, cards))
        if args.max:
            text = f"F({n}) = {res.size}\n" + text
    else:
        text = f"none exists: every {size}-card set in deck 2^{n} contains a quad (maximum is {res.size})"
    return Outcome(result, text, deck=n, exact=res.exact)


# ---------------------------------------------------------------- squares

def _kind(args) -> SquareKind:
    if args.kind is None:
        raise UsageError("--kind is required for this action")
    return SquareKind(args.kind)


def _deck(args) -> int:
    if args.deck is None:
        raise UsageError("--deck is required for this action")
    return check_dim(args.deck)


def _verify_kind(kind: SquareKind, seed: int) -> dict:
    code = square_code(kind)
    enum = square_weight_enumerator(kind)
    counts = {w: a for w, a in enumerate(enum.counts) if a}
    sq = identity_square()
    t = AffineMap(random_invertible(4, seed), seed % 16)
    checks = {
        "dimension": code.dimension == golden.SQUARE_DIMENSIONS[kind.value],
        "weight_enumerator": counts == golden.SQUARE_ENUMERATORS[kind.value],
        "identity_square": is_square_of_kind(sq, kind),
        "affine_image": is_square_of_kind(affine_image(t, sq), kind),
    }
    if kind is SquareKind.MAGIC:
        checks["broken_diagonals"] = all(w in code for w in BROKEN_DIAGONALS)
    return {
        "kind": kind.value,
        "dimension": code.dimension,
        "weight_enumerator": {str(w): a for w, a in counts.items()},
        "polynomial": enum.polynomial(),
        "checks": checks,
        "ok": all(checks.values()),
    }


def cmd_squares(args) -> Outcome:
    if args.perfect:
        report: List[str] = []
        ok = verify_hamming_15_11(report)
        text = "Hamming(15,11): OK" if ok else "Hamming(15,11): FAILED\n" + "\n".join(report)
        return Outcome({"hamming_15_11": ok, "problems": report}, text, code=EXIT_OK if ok else EXIT_CHECK)
    if args.dimensions:
        table = dimension_table()
        rows = [[k] + [table["counts"][kd.value].get(k, 0) for kd in SquareKind] + [table["deck_size"][k]]
                for k in table["dimensions"]]
        text = _aligned(["k"] + [kd.value for kd in SquareKind] + ["deck"], rows)
        table["deck_size"] = {str(k): v for k, v in table["deck_size"].items()}
        table["counts"] = {kd: {str(k): v for k, v in c.items()} for kd, c in table["counts"].items()}
        return Outcome(table, text)
    kind = _kind(args)
    if args.verify:
        if args.square:
            n = _deck(args)
            sq = parse_square(_read(args.square), n)
            ok = is_square_of_kind(sq, kind)
            text = f"square is {'' if ok else 'not '}{kind.value}"
            return Outcome({"kind": kind.value, "is_kind": ok, "rows": sq.rows()}, text, deck=n,
                           code=EXIT_OK if ok else EXIT_INVALID)
        res = _verify_kind(kind, args.seed)
        lines = [f"{kind.value} code: dimension {res['dimension']}", f"W = {res['polynomial']}"]
        lines += [f"  {name}: {'OK' if v else 'FAILED'}" for name, v in res["checks"].items()]
        return Outcome(res, "\n".join(lines), seed=args.seed, code=EXIT_OK if res["ok"] else EXIT_CHECK)
    n = _deck(args)
    if args.predict:
        value = predicted_count(n, kind)
        text = f"predicted {kind.value} squares in deck 2^{n}: {value}"
        if n < 4:
            text += " (formula needs n >= 4)"
        return Outcome({"kind": kind.value, "predicted": value, "formula_applies": n >= 4}, text, deck=n)
    method = args.method
    if method == "auto":
        method = "full" if kernels.COMPILED and n <= 4 else "orbit"
    if kind is SquareKind.SEMIMAGIC and method == "full" and n >= 4 and not args.slow:
        raise BudgetExceeded("full semimagic count is slow; pass --slow or --method orbit")
    value = count_squares(n, kind, method)
    predicted = predicted_count(n, kind)
    result = {"kind": kind.value, "count": value, "method": method, "predicted": predicted,
              "matches_prediction": value == predicted}
    text = f"{kind.value} squares in deck 2^{n}: {value} ({method}; predicted {predicted})"
    return Outcome(result, text, deck=n)


# ---------------------------------------------------------------- driver

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quadcodes", description="Quad codes of EvenQuads card sets.")
    parser.add_argument("--json", action="store_true", help="emit a JSON envelope")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit a JSON envelope")
        p.set_defaults(func=func)
        return p

    p = add("analyze", cmd_analyze, "code, weight distribution and quads of a card set")
    p.add_argument("--deck", type=int, required=True, help="deck dimension n (deck size 2^n)")
    p.add_argument("--cards", required=True, help="comma-separated cards, decimal or q:quaternary")

    p = add("realize", cmd_realize, "cards realizing a code file")
    p.add_argument("code_file", help="file of 0/1 generator rows, '-' for stdin")
    p.add_argument("--deck", type=int, required=True)

    p = add("tables", cmd_tables, "reproduce the D, B, F and bounds tables")
    p.add_argument("which", choices=["d", "b", "f", "bounds"])
    p.add_argument("--max-cards", type=int, default=7, help="rows of the D table")
    p.add_argument("--max-length", type=int, default=12, help="lengths of the B table")
    p.add_argument("--max-dim", type=int, default=None, help="F table dimensions, or bounds table n")
    p.add_argument("--cards", type=int, default=15, help="largest l of the lower-bound row")
    p.add_argument("--check", action="store_true", help="compare with reference values")
    p.add_argument("--best-effort", action="store_true", help="allow limits beyond the exact budget")

    p = add("noquads", cmd_noquads, "quad-free card sets")
    p.add_argument("--deck", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--size", type=int)
    g.add_argument("--max", action="store_true")
    p.add_argument("--best-effort", action="store_true")

    p = add("squares", cmd_squares, "semimagic, magic and strongly magic quad squares")
    p.add_argument("--kind", choices=[k.value for k in SquareKind])
    p.add_argument("--deck", type=int)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--verify", action="store_true", help="check the code, or the square given by --square")
    g.add_argument("--count", action="store_true")
    g.add_argument("--predict", action="store_true")
    g.add_argument("--perfect", action="store_true", help="punctured strongly magic code is Hamming(15,11)")
    g.add_argument("--dimensions", action="store_true", help="square codes by dimension")
    p.add_argument("--square", help="square file for --verify")
    p.add_argument("--method", choices=["auto", "full", "orbit"], default="auto")
    p.add_argument("--slow", action="store_true", help="allow the long semimagic count")
    p.add_argument("--seed", type=int, default=0, help="seed for the random affine map in --verify")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if getattr(args, "which", None) == "f" and args.max_dim is None:
        args.max_dim = EXACT_F_DIM
    elif getattr(args, "which", None) == "bounds" and args.max_dim is None:
        args.max_dim = 10
    start = time.perf_counter()
    try:
        out = args.func(args)
    except InfeasibleDeck as exc:
        return _fail(EXIT_INFEASIBLE, f"infeasible: {exc}")
    except (InvalidQuadCode, InvalidDistribution) as exc:
        return _fail(EXIT_INVALID, f"invalid input: {exc}")
    except BudgetExceeded as exc:
        return _fail(EXIT_BUDGET, f"budget exceeded: {exc}")
    except (UsageError, ValueError) as exc:
        return _fail(EXIT_USAGE, f"error: {exc}")
    elapsed = time.perf_counter() - start
    if args.json:
        envelope = {
            "command": ["quadcodes"] + argv,
            "deck": out.deck,
            "result": out.result,
            "elapsed": round(elapsed, 6),
            "budget": "exact" if out.exact else "best-effort",
            "seed": out.seed,
        }
        sys.stdout.write(json.dumps(envelope, indent=2) + "\n")
    else:
        sys.stdout.write(out.text + "\n")
        if not out.exact:
            sys.stdout.write("(best-effort: not proven exact)\n")
    return out.code


def _fail(code: int, message: str) -> int:
    print(f"quadcodes: {message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
