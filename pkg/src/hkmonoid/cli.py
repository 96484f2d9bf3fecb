"""Command-line entry point: ``hkmonoid <subcommand> [flags]``.

Exit codes: 0 success or "yes", 1 "no" or a failed property, 2 invalid
input or out of scope, 3 internal assertion.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from hkmonoid import fixtures
from hkmonoid.analysis import CHECKS, default_limits, enumerate_reduced, exceptional_bound, exceptional_set, run_suite
from hkmonoid.graphs import Digraph, GraphError, acc_witnesses, is_noetherian
from hkmonoid.maps import chi, embed, f_word, sigma, tau
from hkmonoid.oracle import EQUAL, congruent, presentation_of
from hkmonoid.rewrite import is_reduced, normalize, trace_normalize
from hkmonoid.structure import boundary_sets, classify, sandwich_matrix
from hkmonoid.words import check_rank, format_word, parse_word

DEFAULT_SEED = 0


class UsageError(ValueError):
    pass


def render_json(obj) -> str:
    """Canonical JSON: sorted keys, fixed separators, no floats expected."""
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


def _word_text(w: Sequence[int], letters: bool) -> str:
    if letters:
        return format_word(w, letters=True)
    return format_word(w) if w else "1"


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} requires {', '.join(missing)}")


def _rank(args) -> int:
    _need(args, "n")
    check_rank(args.n)
    return args.n


def _index(args, n: int) -> int:
    _need(args, "i")
    if not 0 <= args.i <= n - 2:
        raise UsageError(f"--i must lie in 0..{n - 2}")
    return args.i


class Output:
    def __init__(self, args):
        self.json = args.format == "json"
        self.letters = args.letters

    def word(self, w) -> str:
        return _word_text(w, self.letters)

    def emit(self, doc: dict, lines: Sequence[str]) -> None:
        if self.json:
            print(render_json(doc))
        else:
            print("\n".join(lines))


def cmd_normalize(args, out: Output) -> int:
    n = _rank(args)
    _need(args, "word")
    w = parse_word(args.word, n)
    nf, steps = trace_normalize(n, w)
    if nf != normalize(n, w):
        raise AssertionError("traced and fast normal forms differ")
    doc = {"n": n, "input": list(w), "normal_form": list(nf)}
    lines = [out.word(nf)]
    if args.trace:
        doc["trace"] = [str(s) for s in steps]
        lines = [str(s) for s in steps] + lines
    out.emit(doc, lines)
    return 0


def cmd_equal(args, out: Output) -> int:
    n = _rank(args)
    _need(args, "u", "v")
    u, v = parse_word(args.u, n), parse_word(args.v, n)
    nu, nv = normalize(n, u), normalize(n, v)
    same = nu == nv
    out.emit({"n": n, "u": list(nu), "v": list(nv), "equal": same},
             [f"{out.word(nu)} {'=' if same else '!='} {out.word(nv)}", "yes" if same else "no"])
    return 0 if same else 1


def cmd_classify(args, out: Output) -> int:
    n = _rank(args)
    _need(args, "word")
    w = parse_word(args.word, n)
    cls = classify(n, w)
    if cls is None:
        out.emit({"n": n, "word": list(w), "class": "exceptional"}, ["exceptional"])
    else:
        out.emit({"n": n, "word": list(w), "class": "matrix", **cls.to_json()},
                 [f"M_{cls.i}: a={out.word(cls.a)} k={cls.k} b={out.word(cls.b)}"])
    return 0


def cmd_sets(args, out: Output) -> int:
    n = _rank(args)
    i = _index(args, n)
    sets = boundary_sets(n, i)
    out.emit(sets.to_json(), [
        f"A_{i} ({len(sets.A)}): " + ", ".join(out.word(a) for a in sets.A),
        f"B_{i} ({len(sets.B)}): " + ", ".join(out.word(b) for b in sets.B),
    ])
    return 0


def cmd_sandwich(args, out: Output) -> int:
    n = _rank(args)
    i = _index(args, n)
    m = sandwich_matrix(n, i)
    lines = [f"P_{i} for n={n} (rows are chi_{i} of the columns)", m.render(out.letters),
             f"det = {m.det()}"]
    known = fixtures.SANDWICH.get(n, {}).get(i)
    if known is not None:
        listed = m.reordered(known.rows, known.cols)
        lines += ["", "listed order", listed.render(out.letters), f"det = {listed.det()}"]
    out.emit(m.to_json(), lines)
    return 0


def cmd_fmap(args, out: Output) -> int:
    n = _rank(args)
    _need(args, "word")
    h = f_word(n, parse_word(args.word, n))
    doc = h.to_json()
    terms = [f"m{s}" + (f"+{c}" if c else "") for s, c in zip(h.src, h.shift)]
    out.emit(doc, [f"({', '.join(terms)})", f"support {sorted(h.support())}"])
    return 0


def _load_graph(args) -> Digraph:
    _need(args, "graph")
    try:
        return Digraph.load(args.graph)
    except OSError as exc:
        raise UsageError(f"cannot read graph: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"graph file is not JSON: {exc}") from None


def cmd_noetherian(args, out: Output) -> int:
    report = is_noetherian(_load_graph(args))
    lines = [report.verdict] + [f"  {comp}: {cls}" for comp, cls in report.components]
    if report.reason:
        lines.append(f"  {report.reason}")
    out.emit(report.to_json(), lines)
    return {"yes": 0, "no": 1}.get(report.verdict, 2)


def cmd_witnesses(args, out: Output) -> int:
    n = _rank(args)
    k = args.k if args.k is not None else 3
    ws, vs = acc_witnesses(n, k)

    def show(w):
        return " ".join("y" if g == n + 1 else str(g) for g in w)

    lines = [f"w_{m} = {show(w)}" for m, w in enumerate(ws, 1)]
    lines += [f"v_{m} = {show(v)}" for m, v in enumerate(vs, 1)]
    out.emit({"n": n, "k": k, "y": n + 1, "w": [list(w) for w in ws], "v": [list(v) for v in vs]}, lines)
    return 0


def cmd_enumerate(args, out: Output) -> int:
    n = _rank(args)
    L = args.max_len if args.max_len is not None else 8
    dumped: List[str] = []
    report = enumerate_reduced(n, L, dump=(lambda w: dumped.append(out.word(w))) if args.dump else None)
    doc = report.to_json()
    lines = [f"length {k}: {c}" for k, c in enumerate(report.counts)]
    lines.append(f"total {report.cumulative[-1]}; period {report.period}")
    if args.dump:
        doc["words"] = dumped
        lines += dumped
    out.emit(doc, lines)
    return 0


def cmd_exceptional(args, out: Output) -> int:
    n = _rank(args)
    words = exceptional_set(n)
    longest = max(map(len, words))
    bound = exceptional_bound(n)
    doc = {"n": n, "count": len(words), "max_length": longest,
           "bound": [bound.numerator, bound.denominator], "words": [list(w) for w in words]}
    out.emit(doc, [f"{len(words)} exceptional elements, longest {longest}, bound {bound}"]
             + [out.word(w) for w in words])
    return 0


def cmd_oracle(args, out: Output) -> int:
    g = _load_graph(args)
    _need(args, "u", "v")
    p = presentation_of(g)
    u, v = parse_word(args.u, p.m), parse_word(args.v, p.m)
    res = congruent(p, u, v, args.slack, args.budget)
    out.emit({"u": list(u), "v": list(v), "slack": args.slack, "budget": args.budget, "result": res}, [res])
    return 0 if res == EQUAL else 1


def cmd_verify(args, out: Output) -> int:
    n = _rank(args)
    checks = [args.check] if args.check else None
    if args.check and args.check not in CHECKS:
        raise UsageError(f"unknown check {args.check!r}; choose from {', '.join(sorted(CHECKS))}")
    limits = None
    if args.max_len is not None:
        limits = {k: min(v, args.max_len) if v else v for k, v in default_limits(n).items()}
    report = run_suite(n, limits, checks, seed=args.seed)
    doc = report.to_json()
    doc["seed"] = args.seed
    lines = [f"seed {args.seed}"]
    for name, res in sorted(report.checks.items()):
        extra = f" counterexample: {res.counterexample}" if res.counterexample else ""
        lines.append(f"{res.status.upper():4} {name}: {res.detail}{extra}")
    out.emit(doc, lines)
    return 0 if report.ok else 1


def cmd_embed(args, out: Output) -> int:
    n = _rank(args)
    _need(args, "word")
    if n < 4:
        raise UsageError("embedding needs n >= 4 (source cycle of length n - 1 >= 3)")
    w = parse_word(args.word, n - 1)
    img = embed(n, w)
    reduced_in = is_reduced(n - 1, w)
    reduced_out = is_reduced(n, img)
    out.emit({"n": n, "word": list(w), "image": list(img), "source_reduced": reduced_in,
              "image_reduced": reduced_out},
             [out.word(img), f"reduced: {reduced_in} -> {reduced_out}"])
    return 0


def cmd_morphism(args, out: Output) -> int:
    n = _rank(args)
    _need(args, "word")
    w = parse_word(args.word, n)
    kind = args.kind
    if kind == "tau":
        raw = tau(n, w)
    elif kind == "sigma":
        raw = sigma(n, w, args.m)
    else:
        raw = chi(n, _index(args, n), w)
    nf = normalize(n, raw)
    out.emit({"n": n, "kind": kind, "word": list(w), "image": list(raw), "normal_form": list(nf)},
             [f"{out.word(raw)}", f"normal form {out.word(nf)}"])
    return 0


COMMANDS = {
    "normalize": cmd_normalize,
    "equal": cmd_equal,
    "classify": cmd_classify,
    "sets": cmd_sets,
    "sandwich": cmd_sandwich,
    "fmap": cmd_fmap,
    "noetherian": cmd_noetherian,
    "witnesses": cmd_witnesses,
    "enumerate": cmd_enumerate,
    "exceptional": cmd_exceptional,
    "oracle-check": cmd_oracle,
    "verify": cmd_verify,
    "embed": cmd_embed,
    "morphism": cmd_morphism,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--i", type=int)
    common.add_argument("--word")
    common.add_argument("--u")
    common.add_argument("--v")
    common.add_argument("--graph")
    common.add_argument("--max-len", type=int)
    common.add_argument("--slack", type=int, default=3)
    common.add_argument("--budget", type=int, default=2_000_000)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--letters", action="store_true", help="render 1, 2, 3, ... as a, b, c, ...")
    common.add_argument("--trace", action="store_true")
    common.add_argument("--dump", action="store_true")
    common.add_argument("--check")
    common.add_argument("--k", type=int)
    common.add_argument("--kind", choices=("tau", "sigma", "chi"), default="tau")
    common.add_argument("--m", type=int, default=1, help="shift for sigma")

    parser = argparse.ArgumentParser(prog="hkmonoid", description="Hecke-Kiselman monoid workbench")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args)
    if args.letters and args.n is not None and args.n > 26:
        args.letters = False
        out.letters = False
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal assertion: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
