"""Command-line front end: ``raag <subcommand> --graph <file-or-name> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from . import graph as graphs
from .errors import (
    BudgetExceeded, GraphFormatError, InvariantViolation, PreconditionError,
    UnknownVertexError, WordSyntaxError,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _Report:
    """Collects records and writes them as text or json-lines."""

    def __init__(self, fmt: str, out):
        self.fmt = fmt
        self.out = out
        self.failed = False

    def header(self, fields: dict):
        if self.fmt == "json-lines":
            self.out.write(json.dumps({"header": fields}, sort_keys=True) + "\n")
        else:
            self.out.write("# " + " ".join(f"{k}={v}" for k, v in fields.items()) + "\n")

    def value(self, key: str, value, instance: str = ""):
        if self.fmt == "json-lines":
            rec = {"check": key, "instance": instance, "expected": None,
                   "actual": _plain(value), "status": "computed", "provenance": "direct"}
            self.out.write(json.dumps(rec, sort_keys=True) + "\n")
        else:
            self.out.write(f"{key}: {_text(value)}\n")

    def record(self, rec):
        d = rec.as_dict()
        if d["status"] != "pass":
            self.failed = True
        if self.fmt == "json-lines":
            self.out.write(json.dumps(d, sort_keys=True) + "\n")
        else:
            line = f"{d['status'].upper():4} {d['check']} [{d['instance']}]"
            if d["status"] != "pass":
                line += f" expected={d['expected']} actual={d['actual']}"
            self.out.write(line + "\n")


def _plain(x):
    if isinstance(x, (bool, int, str, float)) or x is None:
        return x
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    return str(x)


def _text(x):
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(_text(y) for y in x) + "]"
    return str(x)


def _load_graph(spec: str):
    if spec in graphs.bundled_names():
        return graphs.bundled(spec), spec
    path = Path(spec)
    if not path.exists():
        raise GraphFormatError(f"no graph file or bundled graph named {spec!r}")
    return graphs.DefiningGraph.load(path), str(path)


def _elem(graph, text: str, label: str):
    from .element import Element

    try:
        return Element.parse(graph, text)
    except WordSyntaxError as exc:
        raise WordSyntaxError(f"{label}: {exc.message}", exc.position) from None


def _common(top: bool) -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand; the copies on
    # the subcommands must not reset values given before it
    def d(value):
        return value if top else argparse.SUPPRESS

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", default=d(None),
                        help="graph file or bundled name (Pbar4, Pbar5, Pbar6, C5)")
    common.add_argument("--seed", type=int, default=d(0), help="random seed (default 0)")
    common.add_argument("--format", choices=["text", "json-lines"], default=d("text"))
    common.add_argument("--oracle", action="store_true", default=d(False), help=argparse.SUPPRESS)
    return common


def _build_parser() -> argparse.ArgumentParser:
    common = _common(top=False)
    p = argparse.ArgumentParser(prog="raag", description="Right-angled Artin group toolkit.",
                                parents=[_common(top=True)])
    p.add_argument("--version", action="version", version=f"raag {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def cmd(name, help_text):
        return sub.add_parser(name, help=help_text, parents=[common])

    c = cmd("reduce", "canonical reduced form and length of a word")
    c.add_argument("word")
    c = cmd("mult", "product of words")
    c.add_argument("words", nargs="+")
    for name in ("gcd", "lcm"):
        c = cmd(name, f"{name} in the prefix (left) or suffix (right) order")
        c.add_argument("a")
        c.add_argument("b")
        c.add_argument("--side", choices=["left", "right"], default="left")
    c = cmd("cyclic-reduce", "cyclically reduced conjugate and conjugator")
    c.add_argument("word")
    c = cmd("conjugate-test", "decide conjugacy and give a conjugator")
    c.add_argument("a")
    c.add_argument("b")
    c = cmd("star-length", "star length and a minimal star decomposition")
    c.add_argument("word")
    c = cmd("classify", "split / non_split / strongly_non_split")
    c.add_argument("word")
    c = cmd("tau-bounds", "certified bounds on the stable star length")
    c.add_argument("word")
    c.add_argument("--max-power", type=int, default=12)
    c = cmd("power-prefix", "decompose a prefix u of a power of g")
    c.add_argument("g")
    c.add_argument("u")
    c.add_argument("--power", type=int, required=True, help="upper bound m with u <= g^m")
    c = cmd("quasi-root", "extract a quasi-root decomposition of w from g")
    c.add_argument("g")
    c.add_argument("w")
    c.add_argument("-r", type=int, required=True)
    c.add_argument("-R", type=int, required=True)
    c.add_argument("--side", choices=["left", "right"], default="left")
    c = cmd("constants", "acylindricity constants (R, N)")
    c.add_argument("--space", choices=["star", "egraph"], default="star")
    c.add_argument("-r", type=int, required=True)
    c = cmd("xi", "quasi-stabilizer members up to a word-length cap")
    c.add_argument("x")
    c.add_argument("y")
    c.add_argument("-r", type=int, required=True)
    c.add_argument("--cap", type=int, default=4)
    c = cmd("xi-structure", "certified structure of the quasi-stabilizer")
    c.add_argument("x")
    c.add_argument("y")
    c.add_argument("-r", type=int, required=True)
    c.add_argument("--member", required=True, help="a nontrivial member to start from")
    c = cmd("egraph-ball", "truncated extension graph ball")
    c.add_argument("--max-conj", type=int, required=True, help="conjugator length bound L")
    c.add_argument("--ceiling", type=int, default=200_000)
    c.add_argument("--export", help="write the ball to this file")
    c.add_argument("--samples", type=int, default=0, help="quasi-isometry samples to check")
    cmd("paper-examples", "run every worked example")
    c = cmd("verify", "run the seeded invariant suite")
    c.add_argument("--budget", type=int, default=3, help="element length budget")
    c.add_argument("--samples", type=int, default=50)
    return p


def _run(args, rep: _Report) -> int:
    from .element import Element

    needs_graph = args.command not in ("paper-examples", "verify")
    graph = None
    header = {"command": args.command}
    if args.graph or needs_graph:
        if not args.graph:
            raise GraphFormatError("--graph is required for this command")
        graph, label = _load_graph(args.graph)
        header.update(graph=label, fingerprint=graph.fingerprint())
    header["seed"] = args.seed
    for k, v in sorted(vars(args).items()):
        if k not in ("command", "graph", "seed", "format", "oracle") and v is not None:
            header[k] = v
    rep.header(header)
    cmd = args.command

    if cmd == "reduce":
        g = _elem(graph, args.word, "word")
        rep.value("canonical", g)
        rep.value("length", len(g))
        if args.oracle:
            from .oracle import Oracle

            o = Oracle(graph)
            w = o.from_codes(_raw_codes(graph, args.word))
            rep.value("oracle_length", o.word_length(w))
            rep.value("oracle_agrees", o.to_codes(o.canonical(w)) == g.word)
    elif cmd == "mult":
        out = Element.identity(graph)
        for i, w in enumerate(args.words):
            out = out * _elem(graph, w, f"word {i + 1}")
        rep.value("product", out)
        rep.value("length", len(out))
    elif cmd in ("gcd", "lcm"):
        from . import lattice

        a, b = _elem(graph, args.a, "a"), _elem(graph, args.b, "b")
        if cmd == "gcd":
            f = lattice.gcd_left if args.side == "left" else lattice.gcd_right
            rep.value("gcd", f(a, b))
            if args.oracle and args.side == "left":
                from .oracle import Oracle

                o = Oracle(graph)
                q = o.gcd_prefixes(o.from_codes(a.word), o.from_codes(b.word))
                rep.value("oracle_agrees", o.to_codes(q) == lattice.gcd_left(a, b).word)
        else:
            f = lattice.lcm_left if args.side == "left" else lattice.lcm_right
            res = f(a, b)
            rep.value("exists", res.exists)
            if res.exists:
                rep.value("lcm", res.value)
    elif cmd == "cyclic-reduce":
        from .conjugation import cyclic_reduce

        cr = cyclic_reduce(_elem(graph, args.word, "word"))
        rep.value("core", cr.core)
        rep.value("conjugator", cr.conjugator)
    elif cmd == "conjugate-test":
        from .conjugation import conjugating_element

        a, b = _elem(graph, args.a, "a"), _elem(graph, args.b, "b")
        c = conjugating_element(a, b)
        rep.value("conjugate", c is not None)
        if c is not None:
            rep.value("conjugator", c)
        if args.oracle:
            from .oracle import Oracle

            o = Oracle(graph)
            found, _ = o.conjugate(o.from_codes(a.word), o.from_codes(b.word), 3)
            rep.value("oracle_within_cap_3", "conjugate" if found else "none found (inconclusive beyond cap)")
    elif cmd == "star-length":
        from .star import star_decompose, star_length

        g = _elem(graph, args.word, "word")
        rep.value("star_length", star_length(g))
        rep.value("decomposition", [f"{f} in St({v})" for f, v in star_decompose(g).factors])
        if args.oracle:
            from .oracle import Oracle

            o = Oracle(graph)
            rep.value("oracle_star_length", o.star_length(o.from_codes(g.word)))
    elif cmd == "classify":
        from .star import classify

        c = classify(_elem(graph, args.word, "word"))
        rep.value("class", c.kind)
        if c.partition:
            rep.value("partition", [sorted(p) for p in c.partition])
        if c.witness:
            rep.value("witness", c.witness)
    elif cmd == "tau-bounds":
        from .star import star_profile, translation_length_bounds

        g = _elem(graph, args.word, "word")
        lo, hi = translation_length_bounds(g, args.max_power)
        rep.value("star_lengths", star_profile(g, args.max_power)[1:])
        rep.value("lower", lo)
        rep.value("upper", hi)
    elif cmd == "power-prefix":
        from .powers import power_prefix_decompose

        g, u = _elem(graph, args.g, "g"), _elem(graph, args.u, "u")
        d = power_prefix_decompose(g, u, args.power)
        rep.value("m", d.m)
        rep.value("parts", [f"g_{d.m - i} = {p}" for i, p in enumerate(d.parts)])
        rep.value("ladder_a", list(d.ladder.a))
        rep.value("complement", d.complement)
    elif cmd == "quasi-root":
        from .quasiroot import extract_quasi_root
        from .star import star_length

        g, w = _elem(graph, args.g, "g"), _elem(graph, args.w, "w")
        d = extract_quasi_root(g, w, args.r, args.R, args.side)
        rep.value("a", d.a)
        rep.value("root", d.root)
        rep.value("epsilon", d.epsilon)
        rep.value("n", d.n)
        rep.value("b", d.b)
        rep.value("star_lengths_a_b_ab", [star_length(d.a), star_length(d.b), star_length(d.a * d.b)])
    elif cmd == "constants":
        from .stabilizer import acylindricity_constants

        R, N = acylindricity_constants(graph, args.r, args.space)
        if rep.fmt == "text":
            rep.out.write(f"R={R} N={N}\n")
        else:
            rep.value("R", R)
            rep.value("N", N)
    elif cmd == "xi":
        from .stabilizer import xi_brute_force

        x, y = _elem(graph, args.x, "x"), _elem(graph, args.y, "y")
        members = sorted(xi_brute_force(x, y, args.r, args.cap))
        rep.value("members_up_to_cap", [str(m) for m in members])
        rep.value("count", len(members))
        rep.value("note", "subset of the full quasi-stabilizer")
    elif cmd == "xi-structure":
        from .stabilizer import xi_structure

        x, y = _elem(graph, args.x, "x"), _elem(graph, args.y, "y")
        res = xi_structure(x, y, args.r, _elem(graph, args.member, "member"))
        rep.value("generator", res.generator)
        rep.value("k", res.k)
        rep.value("member_count", len(res.members))
        rep.value("certified", res.certified)
        rep.value("hausdorff_witness", list(res.hausdorff_witness))
    elif cmd == "egraph-ball":
        from .egraph import build_ball, check_quasi_isometry, export_ball, sample_conjugators

        ball = build_ball(graph, args.max_conj, args.ceiling)
        rep.value("vertices", len(ball.vertices))
        rep.value("edges", len(ball.edges))
        if args.samples:
            qi = check_quasi_isometry(graph, args.max_conj,
                                      sample_conjugators(graph, args.max_conj, args.samples, args.seed), ball)
            rep.value("lower_bound_violations", len(qi.lower_violations))
            rep.value("upper_bound_rate", f"{qi.upper_rate:.4f}")
            rep.failed = bool(qi.lower_violations)
        if args.export:
            Path(args.export).write_text(export_ball(ball))
            rep.value("exported", args.export)
    elif cmd == "paper-examples":
        from .experiments import worked_example_checks

        for r in worked_example_checks():
            rep.record(r)
    elif cmd == "verify":
        from .experiments import invariant_checks

        for r in invariant_checks(args.budget, args.samples, args.seed):
            rep.record(r)
    return EXIT_FAIL if rep.failed else EXIT_OK


def _raw_codes(graph, text):
    from .element import parse_codes

    return parse_codes(graph, text)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    rep = _Report(args.format, sys.stdout)
    try:
        return _run(args, rep)
    except (WordSyntaxError, UnknownVertexError, GraphFormatError, PreconditionError) as exc:
        print(f"raag: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"raag: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantViolation as exc:
        print(f"raag: verification failure: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
