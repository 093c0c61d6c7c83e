"""Command line front end: decisions, witnesses, enumeration, export.

Exit codes: 0 for a decided positive answer (infinite / equal / member),
1 for a decided negative one, 2 for unknown (a cap or budget got in the
way), 64 for usage errors. Finiteness early-exits on the first
certifying trace; equivalence must exhaust every trace of the graph
before it may answer "equal".
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import islice

from .debruijn import DEFAULT_MAX_VERTICES, build, to_dot, walk_of_word
from .decide import (Caps, decide_equivalence, decide_finiteness, timed,
                     witness_family)
from .decomp import dec
from .errors import BudgetExceededError, DimensionCapError
from .linarith import (DEFAULT_NODE_BUDGET, build_balance_system,
                       build_psi_branches, build_pumping_system)
from .oracle import DEFAULT_WORD_BUDGET, census, enumerate_members
from .traces import (DEFAULT_MAX_CYCLES_PER_TRACE, DEFAULT_MAX_TRACES,
                     enumerate_traces)
from .words import (Alphabet, ParamList, is_member, occ_vector,
                    word_from_str, word_to_str)

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures remapped onto exit code 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse_alphabet(text: str) -> Alphabet:
    parts = text.split(",") if "," in text else list(text)
    if any(len(s) != 1 for s in parts):
        raise ValueError(
            f"alphabet symbols must be single characters, got {text!r}")
    return Alphabet(tuple(parts))


def _parse_words(alphabet: Alphabet, text: str) -> ParamList:
    return ParamList(alphabet, tuple(word_from_str(s)
                                     for s in text.split(",")))


def _caps_from(args) -> Caps:
    return Caps(max_vertices=args.max_vertices,
                max_cycles_per_trace=args.max_cycles_per_trace,
                max_traces=args.max_traces,
                node_budget=args.solver_budget)


def _add_cap_flags(sub) -> None:
    sub.add_argument("--max-vertices", type=int,
                     default=DEFAULT_MAX_VERTICES,
                     help="graph size cap (vertices)")
    sub.add_argument("--max-traces", type=int, default=DEFAULT_MAX_TRACES,
                     help="stop after enumerating this many traces")
    sub.add_argument("--max-cycles-per-trace", type=int,
                     default=DEFAULT_MAX_CYCLES_PER_TRACE,
                     help="largest cycle-set size considered per trace")
    sub.add_argument("--solver-budget", type=int,
                     default=DEFAULT_NODE_BUDGET,
                     help="node budget for the integer solver")


def _fmt_walk(g, walk) -> str:
    return " -> ".join(word_to_str(g.vertex_word(v)) for v in walk)


def _trace_words(g, T) -> dict:
    return {"path": [word_to_str(g.vertex_word(v)) for v in T.path],
            "cycles": [[word_to_str(g.vertex_word(v)) for v in cyc]
                       for cyc in T.cycles]}


def _build_parser() -> _Parser:
    parser = _Parser(prog="wordmix",
                     description="Decision procedures for languages of "
                                 "balanced subword occurrences.")
    subs = parser.add_subparsers(dest="command", required=True)

    finite = subs.add_parser(
        "finite",
        help="decide whether M(w1,...,wk) is infinite",
        description="Streams the traces of the de Bruijn graph and "
                    "early-exits on the first one whose balance and "
                    "pumping systems are both feasible.")
    finite.add_argument("--alphabet", required=True)
    finite.add_argument("words", help="comma-separated parameter words")
    finite.add_argument("--json", action="store_true")
    finite.add_argument("--dump-systems", action="store_true",
                        help="print the linear systems of every checked "
                             "trace as JSON lines before the verdict")
    _add_cap_flags(finite)
    finite.set_defaults(func=_cmd_finite)

    equiv = subs.add_parser(
        "equiv",
        help="decide whether two parameter lists define the same language",
        description="Unlike finite, this cannot early-exit on success: "
                    "it must exhaust every trace of the graph before "
                    "answering equal. A distinguishing word is reported "
                    "otherwise.")
    equiv.add_argument("--alphabet", required=True)
    equiv.add_argument("list1", help="first comma-separated word list")
    equiv.add_argument("list2", help="second list (separate with --)")
    equiv.add_argument("--json", action="store_true")
    equiv.add_argument("--dump-systems", action="store_true",
                       help="print the negation branches of every checked "
                            "trace as JSON lines before the verdict")
    _add_cap_flags(equiv)
    equiv.set_defaults(func=_cmd_equiv)

    member = subs.add_parser(
        "member", help="test whether a word is in M(w1,...,wk)")
    member.add_argument("--alphabet", required=True)
    member.add_argument("words", help="comma-separated parameter words")
    member.add_argument("word", help="the word to test (may be empty)")
    member.add_argument("--json", action="store_true")
    member.set_defaults(func=_cmd_member)

    witness = subs.add_parser(
        "witness",
        help="print the n-th member of the pumped family of an "
             "infinite language")
    witness.add_argument("--alphabet", required=True)
    witness.add_argument("words", help="comma-separated parameter words")
    witness.add_argument("--n", type=int, default=1)
    witness.add_argument("--json", action="store_true")
    _add_cap_flags(witness)
    witness.set_defaults(func=_cmd_witness)

    enum = subs.add_parser(
        "enumerate",
        help="list all members up to a length bound (exhaustive)")
    enum.add_argument("--alphabet", required=True)
    enum.add_argument("words", help="comma-separated parameter words")
    enum.add_argument("--maxlen", type=int, required=True)
    enum.add_argument("--census", action="store_true",
                      help="print length,count CSV instead of the words")
    enum.add_argument("--budget", type=int, default=DEFAULT_WORD_BUDGET,
                      help="refuse to scan more words than this")
    enum.set_defaults(func=_cmd_enumerate)

    graph = subs.add_parser(
        "graph", help="describe or export the de Bruijn graph")
    graph.add_argument("--alphabet", required=True)
    graph.add_argument("--dim", type=int, required=True)
    graph.add_argument("--dot", action="store_true",
                       help="emit DOT instead of a summary")
    graph.add_argument("--word",
                       help="overlay the walk of this word, split into "
                            "its decomposition (path solid, cycles dashed)")
    graph.add_argument("--max-vertices", type=int,
                       default=DEFAULT_MAX_VERTICES)
    graph.set_defaults(func=_cmd_graph)

    return parser


# ---------------------------------------------------------------------------
# subcommand bodies


def _dump_finite_systems(p: ParamList, caps: Caps, count: int) -> None:
    g = build(p.alphabet, p.max_len, max_vertices=caps.max_vertices)
    gen = enumerate_traces(g,
                           max_cycles_per_trace=caps.max_cycles_per_trace,
                           max_traces=caps.max_traces,
                           max_cycles=caps.max_cycles)
    for T in islice(gen, count):
        entry = {"trace": _trace_words(g, T),
                 "balance": build_balance_system(T, p).to_json_dict(),
                 "pumping_rows": [list(r)
                                  for r in build_pumping_system(T, p)]}
        print(json.dumps(entry, sort_keys=True))


def _dump_equiv_systems(p1: ParamList, p2: ParamList, caps: Caps,
                        count: int) -> None:
    dim = max(p1.max_len, p2.max_len)
    g = build(p1.alphabet, dim, max_vertices=caps.max_vertices)
    gen = enumerate_traces(g,
                           max_cycles_per_trace=caps.max_cycles_per_trace,
                           max_traces=caps.max_traces,
                           max_cycles=caps.max_cycles)
    for T in islice(gen, count):
        entry = {"trace": _trace_words(g, T),
                 "branches": [b.to_json_dict()
                              for b in build_psi_branches(T, p1, p2)]}
        print(json.dumps(entry, sort_keys=True))


def _validate_finiteness_certificate(cert, p: ParamList) -> None:
    balance = build_balance_system(cert.trace, p)
    if not balance.satisfied_by(cert.x):
        raise AssertionError("balance witness failed re-validation")
    rows = build_pumping_system(cert.trace, p)
    if not any(cert.y) or any(v < 0 for v in cert.y):
        raise AssertionError("pumping witness failed re-validation")
    if any(sum(a * v for a, v in zip(row, cert.y)) != 0 for row in rows):
        raise AssertionError("pumping witness failed re-validation")


def _cmd_finite(args) -> int:
    alphabet = _parse_alphabet(args.alphabet)
    p = _parse_words(alphabet, args.words)
    caps = _caps_from(args)
    verdict, ms = timed(decide_finiteness, p, caps)
    if args.dump_systems:
        _dump_finite_systems(p, caps, verdict.traces_checked)
    if verdict.certificate is not None:
        _validate_finiteness_certificate(verdict.certificate, p)
    if args.json:
        print(json.dumps(verdict.to_json_dict(p, ms), sort_keys=True))
    elif verdict.verdict == "infinite":
        cert = verdict.certificate
        g = build(p.alphabet, p.max_len, max_vertices=caps.max_vertices)
        sample = witness_family(cert, p, 1)
        print("infinite")
        print(f"  trace path:  {_fmt_walk(g, cert.trace.path)}")
        for cyc in cert.trace.cycles:
            print(f"  trace cycle: {_fmt_walk(g, cyc)}")
        print(f"  balance x: {cert.x}")
        print(f"  pumping y: {cert.y}")
        print(f"  example member: {word_to_str(sample)!r}")
    elif verdict.verdict == "finite":
        print(f"finite (N={p.max_len}, all traces exhausted)")
    else:
        print(f"unknown ({verdict.cap})")
    return {"infinite": EXIT_TRUE, "finite": EXIT_FALSE,
            "unknown": EXIT_UNKNOWN}[verdict.verdict]


def _cmd_equiv(args) -> int:
    alphabet = _parse_alphabet(args.alphabet)
    p1 = _parse_words(alphabet, args.list1)
    p2 = _parse_words(alphabet, args.list2)
    caps = _caps_from(args)
    verdict, ms = timed(decide_equivalence, p1, p2, caps)
    if args.dump_systems:
        _dump_equiv_systems(p1, p2, caps, verdict.traces_checked)
    if verdict.witness is not None:
        in1 = is_member(verdict.witness, p1)
        in2 = is_member(verdict.witness, p2)
        if in1 == in2:
            raise AssertionError("witness word failed re-validation")
    if args.json:
        print(json.dumps(verdict.to_json_dict(ms), sort_keys=True))
    elif verdict.verdict == "equal":
        print("equal")
    elif verdict.verdict == "not_equal":
        word = word_to_str(verdict.witness)
        print(f"not equal (witness {word!r}, member of list "
              f"{verdict.member_of} only)")
    else:
        print(f"unknown ({verdict.cap})")
    return {"equal": EXIT_TRUE, "not_equal": EXIT_FALSE,
            "unknown": EXIT_UNKNOWN}[verdict.verdict]


def _cmd_member(args) -> int:
    alphabet = _parse_alphabet(args.alphabet)
    p = _parse_words(alphabet, args.words)
    w = word_from_str(args.word)
    occ, ms = timed(occ_vector, w, p)
    member = len(set(occ)) == 1
    if args.json:
        payload = {"verdict": "member" if member else "non_member",
                   "certificate": {"counts": list(occ)},
                   "stats": {"traces_checked": 0, "elapsed_ms": ms}}
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"{'member' if member else 'non-member'} (counts {occ})")
    return EXIT_TRUE if member else EXIT_FALSE


def _cmd_witness(args) -> int:
    alphabet = _parse_alphabet(args.alphabet)
    p = _parse_words(alphabet, args.words)
    if args.n < 0:
        raise ValueError("--n must be >= 0")
    caps = _caps_from(args)
    verdict, ms = timed(decide_finiteness, p, caps)
    if verdict.verdict != "infinite":
        if args.json:
            print(json.dumps(verdict.to_json_dict(p, ms), sort_keys=True))
        elif verdict.verdict == "finite":
            print(f"finite (N={p.max_len}, all traces exhausted)")
        else:
            print(f"unknown ({verdict.cap})")
        return (EXIT_FALSE if verdict.verdict == "finite"
                else EXIT_UNKNOWN)
    word = witness_family(verdict.certificate, p, args.n)
    if args.json:
        payload = {"verdict": "infinite",
                   "certificate": {"witness_word": word_to_str(word),
                                   "n": args.n},
                   "stats": {"traces_checked": verdict.traces_checked,
                             "elapsed_ms": ms}}
        print(json.dumps(payload, sort_keys=True))
    else:
        print(word_to_str(word))
    return EXIT_TRUE


def _cmd_enumerate(args) -> int:
    alphabet = _parse_alphabet(args.alphabet)
    p = _parse_words(alphabet, args.words)
    if args.maxlen < 0:
        raise ValueError("--maxlen must be >= 0")
    if args.census:
        sys.stdout.write(census(p, args.maxlen, budget=args.budget).to_csv())
    else:
        for w in enumerate_members(p, args.maxlen, budget=args.budget):
            print(word_to_str(w))
    return EXIT_TRUE


def _cmd_graph(args) -> int:
    alphabet = _parse_alphabet(args.alphabet)
    if args.dim < 1:
        raise ValueError("--dim must be >= 1")
    g = build(alphabet, args.dim, max_vertices=args.max_vertices)
    path, cycles = (), ()
    if args.word is not None:
        word = word_from_str(args.word)
        if len(word) < g.dim:
            raise ValueError(
                f"--word must be at least {g.dim} symbols long")
        walk = walk_of_word(g, word[:g.dim], word[g.dim:])
        d = dec(g, walk)
        path, cycles = d.path, d.cycles
    if args.dot:
        print(to_dot(g, path, cycles))
        return EXIT_TRUE
    symbols = ",".join(alphabet)
    print(f"D^{g.dim} over {{{symbols}}}: {g.vertex_count} vertices, "
          f"{g.edge_count} edges")
    if args.word is not None:
        print(f"  path:   {_fmt_walk(g, path)}")
        for cyc in cycles:
            print(f"  cycle:  {_fmt_walk(g, cyc)}")
    return EXIT_TRUE


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (DimensionCapError, BudgetExceededError) as e:
        print(f"unknown ({e})", file=sys.stderr)
        return EXIT_UNKNOWN


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
