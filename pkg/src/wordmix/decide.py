"""Top-level decisions: is M(w1,...,wk) infinite, and do two lists agree.

Both procedures stream the traces of the de Bruijn graph whose dimension
is the longest parameter word. Finiteness early-exits on the first trace
whose balance and pumping systems are both feasible; equivalence must
exhaust the traces, refuting every negation branch, before it may answer
Equal. Caps and solver budgets surface as an Unknown verdict, never as a
silently weakened answer.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .debruijn import (DEFAULT_MAX_VERTICES, DeBruijnGraph, build,
                       word_of_walk)
from .decomp import comp
from .errors import BudgetExceededError, CapExceededError
from .linarith import (DEFAULT_NODE_BUDGET, build_balance_system,
                       build_psi_branches, build_pumping_system,
                       homogeneous_nontrivial, solve_system)
from .traces import (DEFAULT_MAX_CYCLES, DEFAULT_MAX_CYCLES_PER_TRACE,
                     DEFAULT_MAX_TRACES, OrderedTrace, enumerate_traces)
from .words import ParamList, Word, is_member, word_to_str


@dataclass(frozen=True)
class Caps:
    max_vertices: int = DEFAULT_MAX_VERTICES
    max_cycles_per_trace: int = DEFAULT_MAX_CYCLES_PER_TRACE
    max_traces: int = DEFAULT_MAX_TRACES
    max_cycles: int = DEFAULT_MAX_CYCLES
    node_budget: int = DEFAULT_NODE_BUDGET


DEFAULT_CAPS = Caps()


@dataclass(frozen=True)
class FinitenessCertificate:
    """A trace with multiplicities proving the language infinite.

    x solves the balance system (all occurrence components equal, every
    cycle used at least once); y the pumping system (a nonzero repeatable
    increment that keeps the components equal).
    """

    trace: OrderedTrace
    x: tuple[int, ...]
    y: tuple[int, ...]


@dataclass(frozen=True)
class FinitenessVerdict:
    verdict: str  # "infinite" | "finite" | "unknown"
    certificate: FinitenessCertificate | None
    traces_checked: int
    cap: str | None = None

    def to_json_dict(self, p: ParamList, elapsed_ms: float) -> dict:
        cert = None
        if self.certificate is not None:
            g = _graph_for(p)
            c = self.certificate
            cert = {
                "trace": _trace_json(g, c.trace),
                "x": list(c.x),
                "y": list(c.y),
            }
        elif self.cap is not None:
            cert = {"cap": self.cap}
        return {
            "verdict": self.verdict,
            "certificate": cert,
            "stats": {"traces_checked": self.traces_checked,
                      "elapsed_ms": elapsed_ms},
        }


@dataclass(frozen=True)
class EquivalenceVerdict:
    verdict: str  # "equal" | "not_equal" | "unknown"
    witness: Word | None
    member_of: int | None  # 1 or 2: which list's language contains it
    traces_checked: int
    cap: str | None = None

    def to_json_dict(self, elapsed_ms: float) -> dict:
        cert = None
        if self.witness is not None:
            cert = {"witness_word": word_to_str(self.witness),
                    "member_of": self.member_of}
        elif self.cap is not None:
            cert = {"cap": self.cap}
        return {
            "verdict": self.verdict,
            "certificate": cert,
            "stats": {"traces_checked": self.traces_checked,
                      "elapsed_ms": elapsed_ms},
        }


def _graph_for(p: ParamList, dim: int | None = None,
               max_vertices: int = DEFAULT_MAX_VERTICES) -> DeBruijnGraph:
    return build(p.alphabet, dim if dim is not None else p.max_len,
                 max_vertices=max_vertices)


def _trace_json(g: DeBruijnGraph, T: OrderedTrace) -> dict:
    def word(v):
        return word_to_str(g.vertex_word(v))

    return {"path": [word(v) for v in T.path],
            "cycles": [[word(v) for v in cyc] for cyc in T.cycles]}


def check_trace(T: OrderedTrace, p: ParamList, *,
                node_budget: int = DEFAULT_NODE_BUDGET
                ) -> FinitenessCertificate | None:
    """Certificate for T if it satisfies both conditions, else None.

    The pumping test is a rational feasibility question and runs first;
    the balance test is the integer one and only runs when pumping holds.
    """
    m = len(T.cycles)
    if m == 0:
        return None
    pump = homogeneous_nontrivial(build_pumping_system(T, p), m)
    if not pump.feasible:
        return None
    balance = solve_system(build_balance_system(T, p),
                           node_budget=node_budget)
    if not balance.feasible:
        return None
    return FinitenessCertificate(T, balance.witness, pump.witness)


def decide_finiteness(p: ParamList,
                      caps: Caps = DEFAULT_CAPS) -> FinitenessVerdict:
    """Infinite with a certificate, Finite after exhausting all traces,
    or Unknown when a cap or budget interfered."""
    g = _graph_for(p, max_vertices=caps.max_vertices)
    checked = 0
    budget_hit: str | None = None
    gen = enumerate_traces(g,
                           max_cycles_per_trace=caps.max_cycles_per_trace,
                           max_traces=caps.max_traces,
                           max_cycles=caps.max_cycles)
    while True:
        try:
            T = next(gen)
        except StopIteration:
            if budget_hit is not None:
                return FinitenessVerdict("unknown", None, checked,
                                         cap=budget_hit)
            return FinitenessVerdict("finite", None, checked)
        except CapExceededError as e:
            return FinitenessVerdict("unknown", None, checked, cap=str(e))
        checked += 1
        try:
            cert = check_trace(T, p, node_budget=caps.node_budget)
        except BudgetExceededError as e:
            # this trace stays undecided; keep hunting for a certificate,
            # but a later exhaustion can no longer claim Finite
            budget_hit = str(e)
            continue
        if cert is not None:
            return FinitenessVerdict("infinite", cert, checked)


def realize_walk(g: DeBruijnGraph, T: OrderedTrace, exponents):
    """comp of the trace with each cycle repeated exponents[i] times."""
    if len(exponents) != len(T.cycles):
        raise ValueError("one exponent per cycle required")
    if any(e < 1 for e in exponents):
        raise ValueError("exponents must be >= 1")
    repeated = []
    for cyc, e in zip(T.cycles, exponents):
        repeated.extend([cyc] * e)
    return comp(g, T.path, tuple(repeated))


def witness_family(cert: FinitenessCertificate, p: ParamList,
                   n: int) -> Word:
    """The n-th member of the pumped family for an Infinite certificate.

    n = 0 and n = 1 both give the balance word; each further step adds
    the pumping increment y, so lengths grow strictly from n = 1 on.
    Membership is re-checked by direct counting before returning.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    g = _graph_for(p)
    exponents = [x + max(n - 1, 0) * y for x, y in zip(cert.x, cert.y)]
    walk = realize_walk(g, cert.trace, exponents)
    word = word_of_walk(g, walk)
    assert is_member(word, p), "pumped word failed the membership re-check"
    return word


def canonical_certificate(candidates):
    """Deterministic pick: the candidate with the least enumeration rank.

    candidates: iterable of (rank, payload) pairs, e.g. collected from
    parallel trace checks. Input order does not matter.
    """
    best = None
    for rank, payload in candidates:
        if best is None or rank < best[0]:
            best = (rank, payload)
    if best is None:
        raise ValueError("no candidates")
    return best[1]


def decide_equivalence(p1: ParamList, p2: ParamList,
                       caps: Caps = DEFAULT_CAPS) -> EquivalenceVerdict:
    """Equal, NotEqual with a distinguishing word, or Unknown.

    Phase 1 compares memberships on every word shorter than the graph
    dimension. Phase 2 streams traces and tries to refute the per-trace
    agreement; any feasible negation branch is turned into a concrete
    word and re-validated before it is believed.
    """
    if p1.alphabet != p2.alphabet:
        raise ValueError("parameter lists must share an alphabet")
    dim = max(p1.max_len, p2.max_len)
    g = _graph_for(p1, dim, max_vertices=caps.max_vertices)

    for w in p1.alphabet.words_shorter_than(dim):
        in1 = is_member(w, p1)
        in2 = is_member(w, p2)
        if in1 != in2:
            return EquivalenceVerdict("not_equal", w, 1 if in1 else 2, 0)

    checked = 0
    budget_hit: str | None = None
    gen = enumerate_traces(g,
                           max_cycles_per_trace=caps.max_cycles_per_trace,
                           max_traces=caps.max_traces,
                           max_cycles=caps.max_cycles)
    while True:
        try:
            T = next(gen)
        except StopIteration:
            if budget_hit is not None:
                return EquivalenceVerdict("unknown", None, None, checked,
                                          cap=budget_hit)
            return EquivalenceVerdict("equal", None, None, checked)
        except CapExceededError as e:
            return EquivalenceVerdict("unknown", None, None, checked,
                                      cap=str(e))
        checked += 1
        for branch in build_psi_branches(T, p1, p2):
            try:
                result = solve_system(branch, node_budget=caps.node_budget)
            except BudgetExceededError as e:
                budget_hit = str(e)
                continue
            if not result.feasible:
                continue
            walk = realize_walk(g, T, result.witness)
            word = word_of_walk(g, walk)
            in1 = is_member(word, p1)
            in2 = is_member(word, p2)
            if in1 == in2:
                raise AssertionError(
                    f"branch witness {word_to_str(word)} does not separate "
                    f"the languages (branch {branch.label!r})")
            return EquivalenceVerdict("not_equal", word, 1 if in1 else 2,
                                      checked)


def timed(fn, *args, **kwargs):
    """Run fn, returning (result, elapsed milliseconds)."""
    t0 = time.perf_counter()
    result = fn(*args, **kwargs)
    return result, (time.perf_counter() - t0) * 1000.0
