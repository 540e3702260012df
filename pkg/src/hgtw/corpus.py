"""Seeded instance corpus and the verification suites the CLI exposes.

A corpus row records the instance statistics, every applicable bound and
the exactly computed widths, plus a pass flag for the bracket property
max(lower) <= tw <= min(upper).  Identical seeds give identical corpora.
"""

from __future__ import annotations

import csv
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, TextIO

from .bounds import bounds_report, envelope_grid_ok, \
    pair_budget_min_check, sandwich_ok, split_pair_budget_min_check
from .core import Hypergraph, stats
from .decomp import validate_std, validate_td
from .derive import line_graph, two_section, \
    witness_dual_is_line_graph, witness_two_section_is_dual_line_graph
from .errors import InfeasibleError
from .families import cycle_power_dual, graph_dual, path_power_dual, \
    random_linear
from .solve import exact_treewidth, supertree_width
from .transform import hypergraph_supertree_from_td, mixed_width_cap, \
    supertree_to_td


@dataclass
class CorpusInstance:
    name: str
    h: Hypergraph


def default_corpus(count: int = 100, max_n: int = 18,
                   seed: int = 2024) -> list[CorpusInstance]:
    rng = random.Random(seed)
    out: list[CorpusInstance] = []
    attempt = 0
    while len(out) < count:
        attempt += 1
        n = rng.randrange(6, max_n + 1)
        rank = rng.choice([2, 2, 3, 3, 4])
        density = rng.uniform(1.0, 1.6)
        m = max(3, min(20, int(round(n * density / (rank - 1)))))
        sub_seed = rng.randrange(2 ** 32)
        try:
            h = random_linear(n, m, rank, 2, seed=sub_seed)
        except InfeasibleError:
            continue
        out.append(CorpusInstance("rand-%03d" % len(out), h))
        if attempt > 50 * count:
            raise InfeasibleError("corpus generation stalled")
    return out


def _jsonable(x):
    if isinstance(x, Fraction):
        return {"exact": "%d/%d" % (x.numerator, x.denominator),
                "float": float(x)}
    return x


def evaluate_instance(inst: CorpusInstance,
                      solver_cap: Optional[int] = None) -> dict:
    h = inst.h
    st = stats(h)
    g = two_section(h)
    tw = exact_treewidth(g, cap=solver_cap)
    stw = supertree_width(h)
    report = bounds_report(h, exact_tw=tw.width, exact_stw=stw.width)
    row = {
        "name": inst.name,
        "n": st.n, "m": st.m,
        "rank": st.rank, "anti_rank": st.anti_rank,
        "max_degree": st.max_degree, "min_degree": st.min_degree,
        "avg_rank": _jsonable(st.avg_rank),
        "linear": st.is_linear,
        "tw": tw.width, "stw": stw.width,
        "pass": sandwich_ok(report),
    }
    for key, bound in (
            ("clique_lower", report.clique_lower),
            ("degree_ratio_lower", report.degree_ratio_lower),
            ("cover_upper", report.cover_upper),
            ("chain_lower", report.chain_lower),
            ("avg_rank_lower", report.avg_rank_lower),
            ("anti_rank_lower_deg3", report.anti_rank_lower_deg3),
            ("anti_rank_lower_deg2", report.anti_rank_lower_deg2),
            ("regular_lower", report.regular_lower),
            ("stw_rank_upper", report.stw_rank_upper)):
        row[key] = _jsonable(bound.value) if bound is not None else None
    return row


# ---------------------------------------------------------------------------
# verification suites

def suite_core(seed: int = 7, max_n: int = 8) -> list[str]:
    """Derivation identities on duals of small random simple graphs."""
    rng = random.Random(seed)
    failures = []
    produced = 0
    while produced < 40:
        n = rng.randrange(4, max_n + 1)
        p = rng.uniform(0.35, 0.8)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                 if rng.random() < p]
        from .derive import make_graph
        g = make_graph(n, edges)
        if g.n == 0 or not g.edges or min(g.degrees()) < 2:
            continue
        if len(_components_of(g)) != 1:
            continue
        produced += 1
        h = graph_dual(g)
        w1 = witness_two_section_is_dual_line_graph(h)
        w2 = witness_dual_is_line_graph(h)
        if not w1.verified:
            failures.append("2-section/line-graph witness failed on dual "
                            "of a %d-vertex graph (seed path)" % n)
        if not w2.verified:
            failures.append("dual/line-graph witness failed on dual "
                            "of a %d-vertex graph (seed path)" % n)
    return failures


def _components_of(g) -> list[set[int]]:
    seen: set[int] = set()
    comps = []
    adj = g.adjacency()
    for v in range(g.n):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(comp)
    return comps


def suite_bounds(seed: int = 2024, count: int = 100,
                 max_n: int = 18) -> tuple[list[dict], list[str]]:
    rows = []
    failures = []
    for inst in default_corpus(count=count, max_n=max_n, seed=seed):
        row = evaluate_instance(inst)
        rows.append(row)
        if not row["pass"]:
            failures.append("bound bracket violated on %s" % inst.name)
    return rows, failures


def suite_appendix(seed: int = 5, grid: int = 200,
                   triples: int = 40) -> list[str]:
    failures = []
    rng = random.Random(seed)
    for _ in range(triples):
        delta = rng.randrange(2, 6)
        Delta = rng.randrange(delta, 2 * delta * delta - 2 * delta + 1)
        s = Fraction(rng.randrange(1, 101), 200)
        if not envelope_grid_ok(s, delta, Delta, grid=grid):
            failures.append("candidate minimum beaten at s=%s d=%d D=%d"
                            % (s, delta, Delta))
    for n_prime in range(1, 7):
        for delta in range(2, 6):
            for Delta in range(delta, 6):
                ok, best, bound = pair_budget_min_check(n_prime, delta, Delta)
                if not ok:
                    failures.append(
                        "joint-profile minimum claim fails at n'=%d d=%d D=%d"
                        " (min %s < claimed %s)"
                        % (n_prime, delta, Delta, best, bound))
    for n_prime in range(1, 7):
        for n1 in range(0, n_prime + 1):
            for n2 in range(0, n_prime + 1):
                ok, best, bound = split_pair_budget_min_check(
                    n_prime, n1, n2, 5)
                if not ok:
                    failures.append(
                        "split-profile minimum claim fails at "
                        "n'=%d n1=%d n2=%d" % (n_prime, n1, n2))
    return failures


def suite_sharpness() -> list[str]:
    failures = []
    cases = [(1, 6, 2), (2, 8, 7)]
    for k, n, expect in cases:
        h = cycle_power_dual(n, k)
        tw = exact_treewidth(two_section(h)).width
        if tw != expect:
            failures.append("dual of cycle power (n=%d,k=%d): tw %d != %d"
                            % (n, k, tw, expect))
    h = cycle_power_dual(10, 2, odd_variant=True)
    if min(h.edge_sizes()) != 3:
        failures.append("odd-variant anti-rank is not 3")
    tw = exact_treewidth(two_section(h)).width
    # the odd anti-rank lower bound (s=3 -> 4) is attained exactly here
    if tw != 4:
        failures.append("odd-variant dual of cycle power: tw %d != 4" % tw)
    h = path_power_dual(10, 2)
    tw = exact_treewidth(two_section(h)).width
    if tw < 3:
        failures.append("dual of path power: tw %d < 3" % tw)
    return failures


def suite_constructions(seed: int = 2024, count: int = 25,
                        max_n: int = 14) -> list[str]:
    failures = []
    for inst in default_corpus(count=count, max_n=max_n, seed=seed):
        h = inst.h
        st = stats(h)
        g = two_section(h)
        tw = exact_treewidth(g)
        std = hypergraph_supertree_from_td(h, tw.certificate)
        problems = validate_std(h, std)
        if problems:
            failures.append("%s: built supertree invalid: %s"
                            % (inst.name, problems[0]))
        cap = (st.max_degree - 1) * (tw.width + 1) + 1
        if std.width() > cap:
            failures.append("%s: supertree width %d above cap %d"
                            % (inst.name, std.width(), cap))
        stw = supertree_width(h)
        td, _base = supertree_to_td(h, stw.certificate)
        problems = validate_td(g, td)
        if problems:
            failures.append("%s: rebuilt decomposition invalid: %s"
                            % (inst.name, problems[0]))
        if td.width() > mixed_width_cap(stw.width, st.rank) - 1:
            failures.append("%s: rebuilt width %d above the mixed cap"
                            % (inst.name, td.width()))
    return failures


SUITES = ("core", "bounds", "appendix", "sharpness", "all")


def run_suite(name: str, seed: int = 2024,
              max_n: int = 18) -> tuple[list[dict], list[str]]:
    rows: list[dict] = []
    failures: list[str] = []
    if name in ("core", "all"):
        failures += suite_core(seed=seed)
    if name in ("bounds", "all"):
        r, f = suite_bounds(seed=seed, max_n=max_n)
        rows += r
        failures += f
    if name in ("appendix", "all"):
        failures += suite_appendix(seed=seed)
    if name in ("sharpness", "all"):
        failures += suite_sharpness()
    return rows, failures


def write_csv(rows: list[dict], stream: TextIO) -> None:
    if not rows:
        return
    fields = list(rows[0].keys())
    writer = csv.DictWriter(stream, fieldnames=fields)
    writer.writeheader()
    for row in rows:
        flat = {k: (v["exact"] if isinstance(v, dict) else v)
                for k, v in row.items()}
        writer.writerow(flat)


def write_json(rows: list[dict], failures: list[str], stream: TextIO) -> None:
    json.dump({"rows": rows, "failures": failures}, stream, indent=2)
    stream.write("\n")
