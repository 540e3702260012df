"""Closed-form width bounds, their applicability rules, and the numeric
verifiers for the supporting inequalities and optimization claims.

All bound values are exact rationals.  Strict bounds ("tw > value") carry
a flag; rounded convenience values are derived, never primary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .core import Hypergraph, is_linear, is_minimal, sigma_counts, stats
from .decomp import LeafBasedDecomposition, rooted_children, validate_td
from .derive import two_section
from .errors import (
    InapplicableError,
    InvalidInputError,
    NotMinimalError,
    PreconditionFailedError,
    TooLargeError,
)


@dataclass
class BoundValue:
    value: Fraction
    strict: bool = False
    note: str = ""

    def implied_integer_lower(self) -> int:
        """Smallest integer width consistent with this lower bound."""
        if self.strict:
            return math.floor(self.value) + 1
        return math.ceil(self.value)

    def implied_integer_upper(self) -> int:
        return math.floor(self.value)


@dataclass
class BoundsReport:
    clique_lower: Optional[BoundValue] = None          # rank - 1
    degree_ratio_lower: Optional[BoundValue] = None    # stw/max_degree - 1
    cover_upper: Optional[BoundValue] = None           # rank*stw - 1
    chain_lower: Optional[BoundValue] = None           # (stw-1)/(max_degree-1) - 1
    avg_rank_lower: Optional[BoundValue] = None        # strict, branch-tagged
    avg_rank_branch: Optional[int] = None
    anti_rank_lower_deg3: Optional[BoundValue] = None  # min degree >= 3
    anti_rank_lower_deg2: Optional[BoundValue] = None  # min degree == 2
    regular_lower: Optional[BoundValue] = None         # strict; regular only
    stw_rank_upper: Optional[BoundValue] = None
    exact_tw: Optional[int] = None
    exact_stw: Optional[int] = None
    notes: list[str] = field(default_factory=list)

    def lower_bounds(self) -> list[BoundValue]:
        return [b for b in (self.clique_lower, self.degree_ratio_lower,
                            self.chain_lower, self.avg_rank_lower,
                            self.anti_rank_lower_deg3,
                            self.anti_rank_lower_deg2, self.regular_lower)
                if b is not None]

    def upper_bounds(self) -> list[BoundValue]:
        return [b for b in (self.cover_upper, self.stw_rank_upper)
                if b is not None]


# ---------------------------------------------------------------------------
# closed forms

def elementary_bounds(h: Hypergraph, stw: Optional[int] = None) -> BoundsReport:
    st = stats(h)
    report = BoundsReport()
    report.clique_lower = BoundValue(Fraction(st.rank - 1))
    if stw is not None:
        report.degree_ratio_lower = BoundValue(
            Fraction(stw, st.max_degree) - 1)
        report.cover_upper = BoundValue(Fraction(st.rank * stw - 1))
        if st.max_degree >= 2:
            report.chain_lower = BoundValue(
                Fraction(stw - 1, st.max_degree - 1) - 1)
        else:
            report.notes.append("chain lower bound needs max degree >= 2")
    else:
        report.notes.append("supertree width unknown; dependent bounds absent")
    return report


def avg_rank_lower_bound(delta: int, Delta: int,
                         l: Fraction) -> tuple[Fraction, int]:
    """Strict lower bound on the 2-section treewidth from the degree range
    and average rank; returns (value, branch)."""
    if not (Delta >= delta >= 2):
        raise InapplicableError("need max degree >= min degree >= 2")
    if Delta > 2 * delta * delta - 2 * delta:
        raise InapplicableError("max degree above 2d(d-1)")
    l = Fraction(l)
    denom = 4 * Delta * delta * (delta - 1)
    if delta * delta - delta <= Delta - Fraction(2 * Delta, l):
        num = (2 * delta * delta - 2 * delta - Delta) * l * l \
            + (2 * Delta + 4 * delta * delta - 4 * delta) * l
        return Fraction(num, denom) - 1, 1
    num = (2 * delta * delta - 2 * delta - Delta) * l * l \
        + 6 * Delta * l - 8 * Delta
    return Fraction(num, denom) - 1, 2


def regular_lower_bound(h_deg: int, l: Fraction) -> Fraction:
    """Strict lower bound for a regular linear hypergraph of degree h."""
    if h_deg < 2:
        raise InapplicableError("need degree >= 2")
    l = Fraction(l)
    return Fraction((2 * h_deg - 3) * l * l + 6 * l - 8,
                    4 * h_deg * (h_deg - 1)) - 1


def anti_rank_lower_bound_deg3(s: int) -> Fraction:
    """Lower bound for linear hypergraphs of minimum degree >= 3."""
    if s % 2 == 0:
        return Fraction(3, 8) * s * s + Fraction(3, 4) * s - 1
    return Fraction(3, 8) * s * s + Fraction(1, 2) * s - Fraction(7, 8)


def anti_rank_lower_bound_deg2(s: int) -> Fraction:
    """Lower bound for linear hypergraphs of minimum degree exactly 2."""
    if s % 2 == 0:
        return Fraction(1, 4) * s * s + s - 1
    return Fraction(1, 4) * s * s + s - Fraction(5, 4)


def stw_rank_upper_bound(stw: int, rank: int) -> Fraction:
    if stw < 1 or rank < 2:
        raise InapplicableError("need stw >= 1 and rank >= 2")
    return (Fraction(2, 3) * stw * rank + Fraction(1, 3) * (stw - 1) ** 2
            + Fraction(1, 3) * rank - 1)


# ---------------------------------------------------------------------------
# verifiers for the supporting inequalities

def minimality_ratio_check(h: Hypergraph, s: set[int],
                           assume_minimal: bool = False) -> bool:
    """For a minimal hypergraph, removing any nonempty proper edge set S
    keeps l(H)/max_degree strictly below the per-edge surplus of S."""
    if not assume_minimal and not is_minimal(h):
        raise NotMinimalError("hypergraph is not minimal")
    st = stats(h)
    prof = sigma_counts(h, s)
    lhs = st.avg_rank / st.max_degree
    total = sum(len(h.edges[e]) for e in s)
    correction = sum(cnt * (j - Fraction(i, st.max_degree))
                     for (i, j), cnt in prof.counts.items())
    rhs = Fraction(total - correction, len(s))
    return lhs < rhs


def subtree_edge_sets(h: Hypergraph,
                      d: LeafBasedDecomposition) -> dict[int, frozenset[int]]:
    """For each tree node, the hyperedges whose base leaves sit below it."""
    td = d.td
    adj = td.adjacency()
    children = rooted_children(td.root, adj)
    leaf_edge = {leaf: e for e, leaf in d.base.items()}
    z: dict[int, set[int]] = {}

    order = []
    stack = [td.root]
    while stack:
        t = stack.pop()
        order.append(t)
        stack.extend(children[t])
    for t in reversed(order):
        acc: set[int] = set()
        if t in leaf_edge:
            acc.add(leaf_edge[t])
        for c in children[t]:
            acc |= z[c]
        z[t] = acc
    return {t: frozenset(s) for t, s in z.items()}


def leaf_bag_check(h: Hypergraph, d: LeafBasedDecomposition,
                   assume_minimal: bool = False) -> bool:
    """Every internal non-root bag beats the count implied by the edges
    based below its two children."""
    if not assume_minimal and not is_minimal(h):
        raise NotMinimalError("hypergraph is not minimal")
    problems = validate_td(two_section(h), d.td)
    if problems:
        raise InvalidInputError(problems[0])
    st = stats(h)
    td = d.td
    children = rooted_children(td.root, td.adjacency())
    z = subtree_edge_sets(h, d)
    for t in td.nodes:
        kids = children[t]
        if t == td.root or not kids:
            continue
        if len(kids) != 2:
            continue
        a, b = kids
        za, zb = z[a], z[b]
        full_a = sum(cnt for (i, j), cnt in sigma_counts(h, za).counts.items()
                     if i == j)
        full_b = sum(cnt for (i, j), cnt in sigma_counts(h, zb).counts.items()
                     if i == j)
        rhs = Fraction(len(za) + len(zb)) * st.avg_rank / st.max_degree \
            - full_a - full_b
        if not Fraction(len(td.bags[t])) > rhs:
            return False
    return True


def find_significant_node(d: LeafBasedDecomposition, tau: Fraction) -> int:
    """Descend from the root to the node whose below-edge count exceeds tau
    while every child is at or below tau."""
    tau = Fraction(tau)
    if tau < 1:
        raise PreconditionFailedError("threshold below 1")
    td = d.td
    m = len(d.base)
    if m <= 2 * tau:
        raise PreconditionFailedError("too few edges for the descent")
    children = rooted_children(td.root, td.adjacency())
    z = _z_sizes(d, children)
    t = td.root
    while True:
        next_t = None
        for c in children[t]:
            if z[c] > tau:
                next_t = c
                break
        if next_t is None:
            break
        t = next_t
    if t == td.root or not children[t]:
        raise PreconditionFailedError("descent ended at the root or a leaf")
    return t


def _z_sizes(d: LeafBasedDecomposition,
             children: dict[int, list[int]]) -> dict[int, int]:
    leaf_edge = {leaf: e for e, leaf in d.base.items()}
    sizes: dict[int, int] = {}
    order = []
    stack = [d.td.root]
    while stack:
        t = stack.pop()
        order.append(t)
        stack.extend(children[t])
    for t in reversed(order):
        sizes[t] = (1 if t in leaf_edge else 0) + \
            sum(sizes[c] for c in children[t])
    return sizes


# ---------------------------------------------------------------------------
# optimization-claim verifiers

@dataclass
class EnvelopeCandidates:
    s: Fraction
    delta: int
    Delta: int
    f_half_half: Fraction
    f_half_s: Fraction
    f_halfminus_s: Fraction
    min_candidate: Fraction
    branch_condition: bool  # d(d-1) > D - 2Ds, iff f(1/2,s) > f(1/2-s,s)


def envelope_value(alpha: Fraction, beta: Fraction, s: Fraction,
                   delta: int, Delta: int) -> Fraction:
    return (Fraction(alpha + beta, Delta)
            + Fraction(-alpha * alpha + s * alpha - beta * beta + s * beta,
                       delta * (delta - 1)))


def envelope_candidates(s: Fraction, delta: int, Delta: int) -> EnvelopeCandidates:
    s = Fraction(s)
    if not (0 < s <= Fraction(1, 2)):
        raise InapplicableError("s must be in (0, 1/2]")
    if not Delta >= delta >= 2:
        raise InapplicableError("need max degree >= min degree >= 2")
    half = Fraction(1, 2)
    f_hh = envelope_value(half, half, s, delta, Delta)
    f_hs = envelope_value(half, s, s, delta, Delta)
    f_ms = envelope_value(half - s, s, s, delta, Delta)
    if Delta <= 2 * delta * delta - 2 * delta:
        min_candidate = min(f_hs, f_ms)
    else:
        min_candidate = min(f_hh, f_hs, f_ms)
    return EnvelopeCandidates(
        s=s, delta=delta, Delta=Delta,
        f_half_half=f_hh, f_half_s=f_hs, f_halfminus_s=f_ms,
        min_candidate=min_candidate,
        branch_condition=delta * delta - delta > Delta - 2 * Delta * s)


def _best_packing(items: list[tuple[int, int]], budget: int) -> int:
    """Maximum total value of an unbounded integer packing of (weight,
    value) items within the budget; exact dynamic program."""
    dp = [0] * (budget + 1)
    for b in range(1, budget + 1):
        acc = dp[b - 1]
        for w, val in items:
            if w <= b and dp[b - w] + val > acc:
                acc = dp[b - w] + val
        dp[b] = acc
    return dp[budget]


def envelope_grid_ok(s: Fraction, delta: int, Delta: int,
                     grid: int = 200, tol: float = 1e-9) -> bool:
    """Check the candidate minimum against a grid over the feasible
    region s <= beta <= alpha <= 1/2, alpha + beta > 1/2 (floating
    point, fixed tolerance)."""
    cand = envelope_candidates(s, delta, Delta)
    floor = float(cand.min_candidate) - tol
    sf = float(s)
    dd = delta * (delta - 1)
    for i in range(grid + 1):
        alpha = sf + (0.5 - sf) * i / grid
        for j in range(grid + 1):
            beta = sf + (alpha - sf) * j / grid
            if alpha + beta <= 0.5:
                continue
            val = (alpha + beta) / Delta \
                + (-alpha * alpha + sf * alpha
                   - beta * beta + sf * beta) / dd
            if val < floor:
                return False
    return True


def pair_budget_min_check(n_prime: int, delta: int, Delta: int,
                          ) -> tuple[bool, Fraction, Fraction]:
    """Exact minimum of the degree-profile program behind the anti-rank
    bound for minimum degree >= 3.

    Variables sigma[i][j] for 2 <= j <= min(i, Delta), i from delta to
    Delta, with pair budget sum j(j-1)/2 * sigma <= n'(n'-1)/2.  Returns
    (claim_holds, min, bound) where the claimed minimum of
    -sum_{j<i}(j-1) sigma - sum_i i sigma_ii is -n'(n'-1)/2.
    """
    if n_prime > 40 or Delta > 12:
        raise TooLargeError("enumeration bounds exceeded")
    if not Delta >= delta >= 2:
        raise InapplicableError("need max degree >= min degree >= 2")
    budget = n_prime * (n_prime - 1) // 2
    items = [(j * (j - 1) // 2, (j - 1) if j < i else i)
             for j in range(2, Delta + 1)
             for i in range(max(j, delta), Delta + 1)]
    best = Fraction(-_best_packing(items, budget))
    bound = Fraction(-budget)
    return best == bound, best, bound


def split_pair_budget_min_check(n_prime: int, n1: int, n2: int, Delta: int,
                                ) -> tuple[bool, Fraction, Fraction]:
    """Exact minimum of the degree-profile program behind the anti-rank
    bound for minimum degree 2, where the doubly-counted sigma[2][2]
    profile splits into two parts capped by the child pair budgets."""
    if n_prime > 40 or Delta > 12 or n1 > n_prime or n2 > n_prime:
        raise TooLargeError("enumeration bounds exceeded")
    budget = n_prime * (n_prime - 1) // 2
    cap = n1 * (n1 - 1) // 2 + n2 * (n2 - 1) // 2
    items = [(j * (j - 1) // 2, (j - 1) if j < i else i)
             for j in range(2, Delta + 1)
             for i in range(max(j, 2), Delta + 1)
             if not (i == 2 and j == 2)]
    best = 0
    for s22 in range(budget + 1):  # sigma[2][2] uses one pair per unit
        rest = _best_packing(items, budget - s22)
        val = -(s22 + min(s22, cap) + rest)
        if val < best:
            best = val
    best = Fraction(best)
    bound = Fraction(-budget - cap)
    return best >= bound, best, bound


# ---------------------------------------------------------------------------
# aggregation

def bounds_report(h: Hypergraph, exact_tw: Optional[int] = None,
                  exact_stw: Optional[int] = None) -> BoundsReport:
    st = stats(h)
    report = elementary_bounds(h, stw=exact_stw)
    report.exact_tw = exact_tw
    report.exact_stw = exact_stw
    linear = st.is_linear
    if linear and st.min_degree >= 2 and \
            st.max_degree <= 2 * st.min_degree * (st.min_degree - 1):
        value, branch = avg_rank_lower_bound(st.min_degree, st.max_degree,
                                             st.avg_rank)
        report.avg_rank_lower = BoundValue(value, strict=True)
        report.avg_rank_branch = branch
    else:
        report.notes.append("average-rank lower bound inapplicable")
    if linear and st.min_degree >= 3:
        report.anti_rank_lower_deg3 = BoundValue(
            anti_rank_lower_bound_deg3(st.anti_rank))
    if linear and st.min_degree == 2:
        report.anti_rank_lower_deg2 = BoundValue(
            anti_rank_lower_bound_deg2(st.anti_rank))
    if linear and st.regular is not None and st.regular >= 2:
        report.regular_lower = BoundValue(
            regular_lower_bound(st.regular, st.avg_rank), strict=True)
    if exact_stw is not None and st.rank >= 2:
        report.stw_rank_upper = BoundValue(
            stw_rank_upper_bound(exact_stw, st.rank))
        if st.rank < exact_stw - 1:
            report.notes.append("rank below stw-1: the cover bound "
                                "dominates the mixed upper bound")
    return report


def sandwich_ok(report: BoundsReport) -> bool:
    """With exact widths known, every lower bound must sit below them and
    every upper bound above (strict bounds strictly)."""
    if report.exact_tw is None:
        return True
    tw = Fraction(report.exact_tw)
    for b in report.lower_bounds():
        if b.strict:
            if not tw > b.value:
                return False
        elif not tw >= b.value:
            return False
    for b in report.upper_bounds():
        if not tw <= b.value:
            return False
    return True
