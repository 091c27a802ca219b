"""Partition all k-subsets of [n] into matchings of prescribed sizes.

The classes are grown one ground element at a time.  At stage l every class
holds a multiset of partial sets S of [l]; going to l + 1, exactly
C(n-l-1, k-|S|-1) copies of each S receive the new element, at most one per
class.  Which copies is decided by an integral flow, which exists because
spreading the element fractionally with weight (k-|S|)/(n-l) per copy is a
feasible solution of the same network.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Sequence

from .flow import FlowNetwork, feasible_flow
from .model import MatchingPartition, PlanPath, SizePlan
from .subsets import (
    MAX_N,
    GroundParams,
    InvariantViolation,
    OutOfRangeError,
    Subset,
    UsageError,
    elements,
    k_subset_masks,
)


# explicit cycles beyond this many vertices are not materialized
MAX_VERTICES = 10**7


def _binom(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


def compute_size_plan(n: int, k: int) -> SizePlan:
    """Clique sizes for the construction on K(n, k), n >= 4k.

    n = pk + r and C(n, k) = (m-1)p + q with 1 <= q <= p.  If p = 4 and
    q <= 3 the small last class is kept as is and handled by splicing
    (Remark path); otherwise b = max(4 - q, 0) classes of size p - 1 top the
    last class up to q + b >= 4 (Main path).
    """
    if not (1 <= k and n <= MAX_N):
        raise UsageError(f"need k >= 1 and n <= {MAX_N}, got n={n}, k={k}")
    if n < 4 * k:
        raise OutOfRangeError(f"method requires n >= 4k, got n={n}, k={k}")
    total = comb(n, k)
    if total > MAX_VERTICES:
        raise UsageError(f"C({n},{k}) = {total} vertices is too many to build explicitly (limit {MAX_VERTICES})")
    p, r = divmod(n, k)
    m = -(-total // p)
    q = total - (m - 1) * p
    if p == 4 and q <= 3:
        return SizePlan(n, k, p, r, m, q, 0, PlanPath.REMARK, (p,) * (m - 1) + (q,))
    b = max(4 - q, 0)
    sizes = (p,) * (m - 1 - b) + (p - 1,) * b + (q + b,)
    plan = SizePlan(n, k, p, r, m, q, b, PlanPath.MAIN, sizes)
    if m - 1 < b or min(sizes) < 4:
        raise InvariantViolation(f"size plan {plan} has a class below 4")
    return plan


def custom_plan(n: int, k: int, sizes: Sequence[int]) -> SizePlan:
    """Accept any size list that a partition into matchings can meet."""
    g = GroundParams(n, k)
    sizes = tuple(sizes)
    if sum(sizes) != g.num_vertices:
        raise UsageError(f"sizes sum to {sum(sizes)}, need C({n},{k}) = {g.num_vertices}")
    if any(a < 0 or a > n // k for a in sizes):
        raise UsageError(f"every size must lie in [0, {n // k}]")
    return SizePlan.from_sizes(n, k, sizes)


@dataclass
class StageState:
    """Partial classes after the elements 1..level have been distributed.

    ``classes[i]`` maps a partial set (bitmask over [level]) to its
    multiplicity; only the empty set can repeat inside a class.
    """

    plan: SizePlan
    level: int
    classes: list[Counter]


def initial_stage_state(plan: SizePlan) -> StageState:
    return StageState(plan, 0, [Counter({0: a}) if a else Counter() for a in plan.sizes])


def stage_network(state: StageState):
    """The flow network for one extension step.

    Returns the network, the (class, type) pair behind every class->type arc
    in arc order, and the per-type demands d_S.
    """
    plan, level = state.plan, state.level
    n, k = plan.n, plan.k
    remaining = n - level
    demand = {}
    for counts in state.classes:
        for s in counts:
            if s not in demand:
                demand[s] = _binom(remaining - 1, k - s.bit_count() - 1)
    types = sorted(s for s, d in demand.items() if d > 0)  # colex
    m = len(state.classes)
    source, sink = 0, 1
    net = FlowNetwork(2 + m + len(types), source, sink)
    type_node = {s: 2 + m + j for j, s in enumerate(types)}
    for i, counts in enumerate(state.classes):
        slack = remaining - sum(c * (k - s.bit_count()) for s, c in counts.items())
        # a class with no slack left must take the new element
        net.add_arc(source, 2 + i, 1, low=1 if slack == 0 and counts else 0)
    pairs = []
    for i, counts in enumerate(state.classes):
        for s in sorted(counts):
            if s in type_node and counts[s]:
                net.add_arc(2 + i, type_node[s], counts[s])
                pairs.append((i, s))
    for s in types:
        net.add_arc(type_node[s], sink, demand[s], low=demand[s])
    return net, pairs, {s: demand[s] for s in types}


def extend_stage(state: StageState) -> StageState:
    plan, level = state.plan, state.level
    if level >= plan.n:
        raise UsageError("all elements already distributed")
    net, pairs, demand = stage_network(state)
    flow = feasible_flow(net)
    if flow is None:
        raise InvariantViolation(f"no integral flow meets demands {sum(demand.values())} at stage {level}")
    m = len(state.classes)
    offset = m  # the first m arcs leave the source
    bit = 1 << level
    classes = [Counter(c) for c in state.classes]
    for (i, s), f in zip(pairs, flow.arc_flow[offset:offset + len(pairs)]):
        if f:
            if f != 1:
                raise InvariantViolation(f"class {i} took element {level + 1} {f} times")
            classes[i][s] -= 1
            if not classes[i][s]:
                del classes[i][s]
            classes[i][s | bit] += 1
    return StageState(plan, level + 1, classes)


def stage_violations(state: StageState) -> list[str]:
    """Recompute invariants (I1)-(I4) from scratch; empty list when all hold.

    Exhaustive over subsets of [level] of size <= k, so only for small
    instances.
    """
    plan, level = state.plan, state.level
    n, k = plan.n, plan.k
    remaining = n - level
    out = []
    total = Counter()
    for i, (counts, a) in enumerate(zip(state.classes, plan.sizes)):
        total.update(counts)
        if sum(counts.values()) != a:
            out.append(f"I3: class {i} holds {sum(counts.values())} sets, expected {a}")
        union = 0
        weight = 0
        for s, c in counts.items():
            if c <= 0:
                out.append(f"class {i}: nonpositive multiplicity for {elements(s)}")
            if s >> level:
                out.append(f"class {i}: {elements(s)} not inside [{level}]")
            if s and (c > 1 or union & s):
                out.append(f"I2: class {i} repeats an element in {elements(s)}")
            union |= s
            weight += c * (k - s.bit_count())
        if weight > remaining:
            out.append(f"I4: class {i} needs {weight} more elements, only {remaining} left")
    seen = 0
    for size in range(min(k, level) + 1):
        want = _binom(remaining, k - size)
        for s in k_subset_masks(level, size):
            got = total.get(s, 0)
            seen += got
            if got != want:
                out.append(f"I1: {elements(s)} has multiplicity {got}, expected {want}")
    if seen != sum(total.values()):
        out.append("I1: partial sets larger than k present")
    return out


def baranyai_partition(plan: SizePlan, check_stages: bool = False) -> MatchingPartition:
    """Run n extension steps; with ``check_stages`` the invariants are
    recomputed after every step and a violation raises."""
    if sum(plan.sizes) != comb(plan.n, plan.k) or any(a > plan.n // plan.k for a in plan.sizes):
        raise UsageError("plan sizes must sum to C(n, k) with every size <= n // k")
    g = GroundParams(plan.n, plan.k)
    state = initial_stage_state(plan)
    for _ in range(plan.n):
        state = extend_stage(state)
        if check_stages:
            bad = stage_violations(state)
            if bad:
                raise InvariantViolation(f"after stage {state.level}: {bad[:5]}")
    classes = []
    for counts in state.classes:
        if any(c != 1 for c in counts.values()):
            raise InvariantViolation("finished class still holds repeated sets")
        classes.append(tuple(Subset(s, g) for s in sorted(counts)))
    return MatchingPartition(plan, tuple(classes))
