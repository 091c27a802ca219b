"""Assemble a Hamiltonian cycle of K(n, k), n >= 4k, from a clique partition.

Every clique gets a marking vertex (the one containing a special element e
when there is one).  The marking vertices are toured so that neighbours
differ in at most two elements: a Gray code over the (k-1)-subsets of
[n] - {e} orders the marking vertices containing e, and each remaining
marking vertex x follows phi(x) = x - {min x} + {e}.  Walking each clique
from its marking vertex to an exit vertex disjoint from the next marking
vertex closes the cycle.  When the last clique has fewer than four vertices
it is left out of the tour and its vertices are spliced in afterwards.
"""
from __future__ import annotations

from typing import Sequence

from .baranyai import baranyai_partition, compute_size_plan
from .graycode import gray_code
from .model import (
    CliqueOrdering,
    Construction,
    HamCycle,
    MarkingAssignment,
    MarkingTour,
    MatchingPartition,
    PlanPath,
)
from .subsets import GroundParams, InvariantViolation, Subset, UsageError, to_mask


def choose_special_element(partition: MatchingPartition) -> int:
    plan = partition.plan
    if plan.path is not PlanPath.REMARK:
        return plan.n
    covered = 0
    for v in partition.classes[-1]:
        covered |= v.mask
    for e in range(1, plan.n + 1):
        if not covered >> (e - 1) & 1:
            return e
    raise InvariantViolation("last clique covers the whole ground set")


def assign_marking_vertices(partition: MatchingPartition, e: int) -> MarkingAssignment:
    path = partition.plan.path or PlanPath.MAIN
    bit = 1 << (e - 1)
    classes = partition.classes
    marked = range(len(classes) - 1) if path is PlanPath.REMARK else range(len(classes))
    if path is PlanPath.REMARK and any(v.mask & bit for v in classes[-1]):
        raise UsageError(f"special element {e} occurs in the unmarked last clique")
    marking = {}
    for i in marked:
        with_e = [v for v in classes[i] if v.mask & bit]
        if len(with_e) > 1:
            raise InvariantViolation(f"clique {i} is not a matching")
        marking[i] = with_e[0] if with_e else min(classes[i])
    return MarkingAssignment(e, marking, path)


def phi(x: Subset, e: int) -> Subset:
    """Swap the smallest element of x for e."""
    bit = 1 << (e - 1)
    if x.mask & bit:
        raise UsageError(f"{x!r} already contains {e}")
    low = x.mask & -x.mask
    return Subset(x.mask ^ low | bit, x.ground)


def build_marking_tour(assignment: MarkingAssignment, ground: GroundParams) -> MarkingTour:
    e = assignment.special
    bit = 1 << (e - 1)
    index_of = {v: i for i, v in assignment.marking.items()}
    preimages: dict[Subset, list[Subset]] = {}
    for v in assignment.marking.values():
        if not v.mask & bit:
            preimages.setdefault(phi(v, e), []).append(v)
    rest = [x for x in range(1, ground.n + 1) if x != e]
    order = []
    for z in gray_code(rest, ground.k - 1).order:
        head = Subset(to_mask(z) | bit, ground)
        if head not in index_of:
            raise InvariantViolation(f"{head!r} contains {e} but is not a marking vertex")
        order.append((index_of[head], head))
        for v in sorted(preimages.pop(head, ())):
            order.append((index_of[v], v))
    if preimages:
        raise InvariantViolation("phi maps outside the Gray code")
    return MarkingTour(ground, tuple(order))


def select_exit_vertex(clique: Sequence[Subset], y: Subset, y_next: Subset) -> Subset:
    """Colex-smallest clique member other than y that is disjoint from y_next.

    y_next shares at least k-2 elements with y, which no other member can
    contain, and each of its at most two other elements hits at most one
    member; so with four or more members a candidate always remains.
    """
    for z in sorted(clique):
        if z != y and not z.mask & y_next.mask:
            return z
    raise InvariantViolation(f"no exit vertex in clique of {y!r} towards {y_next!r}")


def order_clique(
    clique: Sequence[Subset],
    y: Subset,
    z: Subset,
    required_pairs: Sequence[tuple[Subset, Subset]] = (),
    index: int = -1,
) -> CliqueOrdering:
    """Walk the clique from y to z, keeping a required pair adjacent."""
    if len(clique) > 1 and y == z:
        raise UsageError("start and end must differ")
    if len(required_pairs) > 1:
        raise InvariantViolation("at most one required pair per clique")
    inner = sorted(v for v in clique if v != y and v != z)
    pair = None
    if required_pairs:
        u1, u2 = required_pairs[0]
        if y in (u1, u2):
            raise InvariantViolation("the start vertex cannot be part of a required pair")
        if z in (u1, u2):
            other = u1 if u2 == z else u2
            inner.remove(other)
            inner.append(other)
            pair = (other, z)
        else:
            at = inner.index(u1)
            inner.remove(u2)
            inner.insert(at + 1, u2)
            pair = (u1, u2)
    sequence = [y] + inner + ([z] if z != y else [])
    return CliqueOrdering(index, sequence, y, z, pair)


def insert_leftovers(
    orderings: list[CliqueOrdering],
    leftover: Sequence[Subset],
    assignment: MarkingAssignment,
    partition: MatchingPartition,
    exits: dict[int, Subset],
) -> tuple[list[CliqueOrdering], list[tuple[Subset, Subset, Subset]]]:
    """Re-order the cliques hosting a leftover vertex so that two members
    disjoint from it are adjacent, and record where it goes.

    Returns the updated orderings and one (u1, v, u2) triple per leftover v;
    :func:`concatenate` puts v between u1 and u2.
    """
    if not leftover:
        return orderings, []
    e = assignment.special
    if partition.plan.k < 2:
        raise InvariantViolation("leftover vertices need k >= 2")
    index_of = {v: i for i, v in assignment.marking.items()}
    position = {o.index: pos for pos, o in enumerate(orderings)}
    hosts = set()
    triples = []
    for v in sorted(leftover):
        y = phi(v, e)
        j = index_of.get(y)
        if j is None:
            raise InvariantViolation(f"{y!r} is not a marking vertex")
        if j in hosts:
            raise InvariantViolation(f"two leftovers map to clique {j}")
        hosts.add(j)
        clique = partition.classes[j]
        free = sorted(u for u in clique if not u.mask & v.mask)
        if len(free) < 2:
            raise InvariantViolation(f"clique {j} has fewer than two members disjoint from {v!r}")
        u1, u2 = free[:2]
        ordering = order_clique(clique, y, exits[j], [(u1, u2)], index=j)
        orderings[position[j]] = ordering
        a, b = ordering.required_pair
        triples.append((a, v, b))
    return orderings, triples


def concatenate(
    ground: GroundParams,
    orderings: Sequence[CliqueOrdering],
    insertions: Sequence[tuple[Subset, Subset, Subset]] = (),
) -> HamCycle:
    after = {a: v for a, v, _ in insertions}
    order = []
    for o in orderings:
        for u in o.sequence:
            order.append(u)
            if u in after:
                order.append(after[u])
    return HamCycle(ground, tuple(order))


def construct(n: int, k: int) -> Construction:
    """Run the full pipeline and keep every intermediate object."""
    plan = compute_size_plan(n, k)
    g = plan.ground
    partition = baranyai_partition(plan)
    e = choose_special_element(partition)
    assignment = assign_marking_vertices(partition, e)
    tour = build_marking_tour(assignment, g)

    t = len(tour.order)
    exits: dict[int, Subset] = {}
    orderings = []
    for pos, (i, y) in enumerate(tour.order):
        _, y_next = tour.order[(pos + 1) % t]
        clique = partition.classes[i]
        exits[i] = select_exit_vertex(clique, y, y_next)
        orderings.append(order_clique(clique, y, exits[i], index=i))

    leftovers: list[Subset] = []
    insertions: list = []
    if plan.path is PlanPath.REMARK:
        leftovers = sorted(partition.classes[-1])
        orderings, insertions = insert_leftovers(orderings, leftovers, assignment, partition, exits)
    cycle = concatenate(g, orderings, insertions)
    return Construction(plan, partition, assignment, tour, orderings, leftovers, cycle, insertions)


def build_hamiltonian(n: int, k: int) -> HamCycle:
    return construct(n, k).cycle
