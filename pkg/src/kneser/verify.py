"""Certificate checkers written from the definitions alone.

Nothing here imports a builder: a cycle, partition or tour is checked against
what it claims to be, using only the subset primitives.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Optional, Sequence

from .model import MatchingPartition, SizePlan
from .subsets import GroundParams, Subset, all_k_subsets, diff_size, is_disjoint, k_subset_masks

MAX_VIOLATIONS = 100
KINDS = ("duplicate", "missing", "not-disjoint", "wrong-size", "adjacency", "coverage")


@dataclass(frozen=True)
class Violation:
    kind: str
    location: str
    detail: str

    def line(self) -> str:
        return f"{self.kind.upper()} {self.location} {self.detail}"


@dataclass
class VerifyReport:
    subject: str
    violations: list[Violation] = field(default_factory=list)
    total: int = 0  # including violations dropped by the cap

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def add(self, kind: str, location, detail: str) -> None:
        assert kind in KINDS, kind
        self.total += 1
        if len(self.violations) < MAX_VIOLATIONS:
            self.violations.append(Violation(kind, str(location), detail))

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}

    def lines(self) -> list[str]:
        """Machine-readable form: one ``KIND location detail`` line per violation."""
        return [v.line() for v in self.violations]

    def render(self) -> str:
        if self.ok:
            return f"{self.subject}: OK"
        out = [f"{self.subject}: FAILED ({self.total} violation{'s' if self.total != 1 else ''})"]
        out += [f"  {v.kind} at {v.location}: {v.detail}" for v in self.violations]
        if self.total > len(self.violations):
            out.append(f"  ... {self.total - len(self.violations)} more not shown")
        return "\n".join(out)


def _check_members(report: VerifyReport, items: Iterable[tuple[str, Subset]], g: GroundParams) -> None:
    for loc, s in items:
        if s.ground != g:
            report.add("wrong-size", loc, f"{s!r} is over {s.ground}, expected {g}")


def _check_exact_cover(report: VerifyReport, seen: Counter, g: GroundParams) -> None:
    for s, c in seen.items():
        if c > 1:
            report.add("duplicate", repr(s), f"appears {c} times")
    masks = {s.mask for s in seen if s.ground == g}
    for m in k_subset_masks(g.n, g.k):
        if m not in masks:
            report.add("missing", repr(Subset(m, g)), "vertex never appears")


def verify_cycle(c) -> VerifyReport:
    """Check that ``c.order`` is a Hamiltonian cycle of K(n, k)."""
    g = c.ground
    order = list(c.order)
    report = VerifyReport(f"cycle K({g.n},{g.k})")
    _check_members(report, ((str(i), s) for i, s in enumerate(order)), g)
    if len(order) != g.num_vertices:
        report.add("coverage", "length", f"{len(order)} vertices, expected C({g.n},{g.k})={g.num_vertices}")
    _check_exact_cover(report, Counter(order), g)
    t = len(order)
    for i in range(t):
        a, b = order[i], order[(i + 1) % t]
        if a.mask & b.mask:
            report.add("not-disjoint", i, f"{a!r} -> {b!r} share {a.mask & b.mask:#x}")
    return report


def verify_partition(p: MatchingPartition) -> VerifyReport:
    """Check class sizes, pairwise disjointness inside classes, and exact cover."""
    plan = p.plan
    g = GroundParams(plan.n, plan.k)
    report = VerifyReport(f"partition K({g.n},{g.k})")
    if len(p.classes) != len(plan.sizes):
        report.add("coverage", "classes", f"{len(p.classes)} classes, plan has {len(plan.sizes)}")
    for i, (cls, want) in enumerate(zip(p.classes, plan.sizes)):
        if len(cls) != want:
            report.add("wrong-size", f"class {i}", f"{len(cls)} vertices, plan says {want}")
    seen = Counter()
    for i, cls in enumerate(p.classes):
        _check_members(report, ((f"class {i}", s) for s in cls), g)
        seen.update(cls)
        for x in range(len(cls)):
            for y in range(x + 1, len(cls)):
                if cls[x].mask & cls[y].mask:
                    report.add("not-disjoint", f"class {i}", f"{cls[x]!r} and {cls[y]!r} intersect")
    _check_exact_cover(report, seen, g)
    return report


def verify_tour(t, marking: Optional[Iterable[Subset]] = None) -> VerifyReport:
    """Check a marking tour: no repeats, every expected marking vertex present,
    cyclic neighbours differ by at most two elements."""
    order = [s for _, s in t.order]
    report = VerifyReport("marking tour")
    seen = Counter(order)
    for s, c in seen.items():
        if c > 1:
            report.add("duplicate", repr(s), f"appears {c} times")
    if marking is not None:
        for s in sorted(set(marking) - set(seen)):
            report.add("missing", repr(s), "marking vertex not in tour")
        for s in sorted(set(seen) - set(marking)):
            report.add("coverage", repr(s), "tour entry is not a marking vertex")
    n = len(order)
    for i in range(n):
        a, b = order[i], order[(i + 1) % n]
        d = diff_size(a, b)
        if d > 2:
            report.add("adjacency", i, f"{a!r} -> {b!r} differ by {d}")
    return report


def verify_sequence(ground_elements: Sequence[int], size: int, order: Sequence[frozenset]) -> VerifyReport:
    """Cyclic one-exchange check for an enumeration of all ``size``-subsets
    of ``ground_elements`` (plain frozensets, any ambient labels)."""
    report = VerifyReport(f"gray code ({len(ground_elements)} choose {size})")
    universe = set(ground_elements)
    seen = Counter(order)
    for s, c in seen.items():
        if c > 1:
            report.add("duplicate", sorted(s), f"appears {c} times")
        if len(s) != size or not s <= universe:
            report.add("wrong-size", sorted(s), f"not a {size}-subset of the ground elements")
    want = comb(len(universe), size)
    if len(seen) != want or len(order) != want:
        report.add("coverage", "length", f"{len(order)} entries ({len(seen)} distinct), expected {want}")
    t = len(order)
    if t >= 2:
        for i in range(t):
            a, b = order[i], order[(i + 1) % t]
            if len(a - b) != 1:
                report.add("adjacency", i, f"{sorted(a)} -> {sorted(b)} differ by {len(a - b)}")
    return report


def brute_force_partition_oracle(n: int, k: int, sizes: Sequence[int]) -> Optional[MatchingPartition]:
    """Exhaustive backtracking for a partition of [n]^(k) into matchings of the
    given sizes.  Meant for tiny instances (C(n, k) <= 30); returns None when
    no such partition exists."""
    g = GroundParams(n, k)
    vertices = all_k_subsets(g)
    if sum(sizes) != len(vertices) or any(a < 0 for a in sizes):
        return None
    t = len(sizes)
    used = [0] * t
    room = list(sizes)
    members: list[list[Subset]] = [[] for _ in range(t)]

    def place(idx: int) -> bool:
        if idx == len(vertices):
            return True
        v = vertices[idx]
        tried_empty = set()
        for i in range(t):
            if room[i] == 0 or used[i] & v.mask:
                continue
            if not members[i]:
                # empty classes of equal size are interchangeable
                if room[i] in tried_empty:
                    continue
                tried_empty.add(room[i])
            free = n - used[i].bit_count() - k
            if (room[i] - 1) * k > free:
                continue
            used[i] |= v.mask
            room[i] -= 1
            members[i].append(v)
            if place(idx + 1):
                return True
            members[i].pop()
            room[i] += 1
            used[i] ^= v.mask
        return False

    if not place(0):
        return None
    return MatchingPartition(SizePlan.from_sizes(n, k, sizes), tuple(tuple(c) for c in members))
