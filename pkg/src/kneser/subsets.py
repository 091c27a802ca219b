"""k-subsets of [n] = {1, ..., n} stored as bitmasks.

Element ``e`` lives at bit ``e - 1``.  For a fixed ``k`` the integer order of
the masks is exactly colexicographic order, which is the one tie-breaking
order used throughout the package.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

MAX_N = 64


class UsageError(ValueError):
    """Bad arguments passed to a public operation."""


class OutOfRangeError(ValueError):
    """Parameters outside the range where the construction applies (n < 4k)."""


class InvariantViolation(AssertionError):
    """An internal guarantee failed; always a bug, never bad input."""


@dataclass(frozen=True)
class GroundParams:
    n: int
    k: int

    def __post_init__(self):
        if not (1 <= self.k <= self.n <= MAX_N):
            raise UsageError(f"need 1 <= k <= n <= {MAX_N}, got n={self.n}, k={self.k}")

    @property
    def num_vertices(self) -> int:
        return comb(self.n, self.k)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1


@dataclass(frozen=True)
class Subset:
    mask: int
    ground: GroundParams

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.ground.n:
            raise UsageError(f"mask {self.mask:#x} has elements outside [1, {self.ground.n}]")
        if self.mask.bit_count() != self.ground.k:
            raise UsageError(f"subset {elements(self.mask)} does not have {self.ground.k} elements")

    @classmethod
    def of(cls, members: Iterable[int], ground: GroundParams) -> Subset:
        members = list(members)
        if len(set(members)) != len(members):
            raise UsageError(f"repeated element in {members}")
        for e in members:
            if not 1 <= e <= ground.n:
                raise UsageError(f"element {e} outside [1, {ground.n}]")
        return cls(to_mask(members), ground)

    @property
    def members(self) -> tuple[int, ...]:
        return elements(self.mask)

    def __contains__(self, e: int) -> bool:
        return e >= 1 and bool(self.mask >> (e - 1) & 1)

    def __lt__(self, other: Subset) -> bool:
        return self.mask < other.mask

    def __str__(self) -> str:
        return format_subset(self)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"


def to_mask(members: Iterable[int]) -> int:
    m = 0
    for e in members:
        m |= 1 << (e - 1)
    return m


def elements(mask: int) -> tuple[int, ...]:
    """Ascending 1-based elements of a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def min_element(mask: int) -> int:
    return (mask & -mask).bit_length()


def _same_ground(a: Subset, b: Subset) -> None:
    if a.ground != b.ground:
        raise UsageError(f"subsets over different grounds: {a.ground} vs {b.ground}")


def is_disjoint(a: Subset, b: Subset) -> bool:
    _same_ground(a, b)
    return not a.mask & b.mask


def diff_size(a: Subset, b: Subset) -> int:
    """|a \\ b|; symmetric because |a| = |b|."""
    _same_ground(a, b)
    return (a.mask & ~b.mask).bit_count()


def rank_colex(a: Subset) -> int:
    return rank_members(a.members)


def rank_members(members: Iterable[int]) -> int:
    # sum of C(c_i - 1, i) over c_1 < ... < c_k
    return sum(comb(c - 1, i) for i, c in enumerate(sorted(members), start=1))


def unrank_colex(r: int, g: GroundParams) -> Subset:
    if not 0 <= r < g.num_vertices:
        raise UsageError(f"rank {r} outside [0, {g.num_vertices})")
    mask = 0
    c = g.n
    for i in range(g.k, 0, -1):
        # largest c with C(c - 1, i) <= r
        while comb(c - 1, i) > r:
            c -= 1
        r -= comb(c - 1, i)
        mask |= 1 << (c - 1)
        c -= 1
    return Subset(mask, g)


def k_subset_masks(n: int, k: int) -> Iterator[int]:
    """All k-subsets of [n] as masks, in colex (increasing integer) order."""
    if k == 0:
        yield 0
        return
    if k > n:
        return
    x = (1 << k) - 1
    limit = 1 << n
    while x < limit:
        yield x
        # Gosper's hack: next integer with the same popcount
        low = x & -x
        ripple = x + low
        x = ripple | (((x ^ ripple) >> 2) // low)


def all_k_subsets(g: GroundParams) -> list[Subset]:
    return [Subset(m, g) for m in k_subset_masks(g.n, g.k)]


def format_subset(a: Subset) -> str:
    return " ".join(map(str, a.members))


def parse_subset(text: str, g: GroundParams) -> Subset:
    try:
        members = [int(tok) for tok in text.split()]
    except ValueError:
        raise UsageError(f"not a list of integers: {text!r}") from None
    if members != sorted(members):
        raise UsageError(f"elements not ascending: {text!r}")
    return Subset.of(members, g)
