"""Plain data containers passed between the builders and the verifiers."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .subsets import GroundParams, Subset


class PlanPath(str, Enum):
    MAIN = "Main"
    REMARK = "Remark"


@dataclass(frozen=True)
class SizePlan:
    """Clique sizes a_1..a_m together with the arithmetic that produced them.

    ``path`` is None for a hand-supplied size list that did not come from
    :func:`kneser.baranyai.compute_size_plan`.
    """

    n: int
    k: int
    p: int
    r: int
    m: int
    q: int
    b: int
    path: Optional[PlanPath]
    sizes: tuple[int, ...]

    @classmethod
    def from_sizes(cls, n: int, k: int, sizes) -> SizePlan:
        sizes = tuple(sizes)
        return cls(n, k, n // k, n % k, len(sizes), sizes[-1] if sizes else 0, 0, None, sizes)

    @property
    def ground(self) -> GroundParams:
        return GroundParams(self.n, self.k)


@dataclass(frozen=True)
class MatchingPartition:
    plan: SizePlan
    classes: tuple[tuple[Subset, ...], ...]

    def clique_of(self) -> dict[Subset, int]:
        """Vertex -> index of the class containing it."""
        return {v: i for i, cls in enumerate(self.classes) for v in cls}


@dataclass(frozen=True)
class MarkingAssignment:
    special: int
    marking: dict[int, Subset]  # clique index -> marking vertex
    path: PlanPath

    @property
    def vertices(self) -> set[Subset]:
        return set(self.marking.values())


@dataclass(frozen=True)
class MarkingTour:
    ground: GroundParams
    order: tuple[tuple[int, Subset], ...]  # (clique index, marking vertex)


@dataclass
class CliqueOrdering:
    index: int
    sequence: list[Subset]
    start: Subset
    end: Subset
    required_pair: Optional[tuple[Subset, Subset]] = None


@dataclass(frozen=True)
class HamCycle:
    ground: GroundParams
    order: tuple[Subset, ...]


@dataclass
class Construction:
    """Every intermediate object of one build, kept for inspection and tests."""

    plan: SizePlan
    partition: MatchingPartition
    assignment: MarkingAssignment
    tour: MarkingTour
    orderings: list[CliqueOrdering]
    leftovers: list[Subset]
    cycle: HamCycle
    insertions: list[tuple[Subset, Subset, Subset]] = field(default_factory=list)
