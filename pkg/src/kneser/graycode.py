"""Cyclic revolving-door Gray code for combinations.

R(N, K) = R(N-1, K) followed by reversed R(N-1, K-1) with the N-th ground
element added.  Consecutive sets, including last and first, differ by one
exchanged element whenever 0 < K < N.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .subsets import UsageError
from .verify import VerifyReport, verify_sequence


@dataclass(frozen=True)
class GraySequence:
    ground_elements: tuple[int, ...]
    subset_size: int
    order: tuple[tuple[int, ...], ...]  # members listed in ground_elements order

    def __len__(self) -> int:
        return len(self.order)


def revolving_door_masks(N: int, K: int) -> list[int]:
    """R(N, K) as bitmasks over positions 0..N-1."""
    if not 0 <= K <= N:
        raise UsageError(f"need 0 <= K <= N, got N={N}, K={K}")
    # row n holds R(n, j) for the j that can still reach R(N, K)
    rows = {0: [0]}
    for n in range(1, N + 1):
        top = 1 << (n - 1)
        nxt = {}
        for j in range(max(0, K - (N - n)), min(n, K) + 1):
            if j == 0:
                nxt[j] = [0]
            elif j == n:
                nxt[j] = [(1 << n) - 1]
            else:
                nxt[j] = rows[j] + [x | top for x in reversed(rows[j - 1])]
        rows = nxt
    return rows[K]


def gray_code(ground_elements: Sequence[int], K: int) -> GraySequence:
    ground = tuple(ground_elements)
    if len(set(ground)) != len(ground):
        raise UsageError("ground elements must be distinct")
    if K < 0 or K > len(ground):
        raise UsageError(f"cannot choose {K} of {len(ground)} elements")
    order = []
    for mask in revolving_door_masks(len(ground), K):
        members = []
        pos = 0
        while mask:
            if mask & 1:
                members.append(ground[pos])
            mask >>= 1
            pos += 1
        order.append(tuple(members))
    return GraySequence(ground, K, tuple(order))


def verify_graycode(seq: GraySequence) -> VerifyReport:
    """Completeness, distinctness and cyclic one-exchange.  The report is
    truthy iff all hold; otherwise it lists the offending positions."""
    return verify_sequence(seq.ground_elements, seq.subset_size, [frozenset(s) for s in seq.order])
