from collections import Counter
from math import comb

import pytest

from kneser.baranyai import (
    baranyai_partition,
    compute_size_plan,
    custom_plan,
    extend_stage,
    initial_stage_state,
    stage_network,
    stage_violations,
)
from kneser.model import PlanPath, SizePlan
from kneser.subsets import OutOfRangeError, UsageError
from kneser.verify import brute_force_partition_oracle, verify_partition


def plan_arithmetic_oracle(n, k):
    """p, r, m, q straight from the definitions, by search rather than division."""
    total = comb(n, k)
    p = max(x for x in range(1, n + 1) if x * k <= n)
    r = n - p * k
    m, q = next((m, total - (m - 1) * p) for m in range(1, total + 2) if 1 <= total - (m - 1) * p <= p)
    return p, r, m, q


@pytest.mark.parametrize(
    "n,k,p,r,m,q,b,path",
    [
        (8, 2, 4, 0, 7, 4, 0, PlanPath.MAIN),
        (19, 3, 6, 1, 162, 3, 1, PlanPath.MAIN),
        (13, 3, 4, 1, 72, 2, 0, PlanPath.REMARK),
        (4, 1, 4, 0, 1, 4, 0, PlanPath.MAIN),
        (21, 5, 4, 1, 5088, 1, 0, PlanPath.REMARK),
    ],
)
def test_size_plan_examples(n, k, p, r, m, q, b, path):
    assert plan_arithmetic_oracle(n, k) == (p, r, m, q)
    plan = compute_size_plan(n, k)
    assert (plan.p, plan.r, plan.m, plan.q, plan.b, plan.path) == (p, r, m, q, b, path)
    assert sum(plan.sizes) == comb(n, k)


def test_size_plan_explicit_sizes():
    assert compute_size_plan(8, 2).sizes == (4,) * 7
    assert compute_size_plan(19, 3).sizes == (6,) * 160 + (5,) + (4,)
    assert compute_size_plan(13, 3).sizes == (4,) * 71 + (2,)
    assert compute_size_plan(4, 1).sizes == (4,)


def test_size_plan_errors():
    with pytest.raises(OutOfRangeError):
        compute_size_plan(7, 2)
    with pytest.raises(OutOfRangeError):
        compute_size_plan(19, 5)
    with pytest.raises(UsageError):
        compute_size_plan(65, 1)
    with pytest.raises(UsageError):
        compute_size_plan(64, 16)  # far too many vertices to materialize


def test_size_plan_properties_over_range():
    checked = 0
    for k in range(1, 17):
        for n in range(4 * k, 65):
            if comb(n, k) > 10**6:
                break
            plan = compute_size_plan(n, k)
            assert (plan.p, plan.r, plan.m, plan.q) == plan_arithmetic_oracle(n, k)
            assert sum(plan.sizes) == comb(n, k)
            assert max(plan.sizes) <= n // k
            assert len(plan.sizes) == plan.m
            if plan.path is PlanPath.MAIN:
                assert min(plan.sizes) >= 4
                assert plan.b == max(4 - plan.q, 0)
            else:
                assert plan.p == 4 and plan.q <= 3 and plan.b == 0
                assert set(plan.sizes[:-1]) == {4} and plan.sizes[-1] == plan.q
            checked += 1
    assert checked > 100


def test_initial_stage_state():
    st = initial_stage_state(custom_plan(4, 2, [2, 2, 1, 1]))
    assert st.level == 0
    assert [dict(c) for c in st.classes] == [{0: 2}, {0: 2}, {0: 1}, {0: 1}]
    assert stage_violations(st) == []
    st = initial_stage_state(compute_size_plan(8, 2))
    assert [dict(c) for c in st.classes] == [{0: 4}] * 7
    assert stage_violations(st) == []


def test_stage_network_shape():
    net, pairs, demand = stage_network(initial_stage_state(compute_size_plan(8, 2)))
    # only the empty set exists; C(7, 1) = 7 copies must take element 1
    assert demand == {0: 7}
    assert pairs == [(i, 0) for i in range(7)]
    assert [a[3] for a in net.arcs[:7]] == [1] * 7
    assert net.arcs[-1][2:] == (7, 7)


def test_extend_stage_n_equals_k():
    st = initial_stage_state(custom_plan(5, 5, [1]))
    for level in range(5):
        st = extend_stage(st)
        assert dict(st.classes[0]) == {(1 << (level + 1)) - 1: 1}
    with pytest.raises(UsageError):
        extend_stage(st)


def test_extend_stage_every_step_on_8_2():
    st = initial_stage_state(compute_size_plan(8, 2))
    for _ in range(8):
        before = st
        st = extend_stage(st)
        assert stage_violations(st) == []
        bit = 1 << (st.level - 1)
        for old, new in zip(before.classes, st.classes):
            gained = sum(c for s, c in new.items() if s & bit)
            assert gained <= 1


def test_four_two_partition_matches_oracle():
    plan = custom_plan(4, 2, [2, 2, 1, 1])
    part = baranyai_partition(plan, check_stages=True)
    assert verify_partition(part)
    assert [len(c) for c in part.classes] == [2, 2, 1, 1]
    oracle = brute_force_partition_oracle(4, 2, [2, 2, 1, 1])
    assert oracle is not None and verify_partition(oracle)


def test_eight_two_is_a_one_factorization():
    part = baranyai_partition(compute_size_plan(8, 2), check_stages=True)
    assert verify_partition(part)
    for cls in part.classes:
        covered = 0
        for v in cls:
            covered |= v.mask
        assert covered == 0xFF


def test_full_subset_plan():
    part = baranyai_partition(custom_plan(6, 6, [1]))
    assert [[v.members for v in c] for c in part.classes] == [[(1, 2, 3, 4, 5, 6)]]


@pytest.mark.parametrize(
    "n,k,sizes",
    [
        (9, 2, None),
        (10, 3, [3] * 40),
        (11, 3, [3] * 54 + [2, 1]),
        (16, 4, None),
        (13, 3, None),
        (14, 3, None),
        (19, 3, None),
        (9, 4, [2] * 63),
        (10, 5, [2] * 126),
        (7, 2, [3, 3, 3, 3, 3, 3, 3]),
    ],
)
def test_stage_invariants_hold_throughout(n, k, sizes):
    plan = compute_size_plan(n, k) if sizes is None else custom_plan(n, k, sizes)
    part = baranyai_partition(plan, check_stages=True)
    assert verify_partition(part)


def test_stage_checker_detects_corruption():
    st = extend_stage(extend_stage(initial_stage_state(compute_size_plan(8, 2))))
    assert stage_violations(st) == []
    bad = [Counter(c) for c in st.classes]
    # move a member from class 0 to class 1: breaks I3 twice
    s = next(iter(bad[0]))
    bad[0][s] -= 1
    if not bad[0][s]:
        del bad[0][s]
    bad[1][s] += 1
    st.classes[:] = bad
    assert any(v.startswith("I3") for v in stage_violations(st))


def test_permuted_plan_keeps_class_sizes():
    sizes = [6] * 160 + [5, 4]
    shuffled = [4] + [6] * 80 + [5] + [6] * 80
    a = baranyai_partition(custom_plan(19, 3, sizes))
    b = baranyai_partition(custom_plan(19, 3, shuffled))
    assert verify_partition(a) and verify_partition(b)
    assert [len(c) for c in b.classes] == shuffled
    assert Counter(map(len, a.classes)) == Counter(map(len, b.classes))


def test_deterministic():
    plan = compute_size_plan(13, 3)
    assert baranyai_partition(plan) == baranyai_partition(plan)


def test_invalid_plans_rejected():
    with pytest.raises(UsageError):
        custom_plan(4, 2, [3, 1, 1, 1])
    with pytest.raises(UsageError):
        custom_plan(4, 2, [2, 2, 1])
    with pytest.raises(UsageError):
        baranyai_partition(SizePlan.from_sizes(4, 2, [3, 1, 1, 1]))


def _extend_ignoring_lower_bounds(state):
    from kneser.flow import FlowNetwork, max_flow
    from kneser.baranyai import StageState

    net, pairs, demand = stage_network(state)
    plain = FlowNetwork(net.num_nodes, net.source, net.sink, [(u, v, 0, c) for u, v, _, c in net.arcs])
    flow = max_flow(plain)
    m, bit = len(state.classes), 1 << state.level
    classes = [Counter(c) for c in state.classes]
    for (i, s), f in zip(pairs, flow.arc_flow[m:m + len(pairs)]):
        if f:
            classes[i][s] -= 1
            classes[i] += Counter()
            classes[i][s | bit] += 1
    return flow.value == sum(demand.values()), StageState(state.plan, state.level + 1, classes)


def test_tight_classes_need_lower_bounds():
    # (9, 2): every class of 4 pairs leaves one spare element.  A bare max
    # flow may skip a class whose spare element is already used up.
    st = initial_stage_state(compute_size_plan(9, 2))
    broken = False
    for _ in range(9):
        full, st = _extend_ignoring_lower_bounds(st)
        if not full or any(v.startswith("I4") for v in stage_violations(st)):
            broken = True
            break
    assert broken
    assert verify_partition(baranyai_partition(compute_size_plan(9, 2), check_stages=True))
