from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from kneser.graycode import GraySequence, gray_code, revolving_door_masks, verify_graycode
from kneser.subsets import UsageError


def sets_of(seq):
    return [set(s) for s in seq.order]


def test_singletons():
    seq = gray_code([1, 2, 3], 1)
    assert sorted(seq.order) == [(1,), (2,), (3,)]
    assert verify_graycode(seq)


def test_pairs_of_four():
    seq = gray_code([1, 2, 3, 4], 2)
    assert len(seq) == 6
    assert seq.order[0] == (1, 2)
    assert verify_graycode(seq)
    # the sample order listed for this case is also a valid cyclic Gray code
    sample = GraySequence((1, 2, 3, 4), 2, ((1, 2), (1, 3), (1, 4), (3, 4), (2, 4), (2, 3)))
    assert verify_graycode(sample)


def test_empty_subset():
    for ground in ([], [5], [1, 2, 3]):
        seq = gray_code(ground, 0)
        assert seq.order == ((),)
        assert verify_graycode(seq)


def test_errors():
    with pytest.raises(UsageError):
        gray_code([1, 2], 3)
    with pytest.raises(UsageError):
        gray_code([1, 1, 2], 1)
    with pytest.raises(UsageError):
        revolving_door_masks(3, -1)


def test_colex_order_is_not_a_gray_code():
    colex = GraySequence((1, 2, 3, 4), 2, ((1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)))
    report = verify_graycode(colex)
    assert not report
    assert [v.location for v in report.violations if v.kind == "adjacency"] == ["2", "5"]


def test_checker_catches_duplicates_and_gaps():
    seq = GraySequence((1, 2, 3), 1, ((1,), (2,), (2,)))
    assert {"duplicate", "coverage"} <= verify_graycode(seq).kinds()
    seq = GraySequence((1, 2, 3), 1, ((1,), (2,)))
    assert "coverage" in verify_graycode(seq).kinds()
    seq = GraySequence((1, 2, 3), 1, ((1,), (2,), (4,)))
    assert "wrong-size" in verify_graycode(seq).kinds()


def test_two_element_cases_decided_by_checker():
    assert verify_graycode(gray_code([1, 2], 1))
    bad = GraySequence((1, 2, 3, 4), 2, ((1, 2), (3, 4)))
    assert not verify_graycode(bad)


@pytest.mark.parametrize("N", range(0, 19))
def test_exhaustive_small(N):
    for K in range(N + 1):
        seq = gray_code(range(1, N + 1), K)
        assert len(seq) == comb(N, K)
        assert verify_graycode(seq), (N, K)


def test_deterministic():
    assert gray_code(range(1, 12), 5) == gray_code(range(1, 12), 5)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-1000, 1000), unique=True, min_size=1, max_size=12), st.data())
def test_relabeling_commutes(ground, data):
    K = data.draw(st.integers(0, len(ground)))
    base = gray_code(range(len(ground)), K)
    relabeled = gray_code(ground, K)
    assert relabeled.order == tuple(tuple(ground[i] for i in s) for s in base.order)
    assert verify_graycode(relabeled)


@pytest.mark.parametrize("N,K", [(447, 2), (85, 3), (2000, 1), (300, 299)])
def test_large_grounds(N, K):
    seq = gray_code(range(1, N + 1), K)
    assert len(seq) == comb(N, K) <= 10**5
    assert verify_graycode(seq)
