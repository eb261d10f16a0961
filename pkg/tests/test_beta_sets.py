# tests/test_beta_sets.py
import random

import pytest
from hypothesis import given, strategies as st

from app.schemas.models.beta_sets_models import BetaSet, PartitionT
from app.utility.beta_sets import (
    beta_d_core,
    beta_d_weight,
    beta_hooks,
    beta_normalize,
    beta_shift,
    beta_stats,
    beta_to_partition,
    partition_to_beta,
    raw_defect,
    raw_rank,
    remove_hook,
    strip_zeros,
)
from app.utility.exceptions import InvalidInputError

raw_beta_sets = st.frozensets(st.integers(min_value=0, max_value=14), max_size=7).map(sorted)
hook_lengths = st.integers(min_value=1, max_value=4)


@pytest.mark.parametrize(
    "raw, expected",
    [
        ((0, 1, 4), (2,)),
        ((), ()),
        ((1, 3), (1, 3)),
        ((0, 1, 2), ()),
        ((3, 0), (2,)),
    ],
)
def test_normalize_examples(raw, expected):
    assert beta_normalize(raw) == BetaSet(expected)


def test_normalize_rejects_duplicates():
    with pytest.raises(InvalidInputError):
        beta_normalize([1, 1, 2])


def test_normalize_rejects_negative_entries():
    with pytest.raises(InvalidInputError):
        beta_normalize([-1, 2])


def test_beta_set_requires_canonical_form():
    with pytest.raises(InvalidInputError):
        BetaSet((0, 2))
    with pytest.raises(InvalidInputError):
        BetaSet((3, 1))


@pytest.mark.parametrize(
    "elements, rank, defect, class_max",
    [
        ((1, 3), 3, 2, 3),
        ((2,), 2, 0, 2),
        ((), 0, 0, 0),
        ((1, 3, 5), 6, 3, 5),
        ((1,), 1, 1, 1),
    ],
)
def test_stats_examples(elements, rank, defect, class_max):
    assert beta_stats(BetaSet(elements)) == (rank, defect, class_max)


@pytest.mark.parametrize(
    "parts, elements",
    [((1, 2), (1, 3)), ((4,), (4,)), ((), ()), ((1, 1, 1), (1, 2, 3))],
)
def test_partition_to_beta_examples(parts, elements):
    partition = PartitionT(parts)
    assert partition_to_beta(partition) == BetaSet(elements)
    assert beta_to_partition(BetaSet(elements)) == partition


def test_rank_is_partition_size():
    partition = PartitionT((1, 2, 2, 5))
    assert beta_stats(partition_to_beta(partition)).rank == partition.size == 10


def test_partition_rejects_decreasing_parts():
    with pytest.raises(InvalidInputError):
        PartitionT((3, 1))


@pytest.mark.parametrize(
    "elements, d, core",
    [((4,), 2, ()), ((1, 3), 2, (1, 3)), ((7,), 1, ()), ((5,), 1, ()), ((1, 5), 3, (1, 2)), ((2, 5), 3, (2, 5))],
)
def test_core_examples(elements, d, core):
    assert beta_d_core(BetaSet(elements), d) == BetaSet(core)


def test_core_rejects_zero_hook_length():
    with pytest.raises(InvalidInputError):
        beta_d_core(BetaSet((2,)), 0)


def test_single_element_core_empty_iff_divisible():
    for x in range(1, 13):
        for d in range(1, 5):
            assert (beta_d_core(BetaSet((x,)), d) == BetaSet()) == (x % d == 0)


def test_hooks_listing():
    assert beta_hooks((1, 3, 4), 2) == [(4, 2)]
    assert beta_hooks((2, 4), 2) == [(2, 0)]


@given(raw_beta_sets, st.integers(min_value=1, max_value=3))
def test_shift_preserves_class(raw, times):
    assert beta_normalize(beta_shift(raw, times)) == beta_normalize(raw)


@given(raw_beta_sets, st.integers(min_value=1, max_value=3))
def test_equivalence_preserves_rank_and_defect(raw, times):
    shifted = beta_shift(raw, times)
    assert raw_rank(shifted) == raw_rank(tuple(raw))
    assert raw_defect(shifted) == raw_defect(tuple(raw))
    stats = beta_stats(beta_normalize(raw))
    assert (stats.rank, stats.defect) == (raw_rank(tuple(raw)), raw_defect(tuple(raw)))


@given(raw_beta_sets)
def test_partition_roundtrip(raw):
    b = beta_normalize(raw)
    assert partition_to_beta(beta_to_partition(b)) == b


@given(raw_beta_sets, hook_lengths, st.randoms(use_true_random=False))
def test_core_independent_of_removal_order(raw, d, rnd: random.Random):
    b = beta_normalize(raw)
    state = b.elements
    removed = 0
    while True:
        moves = beta_hooks(state, d)
        if not moves:
            break
        before = raw_rank(state)
        state = strip_zeros(remove_hook(state, rnd.choice(moves)))
        assert before - raw_rank(state) == d
        removed += 1
    assert BetaSet(state) == beta_d_core(b, d)
    assert beta_d_weight(b, d) == removed
    assert beta_stats(b).rank == beta_stats(beta_d_core(b, d)).rank + d * removed


@given(raw_beta_sets, hook_lengths)
def test_hook_moves_match_partition_side(raw, d):
    # a d-hook removal lowers the partition size by exactly d
    b = beta_normalize(raw)
    size = beta_to_partition(b).size
    for move in beta_hooks(b.elements, d):
        smaller = beta_normalize(remove_hook(b.elements, move))
        assert beta_to_partition(smaller).size == size - d


def test_render():
    assert str(BetaSet((1, 3))) == "(1 3)"
    assert str(BetaSet()) == "()"
    assert str(PartitionT((1, 2))) == "(1,2)"
