# tests/test_unipotent_services.py
import pytest
from hypothesis import given, strategies as st

from app.api.services.exceptional_services import ExceptionalService
from app.api.services.unipotent_services import MERGED, UnipotentService, partitions_of, symbols_of
from app.schemas.enums.families_types import Family
from app.schemas.models.beta_sets_models import PartitionT
from app.schemas.models.groups_models import FiniteGroupSpec, GroupFactor
from app.schemas.models.symbols_models import Symbol
from app.utility.beta_sets import beta_d_core, partition_to_beta
from app.utility.cyclotomic import d_prime
from app.utility.exceptions import InvalidInputError, UnsupportedTypeError
from app.utility.union_find import common_coarsening


@pytest.fixture
def table_service(table_repo, sample_table) -> UnipotentService:
    return UnipotentService(ExceptionalService(table_repo, sample_table))


def _sizes(partition):
    return sorted(len(members) for members in partition.classes)


@pytest.mark.parametrize(
    "group, count",
    [
        ("A4", 7),
        ("2A3", 5),
        ("C1", 2),
        ("C2", 6),
        ("B2", 6),
        ("C3", 12),
        ("D2", 4),
        ("D4", 14),
        ("2D3", 5),
        ("T3", 1),
        ("C2xA1", 12),
        ("C2/3", 6),
    ],
)
def test_enumeration_counts(unipotent_service, group, count):
    assert len(unipotent_service.enumerate_unipotent(FiniteGroupSpec.parse(group))) == count


def test_enumeration_is_sorted_and_distinct(unipotent_service):
    chars = unipotent_service.enumerate_unipotent(FiniteGroupSpec.parse("C3xD2"))
    assert len(set(chars)) == len(chars)
    assert [c.sort_key for c in chars] == sorted(c.sort_key for c in chars)


def test_degenerate_symbols_are_labelled_twice(unipotent_service):
    labels = [str(c) for c in unipotent_service.enumerate_unipotent(FiniteGroupSpec.parse("D2"))]
    assert "(1 / 1)#0" in labels
    assert "(1 / 1)#1" in labels


def test_partitions_of():
    assert partitions_of(3) == [PartitionT((1, 1, 1)), PartitionT((1, 2)), PartitionT((3,))]
    assert partitions_of(0) == [PartitionT(())]


@pytest.mark.parametrize(
    "rank, defect, count",
    [(2, 1, 5), (2, 3, 1), (3, 3, 2), (2, 0, 3), (1, 5, 0), (4, 4, 1)],
)
def test_symbols_of_counts(rank, defect, count):
    assert len(symbols_of(rank, defect)) == count


def test_symbols_of_cuspidal():
    assert symbols_of(2, 3) == [Symbol((0, 1, 2), ())]


@pytest.mark.parametrize("group", ["A3", "2A3", "B3", "C3", "D4", "2D3", "T2", "C2xA1", "D3/2"])
def test_trivial_char_is_enumerated(unipotent_service, group):
    g = FiniteGroupSpec.parse(group)
    assert unipotent_service.trivial_char(g) in unipotent_service.enumerate_unipotent(g)


def test_one_series_of_c2(unipotent_service):
    partition = unipotent_service.one_series_partition(FiniteGroupSpec.parse("C2"))
    assert _sizes(partition) == [1, 5]
    assert len(partition.classes[partition.trivial_class_index]) == 5


def test_one_series_of_unitary_group_is_principal(unipotent_service):
    assert len(unipotent_service.one_series_partition(FiniteGroupSpec.parse("2A3"))) == 1
    assert _sizes(unipotent_service.one_series_partition(FiniteGroupSpec.parse("2A2"))) == [1, 2]


def test_d_series_of_type_a_beyond_coxeter_number(unipotent_service):
    partition = unipotent_service.d_series_partition(FiniteGroupSpec.parse("A3"), 5)
    assert _sizes(partition) == [1] * 5


def test_d_series_at_one_is_the_one_series(unipotent_service):
    g = FiniteGroupSpec.parse("C3")
    assert unipotent_service.d_series_partition(g, 1).as_sets() == unipotent_service.one_series_partition(g).as_sets()


def test_d_series_of_sp4_at_two_is_single(unipotent_service):
    assert len(unipotent_service.d_series_partition(FiniteGroupSpec.parse("C2"), 2)) == 1


def test_d_series_rejects_exceptional(table_service):
    with pytest.raises(UnsupportedTypeError):
        table_service.d_series_partition(FiniteGroupSpec.parse("G2"), 2)


@pytest.mark.parametrize(
    "group, d, expected",
    [("C2", 2, 3), ("C4", 2, 5), ("C2", 4, 3), ("C2", 6, -1), ("C5", 11, -1), ("D4", 2, 4), ("D4", 8, 2), ("2A3", 1, 4)],
)
def test_k_threshold(group, d, expected):
    factor = FiniteGroupSpec.parse(group).factors[0]
    assert UnipotentService.k_threshold(factor, d) == expected


@pytest.mark.parametrize("group", ["A3", "T1"])
def test_k_threshold_undefined(group):
    with pytest.raises(InvalidInputError):
        UnipotentService.k_threshold(FiniteGroupSpec.parse(group).factors[0], 2)


def test_k_threshold_rejects_bad_d():
    with pytest.raises(InvalidInputError):
        UnipotentService.k_threshold(GroupFactor(Family.C, 2), 0)


@given(
    st.sampled_from([Family.B, Family.C, Family.D, Family.TWISTED_D, Family.TWISTED_A]),
    st.integers(min_value=2, max_value=12),
    st.integers(min_value=1, max_value=20),
)
def test_k_threshold_decreases_with_d(family, n, d):
    factor = GroupFactor(family, n)
    assert UnipotentService.k_threshold(factor, d + 1) <= UnipotentService.k_threshold(factor, d)


def test_d1_series_of_c2(unipotent_service):
    g = FiniteGroupSpec.parse("C2")
    assert _sizes(unipotent_service.d1_series_partition(g, 2)) == [6]
    assert _sizes(unipotent_service.d1_series_partition(g, 4)) == [6]
    assert _sizes(unipotent_service.d1_series_partition(g, 6)) == [1, 5]
    assert _sizes(unipotent_service.d1_series_partition(g, 1)) == [1, 5]


def test_d1_series_refines_one_series(unipotent_service):
    g = FiniteGroupSpec.parse("C4")
    one_series = unipotent_service.one_series_partition(g)
    for d in range(1, 10):
        d1 = unipotent_service.d1_series_partition(g, d)
        for members in one_series.classes:
            assert len({d1.class_of(c) for c in members}) == 1


@pytest.mark.parametrize("group", ["C3", "B4", "D4", "2D4", "2A4"])
@pytest.mark.parametrize("d", range(1, 9))
def test_trivial_class_holds_the_merged_defects(unipotent_service, group, d):
    g = FiniteGroupSpec.parse(group)
    partition = unipotent_service.d1_series_partition(g, d)
    trivial = unipotent_service.trivial_char(g)
    assert partition.contains_trivial(partition.class_of(trivial))
    key = unipotent_service.d1_series_key(trivial.components[0], g.factors[0], d)
    others = [c for c in partition.classes[partition.trivial_class_index] if c != trivial]
    if key == MERGED:
        assert all(
            unipotent_service.d1_series_key(c.components[0], g.factors[0], d) == MERGED for c in others
        )


def test_d1_series_of_unitary_group_merges_for_odd_d_prime(unipotent_service):
    assert len(unipotent_service.d1_series_partition(FiniteGroupSpec.parse("2A3"), 2)) == 1


def test_d1_series_of_type_a_is_single(unipotent_service):
    assert len(unipotent_service.d1_series_partition(FiniteGroupSpec.parse("A4"), 3)) == 1


def test_d1_series_of_products(unipotent_service):
    g = FiniteGroupSpec.parse("C2xC2")
    assert _sizes(unipotent_service.d1_series_partition(g, 2)) == [36]
    assert _sizes(unipotent_service.d1_series_partition(g, 6)) == [1, 5, 5, 25]


def test_d1_series_with_restriction_of_scalars(unipotent_service):
    g = FiniteGroupSpec.parse("C2/2")
    assert len(unipotent_service.d1_series_partition(g, 4)) == 1
    assert len(unipotent_service.d1_series_partition(g, 3)) == 2
    assert unipotent_service.factor_thresholds(g, 4) == {"0:C2/2": 3}


def test_factor_thresholds(unipotent_service):
    thresholds = unipotent_service.factor_thresholds(FiniteGroupSpec.parse("C2xA1x2A3"), 2)
    assert thresholds == {"0:C2": 3, "1:A1": None, "2:2A3": 4}


def test_d1_series_of_exceptional_factor(table_service):
    g = FiniteGroupSpec.parse("G2")
    partition = table_service.d1_series_partition(g, 3)
    assert _sizes(partition) == [1, 1, 1, 2]
    assert {str(c) for c in partition.classes[partition.trivial_class_index]} == {"1", "G2[θ]"}
    assert _sizes(table_service.d1_series_partition(g, 2)) == [1] * 5


def test_d1_series_of_f4_falls_back_outside_stored_d(table_service):
    g = FiniteGroupSpec.parse("F4")
    assert _sizes(table_service.d1_series_partition(g, 2)) == [1, 1, 5]
    assert _sizes(table_service.d1_series_partition(g, 4)) == [1] * 7


def test_exceptional_factor_without_series(unipotent_service):
    with pytest.raises(UnsupportedTypeError):
        unipotent_service.enumerate_unipotent(FiniteGroupSpec.parse("E8"))


def test_one_series_of_exceptional_factor_uses_names(table_service):
    assert _sizes(table_service.one_series_partition(FiniteGroupSpec.parse("G2"))) == [1] * 5


def test_d1_series_rejects_bad_d(unipotent_service):
    with pytest.raises(InvalidInputError):
        unipotent_service.d1_series_partition(FiniteGroupSpec.parse("C2"), 0)


@given(
    st.sampled_from([Family.B, Family.C, Family.D, Family.TWISTED_D, Family.TWISTED_A]),
    st.integers(min_value=2, max_value=12),
    st.integers(min_value=0, max_value=8),
    st.integers(min_value=1, max_value=20),
)
def test_k_threshold_grows_with_rank(family, n, extra, d):
    small, large = GroupFactor(family, n), GroupFactor(family, n + extra)
    assert UnipotentService.k_threshold(small, d) <= UnipotentService.k_threshold(large, d)


def _partition_classes(partition) -> set[frozenset[PartitionT]]:
    return {frozenset(char.components[0].partition for char in members) for members in partition.classes}


def _classes_by(items, key) -> list[list]:
    grouped: dict = {}
    for item in items:
        grouped.setdefault(key(item), []).append(item)
    return list(grouped.values())


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("d", range(1, 9))
def test_twisted_a_series_match_cores_of_partitions(unipotent_service, n, d):
    g = FiniteGroupSpec.simple(Family.TWISTED_A, n)
    shapes = partitions_of(n + 1)
    by_two_core = _classes_by(shapes, lambda p: beta_d_core(partition_to_beta(p), 2))
    by_d_core = _classes_by(shapes, lambda p: beta_d_core(partition_to_beta(p), d_prime(d)))

    assert _partition_classes(unipotent_service.d_series_partition(g, d)) == {frozenset(c) for c in by_d_core}
    assert _partition_classes(unipotent_service.d1_series_partition(g, d)) == common_coarsening(
        shapes, by_two_core, by_d_core
    )
