# app/utility/beta_sets.py
"""
β-set calculus: normal forms, rank, defect, maxima, d-hooks and d-cores.

Raw β-sets are plain tuples of naturals; only canonical representatives are
wrapped in :class:`BetaSet`.
"""
from typing import Iterable, NamedTuple

from app.schemas.models.beta_sets_models import BetaSet, PartitionT
from app.utility.exceptions import InvalidInputError


class BetaStats(NamedTuple):
    rank: int
    defect: int
    class_max: int


def _checked(raw: Iterable[int]) -> tuple[int, ...]:
    values = list(raw)
    if len(set(values)) != len(values):
        raise InvalidInputError(f"β-set has duplicate entries: {values}")
    if any(x < 0 for x in values):
        raise InvalidInputError(f"β-set entries must be natural numbers: {values}")
    return tuple(sorted(values))


def _check_d(d: int) -> None:
    if d < 1:
        raise InvalidInputError(f"hook length must be positive, got {d}")


def strip_zeros(elements: tuple[int, ...]) -> tuple[int, ...]:
    # elements sorted and distinct: 0..j-1 present means j strip steps
    j = 0
    while j < len(elements) and elements[j] == j:
        j += 1
    return tuple(x - j for x in elements[j:])


def beta_normalize(raw: Iterable[int]) -> BetaSet:
    return BetaSet(strip_zeros(_checked(raw)))


def beta_shift(elements: Iterable[int], times: int = 1) -> tuple[int, ...]:
    """The equivalence step λ -> {0} ∪ (λ + 1), applied ``times`` times."""
    elements = _checked(elements)
    return tuple(range(times)) + tuple(x + times for x in elements)


def raw_rank(elements: tuple[int, ...]) -> int:
    a = len(elements)
    return sum(elements) - a * (a - 1) // 2


def raw_defect(elements: tuple[int, ...]) -> int:
    odd = sum(1 for x in elements if x % 2)
    even = len(elements) - odd
    return odd - even if odd >= even else even - odd - 1


def beta_stats(b: BetaSet) -> BetaStats:
    elements = b.elements
    class_max = elements[-1] if elements else 0
    return BetaStats(raw_rank(elements), raw_defect(elements), class_max)


def partition_to_beta(p: PartitionT) -> BetaSet:
    return beta_normalize(a + i for i, a in enumerate(p.parts))


def beta_to_partition(b: BetaSet) -> PartitionT:
    return PartitionT(tuple(x - i for i, x in enumerate(b.elements)))


def beta_hooks(elements: Iterable[int], d: int) -> list[tuple[int, int]]:
    """Every legal d-hook removal (x, x - d) of a raw β-set."""
    _check_d(d)
    present = set(elements)
    return sorted((x, x - d) for x in present if x - d >= 0 and x - d not in present)


def remove_hook(elements: Iterable[int], move: tuple[int, int]) -> tuple[int, ...]:
    source, target = move
    return tuple(sorted((set(elements) - {source}) | {target}))


def slide_to_core(elements: Iterable[int], d: int) -> tuple[int, ...]:
    """Push every bead of the d-abacus to the top of its runner."""
    _check_d(d)
    counts = [0] * d
    for x in elements:
        counts[x % d] += 1
    return tuple(sorted(r + k * d for r in range(d) for k in range(counts[r])))


def beta_d_core(b: BetaSet, d: int) -> BetaSet:
    return BetaSet(strip_zeros(slide_to_core(b.elements, d)))


def beta_d_weight(b: BetaSet, d: int) -> int:
    """Number of d-hooks removed on the way to the d-core."""
    return (raw_rank(b.elements) - raw_rank(beta_d_core(b, d).elements)) // d
