# app/schemas/models/characters_models.py
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from app.schemas.enums.families_types import Family
from app.schemas.models.beta_sets_models import PartitionT
from app.schemas.models.groups_models import FiniteGroupSpec
from app.schemas.models.symbols_models import Symbol
from app.utility.beta_sets import partition_to_beta


@dataclass(frozen=True)
class CharLabel:
    """Label of a unipotent character of one factor of a FiniteGroupSpec."""

    factor_index: int
    family: Family
    partition: Optional[PartitionT] = None  # A, 2A
    symbol: Optional[Symbol] = None  # B, C, D, 2D
    degenerate_index: Optional[int] = None  # 0/1 for identical-row D symbols
    name: Optional[str] = None  # exceptional 1-series name

    def __str__(self) -> str:
        if self.partition is not None:
            return str(partition_to_beta(self.partition))
        if self.symbol is not None:
            suffix = f"#{self.degenerate_index}" if self.degenerate_index is not None else ""
            return f"{self.symbol}{suffix}"
        if self.name is not None:
            return self.name
        return "1"


@dataclass(frozen=True)
class UnipotentChar:
    components: tuple[CharLabel, ...] = ()

    def __str__(self) -> str:
        return " x ".join(str(c) for c in self.components) if self.components else "1"

    @property
    def sort_key(self) -> tuple:
        return tuple((c.factor_index, str(c)) for c in self.components)


def sorted_chars(chars: Iterable[UnipotentChar]) -> list[UnipotentChar]:
    return sorted(chars, key=lambda c: c.sort_key)


@dataclass(frozen=True)
class D1Partition:
    """A partition of the unipotent labels of ``group`` into classes."""

    group: FiniteGroupSpec
    classes: tuple[frozenset[UnipotentChar], ...] = field(default=())
    trivial_class_index: Optional[int] = None
    d: Optional[int] = None

    def class_of(self, char: UnipotentChar) -> int:
        for index, members in enumerate(self.classes):
            if char in members:
                return index
        raise KeyError(char)

    def as_sets(self) -> set[frozenset[UnipotentChar]]:
        return set(self.classes)

    def contains_trivial(self, index: int) -> bool:
        return index == self.trivial_class_index

    def __len__(self) -> int:
        return len(self.classes)
