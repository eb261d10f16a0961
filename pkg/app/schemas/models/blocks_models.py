# app/schemas/models/blocks_models.py
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from app.schemas.enums.blocks_regimes import GroupKind, Regime


@dataclass(frozen=True, order=True)
class SpType:
    """The unipotent depth-zero type t(s, s') of Sp_2n(F)."""

    s: int
    s2: int

    def __str__(self) -> str:
        return f"({self.s},{self.s2})"


@dataclass(frozen=True, order=True)
class ChamberType:
    """The only unipotent depth-zero type of SL_n(F): the chamber with its trivial character."""

    def __str__(self) -> str:
        return "(C,1)"


DepthZeroType = Union[SpType, ChamberType]


@dataclass(frozen=True)
class BlockPartition:
    group: GroupKind
    n: int
    q: int
    ell: int
    d: int
    regime: Regime
    classes: tuple[frozenset[DepthZeroType], ...] = ()
    merged_class_index: Optional[int] = None
    condition_star_star: bool = True
    k_thresholds: dict[str, int] = field(default_factory=dict)
    merge_vertices: dict[SpType, tuple[int, ...]] = field(default_factory=dict)

    def __hash__(self):
        return hash((self.group, self.n, self.q, self.ell, self.classes))

    @property
    def single_block(self) -> bool:
        return len(self.classes) == 1

    @property
    def types(self) -> set[DepthZeroType]:
        return {t for members in self.classes for t in members}

    def block_of(self, t: DepthZeroType) -> int:
        for index, members in enumerate(self.classes):
            if t in members:
                return index
        raise KeyError(t)
