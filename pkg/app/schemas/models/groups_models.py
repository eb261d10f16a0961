# app/schemas/models/groups_models.py
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from app.schemas.enums.families_types import EXCEPTIONAL_NAMES, Family
from app.utility.exceptions import InvalidInputError

_FACTOR_PATTERN = re.compile(r"^(?P<family>2A|2D|A|B|C|D|T)(?P<rank>\d+)(?:/(?P<ext>\d+))?$")
_EXCEPTIONAL_PATTERN = re.compile(r"^(?P<name>" + "|".join(EXCEPTIONAL_NAMES) + r")(?:/(?P<ext>\d+))?$")

# smallest rank for which the family is a simple group of that type
_MIN_RANK = {
    Family.A: 1,
    Family.TWISTED_A: 1,
    Family.B: 1,
    Family.C: 1,
    Family.D: 2,
    Family.TWISTED_D: 2,
}


@dataclass(frozen=True)
class GroupFactor:
    family: Family
    rank: int
    ext_degree: int = 1
    name: Optional[str] = None  # EXC(name)

    def __post_init__(self):
        if self.ext_degree < 1:
            raise InvalidInputError(f"extension degree must be positive, got {self.ext_degree}")
        if self.family == Family.EXCEPTIONAL:
            if self.name not in EXCEPTIONAL_NAMES:
                raise InvalidInputError(f"unknown exceptional type {self.name!r}")
        elif self.family == Family.TORUS:
            if self.rank < 0:
                raise InvalidInputError(f"torus rank must be natural, got {self.rank}")
        elif self.rank < _MIN_RANK[self.family]:
            raise InvalidInputError(
                f"type {self.family.value} needs rank >= {_MIN_RANK[self.family]}, got {self.rank}"
            )

    @classmethod
    def parse(cls, text: str) -> GroupFactor:
        text = text.strip()
        match = _EXCEPTIONAL_PATTERN.match(text)
        if match:
            name = match["name"]
            return cls(Family.EXCEPTIONAL, _exceptional_rank(name), int(match["ext"] or 1), name)
        match = _FACTOR_PATTERN.match(text)
        if not match:
            raise InvalidInputError(f"cannot parse group factor {text!r}")
        return cls(Family(match["family"]), int(match["rank"]), int(match["ext"] or 1))

    def __str__(self) -> str:
        base = self.name if self.family == Family.EXCEPTIONAL else f"{self.family.value}{self.rank}"
        return base if self.ext_degree == 1 else f"{base}/{self.ext_degree}"


def _exceptional_rank(name: str) -> int:
    return int(name[-1])


@dataclass(frozen=True)
class FiniteGroupSpec:
    """A direct product of restrictions of scalars of simple groups (and tori)."""

    factors: tuple[GroupFactor, ...] = field(default=())

    @classmethod
    def parse(cls, text: str) -> FiniteGroupSpec:
        pieces = [piece for piece in re.split(r"\s*[x*]\s*", text.strip()) if piece]
        if not pieces:
            raise InvalidInputError("empty group specification")
        return cls(tuple(GroupFactor.parse(piece) for piece in pieces))

    @classmethod
    def simple(cls, family: Family, rank: int, ext_degree: int = 1) -> FiniteGroupSpec:
        return cls((GroupFactor(family, rank, ext_degree),))

    @property
    def is_classical(self) -> bool:
        return all(f.family != Family.EXCEPTIONAL for f in self.factors)

    def __str__(self) -> str:
        return " x ".join(str(f) for f in self.factors) if self.factors else "T0"
