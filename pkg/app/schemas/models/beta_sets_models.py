# app/schemas/models/beta_sets_models.py
from dataclasses import dataclass

from app.utility.exceptions import InvalidInputError


@dataclass(frozen=True, order=True)
class BetaSet:
    """Canonical representative of a class of β-sets: sorted, distinct, no 0 unless empty."""

    elements: tuple[int, ...] = ()

    def __post_init__(self):
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        if any(x < 0 for x in elements):
            raise InvalidInputError(f"β-set entries must be natural numbers: {elements}")
        if any(a >= b for a, b in zip(elements, elements[1:])):
            raise InvalidInputError(f"β-set entries must be strictly increasing: {elements}")
        if elements and elements[0] == 0:
            raise InvalidInputError(f"β-set {elements} is not in canonical form")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __str__(self) -> str:
        return "(" + " ".join(str(x) for x in self.elements) + ")"

    def __repr__(self):
        return f"<BetaSet{self}>"


@dataclass(frozen=True, order=True)
class PartitionT:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise InvalidInputError(f"partition parts must be positive: {parts}")
        if any(a > b for a, b in zip(parts, parts[1:])):
            raise InvalidInputError(f"partition parts must be weakly increasing: {parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"
