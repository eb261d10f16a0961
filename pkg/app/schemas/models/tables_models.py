# app/schemas/models/tables_models.py
from dataclasses import dataclass, field


@dataclass(frozen=True)
class ExceptionalTable:
    """
    (d,1)-series of exceptional types written as classes of 1-series names.

    ``entries`` maps (type name, d) to its classes; ``series`` maps a type name
    to the names of all of its 1-series. A missing (type, d) key means the
    (d,1)-series are the 1-series.
    """

    entries: dict[tuple[str, int], tuple[frozenset[str], ...]] = field(default_factory=dict)
    series: dict[str, tuple[str, ...]] = field(default_factory=dict)

    def is_empty(self) -> bool:
        return not self.entries and not self.series
