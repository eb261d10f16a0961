# app/schemas/models/symbols_models.py
from dataclasses import dataclass

from app.utility.exceptions import InvalidInputError


def _row_text(row: tuple[int, ...]) -> str:
    return " ".join(str(x) for x in row) if row else "-"


@dataclass(frozen=True, order=True)
class Symbol:
    """
    Canonical representative of an unordered pair {S, T} of finite sets of naturals.

    Rows are sorted, 0 never lies in both rows, and (|S|, S) >= (|T|, T) so that
    the unordered pair has a single stored orientation.
    """

    row_s: tuple[int, ...] = ()
    row_t: tuple[int, ...] = ()

    def __post_init__(self):
        s, t = tuple(self.row_s), tuple(self.row_t)
        object.__setattr__(self, "row_s", s)
        object.__setattr__(self, "row_t", t)
        for row in (s, t):
            if any(x < 0 for x in row):
                raise InvalidInputError(f"symbol entries must be natural numbers: {row}")
            if any(a >= b for a, b in zip(row, row[1:])):
                raise InvalidInputError(f"symbol rows must be strictly increasing: {row}")
        if s and t and s[0] == 0 and t[0] == 0:
            raise InvalidInputError(f"symbol {self} has 0 in both rows")
        if (len(s), s) < (len(t), t):
            raise InvalidInputError(f"symbol rows of {self} are not in canonical order")

    @property
    def is_degenerate(self) -> bool:
        return self.row_s == self.row_t

    def __str__(self) -> str:
        return f"({_row_text(self.row_s)} / {_row_text(self.row_t)})"

    def __repr__(self):
        return f"<Symbol{self}>"
