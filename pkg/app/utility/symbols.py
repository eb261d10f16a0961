# app/utility/symbols.py
"""
Symbol calculus for types B, C, D and ²D: normal forms, rank, defect, maxima,
d-hooks / d-cores and d-cohooks / d-cocores.
"""
from typing import Iterable, NamedTuple

from app.schemas.models.symbols_models import Symbol
from app.utility.beta_sets import slide_to_core
from app.utility.exceptions import InvalidInputError

RawSymbol = tuple[tuple[int, ...], tuple[int, ...]]


class SymbolStats(NamedTuple):
    rank: int
    defect: int
    class_max: int


def _checked_row(row: Iterable[int]) -> tuple[int, ...]:
    values = list(row)
    if len(set(values)) != len(values):
        raise InvalidInputError(f"symbol row has duplicate entries: {values}")
    if any(x < 0 for x in values):
        raise InvalidInputError(f"symbol entries must be natural numbers: {values}")
    return tuple(sorted(values))


def _check_d(d: int) -> None:
    if d < 1:
        raise InvalidInputError(f"hook length must be positive, got {d}")


def _orient(s: tuple[int, ...], t: tuple[int, ...]) -> RawSymbol:
    return (s, t) if (len(s), s) >= (len(t), t) else (t, s)


def canonical_raw(s: tuple[int, ...], t: tuple[int, ...]) -> RawSymbol:
    """Strip simultaneous zeros from two sorted rows and fix the row order."""
    j = 0
    while j < len(s) and j < len(t) and s[j] == j and t[j] == j:
        j += 1
    return _orient(tuple(x - j for x in s[j:]), tuple(y - j for y in t[j:]))


def symbol_normalize(row_s: Iterable[int], row_t: Iterable[int]) -> Symbol:
    return Symbol(*canonical_raw(_checked_row(row_s), _checked_row(row_t)))


def symbol_shift(s: Symbol, times: int = 1) -> RawSymbol:
    pad = tuple(range(times))
    return (
        pad + tuple(x + times for x in s.row_s),
        pad + tuple(y + times for y in s.row_t),
    )


def raw_rank(s: tuple[int, ...], t: tuple[int, ...]) -> int:
    return sum(s) + sum(t) - (len(s) + len(t) - 1) ** 2 // 4


def symbol_stats(sym: Symbol) -> SymbolStats:
    union = sym.row_s + sym.row_t
    return SymbolStats(
        rank=raw_rank(sym.row_s, sym.row_t),
        defect=abs(len(sym.row_s) - len(sym.row_t)),
        class_max=max(union) if union else 0,
    )


def symbol_hooks(raw: RawSymbol, d: int) -> list[tuple[int, int]]:
    """Legal d-hook removals as (row index, x): x -> x - d inside row ``row index``."""
    _check_d(d)
    moves = []
    for index, row in enumerate(raw):
        present = set(row)
        moves.extend((index, x) for x in row if x - d >= 0 and x - d not in present)
    return moves


def symbol_cohooks(raw: RawSymbol, d: int) -> list[tuple[int, int]]:
    """Legal d-cohook removals as (row index, x): x leaves its row, x - d joins the other."""
    _check_d(d)
    moves = []
    for index, row in enumerate(raw):
        other = set(raw[1 - index])
        moves.extend((index, x) for x in row if x - d >= 0 and x - d not in other)
    return moves


def remove_hook(raw: RawSymbol, move: tuple[int, int], d: int) -> RawSymbol:
    index, x = move
    rows = [list(raw[0]), list(raw[1])]
    rows[index].remove(x)
    rows[index].append(x - d)
    return tuple(sorted(rows[0])), tuple(sorted(rows[1]))


def remove_cohook(raw: RawSymbol, move: tuple[int, int], d: int) -> RawSymbol:
    index, x = move
    rows = [list(raw[0]), list(raw[1])]
    rows[index].remove(x)
    rows[1 - index].append(x - d)
    return tuple(sorted(rows[0])), tuple(sorted(rows[1]))


def symbol_d_core(sym: Symbol, d: int) -> Symbol:
    # hooks never cross rows, so each row slides on its own d-abacus
    _check_d(d)
    return Symbol(*canonical_raw(slide_to_core(sym.row_s, d), slide_to_core(sym.row_t, d)))


def symbol_d_cocore(sym: Symbol, d: int) -> Symbol:
    _check_d(d)
    raw: RawSymbol = (sym.row_s, sym.row_t)
    while True:
        moves = symbol_cohooks(raw, d)
        if not moves:
            return Symbol(*canonical_raw(*raw))
        raw = remove_cohook(raw, moves[0], d)


def render_symbol_rows(sym: Symbol) -> str:
    """Two-row rendering, the upper row holding the longer set."""
    top = " ".join(str(x) for x in sym.row_s)
    bottom = " ".join(str(y) for y in sym.row_t)
    width = max(len(top), len(bottom))
    return f"( {top.ljust(width)} )\n( {bottom.ljust(width)} )"
