# app/api/repositories/tables_repositories.py
import logging
from pathlib import Path
from typing import Iterable, Optional

from app.api.repositories._utils import parse_name_list, strip_comment
from app.schemas.enums.families_types import EXCEPTIONAL_NAMES
from app.schemas.models.tables_models import ExceptionalTable
from app.schemas.settings import Settings, get_settings
from app.utility.exceptions import InvalidInputError, TableParseError, TableValidationError

logger = logging.getLogger(__name__)

_TYPE_ORDER = {name: position for position, name in enumerate(EXCEPTIONAL_NAMES)}


class ExceptionalTableRepository:
    def __init__(self, default_path: Optional[Path] = None):
        self.default_path = default_path
        self._cache: dict[Path, ExceptionalTable] = {}

    def load_table(self, source: Iterable[str]) -> ExceptionalTable:
        """
        Parse the line format

            SERIES <TYPE> : name, name, ...
            <TYPE> <d> : {name, name} ; {name} ...

        with ``#`` comments and blank lines ignored.

        Raises:
            TableParseError: on a malformed line (carries the line number).
            TableValidationError: on duplicate keys or overlapping classes.
        """
        entries: dict[tuple[str, int], tuple[frozenset[str], ...]] = {}
        series: dict[str, tuple[str, ...]] = {}

        for line_number, raw_line in enumerate(source, start=1):
            line = strip_comment(raw_line)
            if not line:
                continue
            head, sep, body = line.partition(":")
            if not sep:
                raise TableParseError(line_number, "missing ':' separator")
            words = head.split()

            if words and words[0] == "SERIES":
                if len(words) != 2:
                    raise TableParseError(line_number, "expected 'SERIES <TYPE> : names'")
                type_name = self._checked_type(words[1], line_number)
                if type_name in series:
                    raise TableValidationError(f"line {line_number}: duplicate SERIES line for {type_name}")
                names = parse_name_list(body)
                if len(set(names)) != len(names):
                    raise TableValidationError(f"line {line_number}: repeated 1-series name for {type_name}")
                series[type_name] = tuple(names)
                continue

            if len(words) != 2:
                raise TableParseError(line_number, "expected '<TYPE> <d> : {...} ; {...}'")
            type_name = self._checked_type(words[0], line_number)
            try:
                d = int(words[1])
            except ValueError:
                raise TableParseError(line_number, f"d must be an integer, got {words[1]!r}")
            if d < 1:
                raise TableParseError(line_number, f"d must be positive, got {d}")
            key = (type_name, d)
            if key in entries:
                raise TableValidationError(f"line {line_number}: duplicate entry for {type_name} d={d}")
            entries[key] = self._parse_classes(body, line_number)

        table = ExceptionalTable(entries=entries, series=series)
        self._validate(table)
        logger.debug("loaded exceptional table: %d entries, %d series lists", len(entries), len(series))
        return table

    def load_path(self, path: Path) -> ExceptionalTable:
        path = Path(path)
        if path not in self._cache:
            try:
                with path.open(encoding="utf-8") as stream:
                    self._cache[path] = self.load_table(stream)
            except UnicodeDecodeError as exc:
                raise InvalidInputError(f"{path} is not UTF-8 text: {exc.reason} at byte {exc.start}")
            except OSError as exc:
                raise InvalidInputError(f"cannot read exceptional table {path}: {exc.strerror}")
        return self._cache[path]

    def get_table(self, path: Optional[Path] = None) -> ExceptionalTable:
        path = path or self.default_path
        if path is None:
            return ExceptionalTable()
        return self.load_path(path)

    def dump_table(self, table: ExceptionalTable) -> str:
        lines = []
        for type_name in sorted(table.series, key=_TYPE_ORDER.get):
            lines.append(f"SERIES {type_name} : " + ", ".join(table.series[type_name]))
        for type_name, d in sorted(table.entries, key=lambda key: (_TYPE_ORDER[key[0]], key[1])):
            classes = sorted(sorted(c) for c in table.entries[(type_name, d)])
            rendered = " ; ".join("{" + ", ".join(names) + "}" for names in classes)
            lines.append(f"{type_name} {d} : {rendered}")
        return "\n".join(lines) + ("\n" if lines else "")

    @staticmethod
    def _checked_type(word: str, line_number: int) -> str:
        if word not in _TYPE_ORDER:
            raise TableParseError(line_number, f"unknown exceptional type {word!r}")
        return word

    @staticmethod
    def _parse_classes(body: str, line_number: int) -> tuple[frozenset[str], ...]:
        classes = []
        for chunk in body.split(";"):
            chunk = chunk.strip()
            if not (chunk.startswith("{") and chunk.endswith("}")):
                raise TableParseError(line_number, f"class must be written as {{...}}, got {chunk!r}")
            names = parse_name_list(chunk[1:-1])
            if not names:
                raise TableParseError(line_number, "empty class")
            if len(set(names)) != len(names):
                raise TableValidationError(f"line {line_number}: repeated name inside a class")
            classes.append(frozenset(names))
        return tuple(classes)

    @staticmethod
    def _validate(table: ExceptionalTable) -> None:
        for (type_name, d), classes in table.entries.items():
            seen: set[str] = set()
            for members in classes:
                overlap = seen & members
                if overlap:
                    raise TableValidationError(
                        f"{type_name} d={d}: classes overlap on {sorted(overlap)}"
                    )
                seen |= members
            known = table.series.get(type_name)
            if known is not None and not seen <= set(known):
                raise TableValidationError(
                    f"{type_name} d={d}: unknown 1-series {sorted(seen - set(known))}"
                )


# Dependency
def get_table_repository(settings: Optional[Settings] = None) -> ExceptionalTableRepository:
    settings = settings or get_settings()
    return ExceptionalTableRepository(settings.exceptional_table)
