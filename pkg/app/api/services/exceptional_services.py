# app/api/services/exceptional_services.py
import logging
from typing import Optional

from app.api.repositories.tables_repositories import ExceptionalTableRepository, get_table_repository
from app.schemas.enums.families_types import EXCEPTIONAL_NAMES
from app.schemas.models.tables_models import ExceptionalTable
from app.utility.exceptions import InvalidInputError, UnsupportedTypeError

logger = logging.getLogger(__name__)


class ExceptionalService:
    def __init__(self, table_repo: ExceptionalTableRepository, table: Optional[ExceptionalTable] = None):
        self.table_repo = table_repo
        self._table = table

    @property
    def table(self) -> ExceptionalTable:
        if self._table is None:
            self._table = self.table_repo.get_table()
        return self._table

    def series_names(self, type_name: str, table: Optional[ExceptionalTable] = None) -> tuple[str, ...]:
        """The declared 1-series of an exceptional type; a type without a SERIES line has none."""
        self._check_type(type_name)
        table = table if table is not None else self.table
        return table.series.get(type_name, ())

    def d1_series_exceptional(
        self, type_name: str, d: int, table: Optional[ExceptionalTable] = None
    ) -> list[frozenset[str]]:
        """
        The (d,1)-series of an exceptional type as classes of 1-series names.

        Stored classes come first; the remaining declared 1-series follow as
        singletons. Without a stored entry the (d,1)-series are the 1-series.
        """
        self._check_type(type_name)
        if d < 1:
            raise InvalidInputError(f"d must be positive, got {d}")
        table = table if table is not None else self.table

        stored = list(table.entries.get((type_name, d), ()))
        known = table.series.get(type_name)
        if known is None:
            logger.warning("no SERIES line for %s; only stored classes are known", type_name)
            known = ()
        if not stored:
            logger.debug("no (d,1) entry for %s d=%d, falling back to 1-series", type_name, d)

        covered = set().union(*stored) if stored else set()
        classes = sorted(stored, key=sorted)
        classes += [frozenset({name}) for name in known if name not in covered]
        return classes

    def enumerate_names(self, type_name: str) -> list[str]:
        names = self.series_names(type_name)
        if not names:
            raise UnsupportedTypeError(
                f"the exceptional table declares no 1-series for {type_name}; add a SERIES line"
            )
        return list(names)

    @staticmethod
    def _check_type(type_name: str) -> None:
        if type_name not in EXCEPTIONAL_NAMES:
            raise InvalidInputError(f"unknown exceptional type {type_name!r}")


# Dependency
def get_exceptional_service(
    table_repo: Optional[ExceptionalTableRepository] = None,
    table: Optional[ExceptionalTable] = None,
) -> ExceptionalService:
    return ExceptionalService(table_repo or get_table_repository(), table)
