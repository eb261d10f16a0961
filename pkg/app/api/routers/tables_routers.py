# app/api/routers/tables_routers.py
import argparse

from app.api.repositories.tables_repositories import ExceptionalTableRepository
from app.api.routers._utils import add_common_flags, build_command, emit
from app.schemas.contracts.tables_dtos import TableCheckOut
from app.schemas.enums.output_formats import Subcommand
from app.schemas.settings import Settings


def register(subparsers) -> None:
    parser = subparsers.add_parser(Subcommand.TABLE_CHECK.value, help="validate an exceptional (d,1)-series table")
    parser.add_argument("--dump", action="store_true", help="print the table in normal form")
    add_common_flags(parser)
    parser.set_defaults(handler=check_table)


def check_table(args: argparse.Namespace, settings: Settings) -> int:
    command = build_command(Subcommand.TABLE_CHECK, args, settings)
    repository = ExceptionalTableRepository()
    table = repository.load_path(command.exceptional_table)

    if args.dump:
        print(repository.dump_table(table), end="")
        return 0

    out = TableCheckOut(
        path=str(command.exceptional_table),
        entries=len(table.entries),
        series_types=sorted(table.series),
        keys=[f"{type_name} {d}" for type_name, d in sorted(table.entries)],
    )
    emit(out, command.output_format, lambda: f"{out.path}: {out.entries} entries, SERIES for {', '.join(out.series_types) or 'no type'}")
    return 0
