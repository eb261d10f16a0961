# app/api/routers/unipotent_routers.py
import argparse

from app.api.routers._utils import (
    add_common_flags,
    add_group_flags,
    build_command,
    emit,
    group_input,
    render_char_text,
    resolve_group,
    unipotent_service_for,
)
from app.schemas.contracts.series_dtos import UnipotentListOut
from app.schemas.enums.output_formats import Subcommand
from app.schemas.settings import Settings


def register(subparsers) -> None:
    parser = subparsers.add_parser(Subcommand.UNIPOTENT.value, help="list unipotent character labels")
    add_group_flags(parser)
    add_common_flags(parser)
    parser.set_defaults(handler=list_unipotent)


def list_unipotent(args: argparse.Namespace, settings: Settings) -> int:
    """
    List the unipotent characters of a finite reductive group.

    β-sets label types A and 2A, symbols label B, C, D and 2D (degenerate D
    symbols carry #0 and #1), exceptional factors use their 1-series names.
    """
    command = build_command(Subcommand.UNIPOTENT, args, settings)
    g = resolve_group(command)
    service = unipotent_service_for(command)

    chars = service.enumerate_unipotent(g)
    out = UnipotentListOut(
        input=group_input(command, g),
        count=len(chars),
        labels=[str(c) for c in chars],
        trivial=str(service.trivial_char(g)),
    )
    emit(out, command.output_format, lambda: "\n\n".join(render_char_text(c) for c in chars))
    return 0
