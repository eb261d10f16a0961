# app/api/routers/_utils.py
import argparse
from typing import Any, Callable, Iterable, Optional

from pydantic import BaseModel, ValidationError

from app.api.repositories.tables_repositories import ExceptionalTableRepository
from app.api.services.exceptional_services import ExceptionalService
from app.api.services.unipotent_services import UnipotentService
from app.schemas.contracts.commands_dtos import Command
from app.schemas.enums.output_formats import OutputFormat, Subcommand
from app.schemas.models.characters_models import UnipotentChar
from app.schemas.models.groups_models import FiniteGroupSpec
from app.schemas.settings import Settings
from app.utility.exceptions import InvalidInputError
from app.utility.symbols import render_symbol_rows

Handler = Callable[[argparse.Namespace, Settings], int]


class CommandParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors become InvalidInputError (exit code 1)."""

    def error(self, message: str):
        raise InvalidInputError(f"{self.prog}: {message}")


def add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", dest="output_format", choices=[f.value for f in OutputFormat], default=None)
    parser.add_argument("--exceptional-table", dest="exceptional_table", default=None, metavar="PATH")


def add_group_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--type", dest="family", help="A, 2A, B, C, D, 2D, T or an exceptional name")
    parser.add_argument("--rank", type=int)
    parser.add_argument("--ext", dest="ext_degree", type=int, default=1, help="restriction of scalars degree")
    parser.add_argument("--group", help="product spec such as C2xC2 or 2A3/2")


def build_command(subcommand: Subcommand, args: argparse.Namespace, settings: Settings) -> Command:
    values: dict[str, Any] = {
        key: value for key, value in vars(args).items() if key in Command.model_fields and value is not None
    }
    values["subcommand"] = subcommand
    values.setdefault("output_format", settings.output_format)
    if settings.exceptional_table is not None:
        values.setdefault("exceptional_table", settings.exceptional_table)
    try:
        return Command.model_validate(values)
    except ValidationError as exc:
        details = "; ".join(error["msg"] for error in exc.errors())
        raise InvalidInputError(f"invalid {subcommand.value} command: {details}")


def resolve_group(command: Command) -> FiniteGroupSpec:
    if command.group:
        return FiniteGroupSpec.parse(command.group)
    if command.family is None:
        raise InvalidInputError("give --group or --type (with --rank)")
    text = command.family if command.rank is None else f"{command.family}{command.rank}"
    if command.ext_degree > 1:
        text += f"/{command.ext_degree}"
    return FiniteGroupSpec.parse(text)


def unipotent_service_for(command: Command) -> UnipotentService:
    repository = ExceptionalTableRepository(command.exceptional_table)
    return UnipotentService(ExceptionalService(repository))


def group_input(command: Command, g: FiniteGroupSpec, **extra: Any) -> dict[str, Any]:
    return {"group": str(g), **{key: value for key, value in extra.items() if value is not None}}


def sorted_class_labels(classes: Iterable[frozenset[UnipotentChar]]) -> list[list[str]]:
    return [[str(c) for c in sorted(members, key=lambda c: c.sort_key)] for members in classes]


def render_char_text(char: UnipotentChar) -> str:
    blocks = []
    for label in char.components:
        if label.symbol is not None:
            suffix = f"  #{label.degenerate_index}" if label.degenerate_index is not None else ""
            blocks.append(render_symbol_rows(label.symbol) + suffix)
        else:
            blocks.append(str(label))
    return "\n x\n".join(blocks)


def emit(model: BaseModel, output_format: OutputFormat, text: Optional[Callable[[], str]] = None) -> None:
    if output_format == OutputFormat.TEXT and text is not None:
        print(text())
    else:
        print(model.model_dump_json())
