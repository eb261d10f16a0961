# app/api/routers/series_routers.py
import argparse

from app.api.routers._utils import (
    add_common_flags,
    add_group_flags,
    build_command,
    emit,
    group_input,
    resolve_group,
    sorted_class_labels,
    unipotent_service_for,
)
from app.schemas.contracts.series_dtos import D1PartitionMeta, D1PartitionOut
from app.schemas.enums.output_formats import Subcommand
from app.schemas.models.characters_models import D1Partition
from app.schemas.settings import Settings


def register(subparsers) -> None:
    parser = subparsers.add_parser(Subcommand.SERIES.value, help="partition unipotent characters into series")
    add_group_flags(parser)
    parser.add_argument("--d", type=int)
    parser.add_argument("--kind", choices=["one", "d", "d1"], default="d1", help="1-series, d-series or (d,1)-series")
    add_common_flags(parser)
    parser.set_defaults(handler=show_series)


def show_series(args: argparse.Namespace, settings: Settings) -> int:
    command = build_command(Subcommand.SERIES, args, settings)
    g = resolve_group(command)
    service = unipotent_service_for(command)

    if command.kind == "one":
        partition = service.one_series_partition(g)
    elif command.kind == "d":
        partition = service.d_series_partition(g, command.d)
    else:
        partition = service.d1_series_partition(g, command.d)

    thresholds = service.factor_thresholds(g, command.d) if command.d is not None else {}
    out = D1PartitionOut(
        input=group_input(command, g, d=command.d),
        regime=command.kind,
        classes=sorted_class_labels(partition.classes),
        meta=D1PartitionMeta(d=command.d, k_thresholds=thresholds, trivial_class_index=partition.trivial_class_index),
    )
    emit(out, command.output_format, lambda: _as_text(partition))
    return 0


def _as_text(partition: D1Partition) -> str:
    lines = []
    for index, labels in enumerate(sorted_class_labels(partition.classes)):
        marker = "  [trivial]" if partition.contains_trivial(index) else ""
        lines.append(f"class {index}{marker}:")
        lines.extend(f"  {label}" for label in labels)
    return "\n".join(lines)
