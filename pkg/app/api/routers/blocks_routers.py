# app/api/routers/blocks_routers.py
import argparse

from app.api.routers._utils import add_common_flags, build_command, emit, unipotent_service_for
from app.api.services.blocks_services import BlockService
from app.schemas.contracts.blocks_dtos import BlockPartitionMeta, BlockPartitionOut
from app.schemas.enums.blocks_regimes import GroupKind
from app.schemas.enums.output_formats import Subcommand
from app.schemas.models.blocks_models import BlockPartition
from app.schemas.settings import Settings


def register(subparsers) -> None:
    parser = subparsers.add_parser(Subcommand.BLOCKS.value, help="unipotent depth-zero ℓ-blocks of Sp_2n or SL_n")
    parser.add_argument("--group", choices=[kind.value for kind in GroupKind], required=True)
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--q", type=int, required=True)
    parser.add_argument("--ell", type=int, required=True)
    add_common_flags(parser)
    parser.set_defaults(handler=show_blocks)


def show_blocks(args: argparse.Namespace, settings: Settings) -> int:
    command = build_command(Subcommand.BLOCKS, args, settings)
    service = BlockService(unipotent_service_for(command))

    if command.group == GroupKind.SP.value:
        partition = service.sp_block_partition(command.n, command.q, command.ell)
    else:
        partition = service.sl_block_partition(command.n, command.q, command.ell)

    out = BlockPartitionOut(
        input={"group": command.group, "n": command.n, "q": command.q, "ell": command.ell},
        regime=partition.regime,
        classes=[[str(t) for t in sorted(members)] for members in partition.classes],
        meta=BlockPartitionMeta(
            d=partition.d,
            q=partition.q,
            ell=partition.ell,
            k_thresholds=partition.k_thresholds,
            merged_class_index=partition.merged_class_index,
            single_block=partition.single_block,
            condition_star_star=partition.condition_star_star,
            merge_vertices={str(t): list(vertices) for t, vertices in partition.merge_vertices.items()},
        ),
    )
    emit(out, command.output_format, lambda: _as_text(partition))
    return 0


def _as_text(partition: BlockPartition) -> str:
    lines = [f"regime {partition.regime.value}, d={partition.d}"]
    for index, members in enumerate(partition.classes):
        marker = "  [merged]" if index == partition.merged_class_index and not partition.single_block else ""
        lines.append(f"block {index}{marker}: " + " ".join(str(t) for t in sorted(members)))
    return "\n".join(lines)
