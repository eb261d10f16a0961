# app/api/routers/verify_routers.py
import argparse
import asyncio

from app.api.routers._utils import add_common_flags, build_command, unipotent_service_for
from app.api.services.blocks_services import BlockService
from app.api.services.oracles_services import OracleService
from app.schemas.enums.output_formats import OutputFormat, Subcommand
from app.schemas.settings import Settings
from app.utility.exceptions import VerificationFailed


def register(subparsers) -> None:
    parser = subparsers.add_parser(Subcommand.VERIFY.value, help="run the brute-force oracle suite")
    parser.add_argument("--max-rank", dest="max_rank", type=int)
    parser.add_argument("--max-d", dest="max_d", type=int)
    parser.add_argument("--n", type=int)
    parser.add_argument("--q", type=int)
    parser.add_argument("--ell", type=int)
    add_common_flags(parser)
    parser.set_defaults(handler=run_verify)


def run_verify(args: argparse.Namespace, settings: Settings) -> int:
    command = build_command(Subcommand.VERIFY, args, settings)
    unipotent_service = unipotent_service_for(command)
    oracle = OracleService(unipotent_service, BlockService(unipotent_service))

    reports = asyncio.run(
        oracle.run_suite(
            max_rank=command.max_rank if command.max_rank is not None else settings.verify_max_rank,
            max_d=command.max_d if command.max_d is not None else settings.verify_max_d,
            n=command.n,
            q=command.q,
            ell=command.ell,
        )
    )
    for report in reports:
        if command.output_format == OutputFormat.TEXT:
            status = "PASS" if report.passed else "FAIL"
            detail = f"  {report.counterexample}" if report.counterexample else ""
            print(f"{status} {report.name} {report.params}{detail}")
        else:
            print(report.model_dump_json())

    failed = [report.name for report in reports if not report.passed]
    if failed:
        raise VerificationFailed(f"failed checks: {', '.join(failed)}")
    return 0
