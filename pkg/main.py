# main.py
import logging
import sys
from logging.config import fileConfig
from typing import Optional, Sequence

from app.api.routers import blocks_routers, series_routers, tables_routers, unipotent_routers, verify_routers
from app.api.routers._utils import CommandParser
from app.schemas.settings import Settings, get_settings
from app.utility.exceptions import DomainException

logger = logging.getLogger("app.main")


def configure_logging(settings: Settings) -> None:
    # Interpret the config file for Python logging
    if settings.log_config.is_file():
        fileConfig(settings.log_config, disable_existing_loggers=False)
    else:
        logging.basicConfig(level=logging.WARNING, format="%(levelname)-5.5s [%(name)s] %(message)s")


def build_parser() -> CommandParser:
    parser = CommandParser(
        prog="dunblocks",
        description="Unipotent (d,1)-series of finite classical groups and depth-zero ℓ-blocks of Sp_2n and SL_n.",
    )
    parser.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    subparsers = parser.add_subparsers(dest="subcommand", required=True, parser_class=CommandParser)

    # Include routers
    unipotent_routers.register(subparsers)
    series_routers.register(subparsers)
    blocks_routers.register(subparsers)
    verify_routers.register(subparsers)
    tables_routers.register(subparsers)
    return parser


def run(argv: Optional[Sequence[str]] = None, settings: Optional[Settings] = None) -> int:
    settings = settings or get_settings()
    configure_logging(settings)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.verbose:
            logging.getLogger("app").setLevel(logging.DEBUG)
        return args.handler(args, settings)
    except DomainException as exc:
        logger.error("%s", exc.detail)
        return exc.exit_code
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
