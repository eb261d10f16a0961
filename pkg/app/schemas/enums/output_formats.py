from enum import Enum


class OutputFormat(str, Enum):
    JSON = "json"
    TEXT = "text"


class Subcommand(str, Enum):
    UNIPOTENT = "unipotent"
    SERIES = "series"
    BLOCKS = "blocks"
    VERIFY = "verify"
    TABLE_CHECK = "table-check"
