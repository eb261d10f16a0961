# app/api/repositories/_utils.py
from typing import List


def strip_comment(line: str) -> str:
    """Drop a trailing ``#`` comment and surrounding whitespace."""
    return line.split("#", 1)[0].strip()


def parse_name_list(text: str) -> List[str]:
    """Split a comma separated list of 1-series names, ignoring empty items."""
    return [name.strip() for name in text.split(",") if name.strip()]
