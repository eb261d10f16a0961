# app/utility/exceptions.py
from typing import Optional


class DomainException(Exception):
    """Error raised by the library; the CLI turns ``exit_code`` into the process status."""

    exit_code: int = 1

    def __init__(self, detail: str, exit_code: Optional[int] = None):
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code

    def __str__(self) -> str:
        return self.detail


class InvalidInputError(DomainException):
    pass


class UnsupportedTypeError(DomainException):
    pass


class TableParseError(DomainException):
    def __init__(self, line_number: int, detail: str):
        super().__init__(f"line {line_number}: {detail}")
        self.line_number = line_number


class TableValidationError(DomainException):
    pass


class VerificationFailed(DomainException):
    exit_code = 2
