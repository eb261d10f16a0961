# ======================
# COMMAND SCHEMAS
# ======================

from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field, model_validator
from sympy import isprime

from app.schemas.enums.blocks_regimes import GroupKind
from app.schemas.enums.output_formats import OutputFormat, Subcommand


class Command(BaseModel):
    subcommand: Subcommand
    group: Optional[str] = None  # "C2xC2" style spec, or sp/sl for blocks
    family: Optional[str] = None
    rank: Optional[int] = Field(default=None, ge=0)
    ext_degree: int = Field(default=1, ge=1)
    kind: str = "d1"
    d: Optional[int] = Field(default=None, ge=1)
    n: Optional[int] = Field(default=None, ge=1)
    q: Optional[int] = Field(default=None, ge=2)
    ell: Optional[int] = Field(default=None, ge=2)
    max_rank: Optional[int] = Field(default=None, ge=0, le=12)
    max_d: Optional[int] = Field(default=None, ge=1, le=12)
    exceptional_table: Optional[Path] = None
    output_format: OutputFormat = OutputFormat.JSON

    @model_validator(mode="after")
    def flags_fit_subcommand(self):
        if self.ell is not None and not isprime(self.ell):
            raise ValueError(f"ℓ must be prime, got {self.ell}")
        if self.q is not None and self.ell is not None and self.q % self.ell == 0:
            raise ValueError(f"ℓ={self.ell} divides q={self.q}")
        if self.subcommand == Subcommand.BLOCKS:
            if self.group not in (GroupKind.SP.value, GroupKind.SL.value):
                raise ValueError("blocks needs --group sp or --group sl")
            if None in (self.n, self.q, self.ell):
                raise ValueError("blocks needs --n, --q and --ell")
        if self.subcommand == Subcommand.SERIES:
            if self.kind not in ("one", "d", "d1"):
                raise ValueError(f"unknown series kind {self.kind!r}")
            if self.kind != "one" and self.d is None:
                raise ValueError("series needs --d")
        if self.subcommand == Subcommand.VERIFY and (self.q is None) != (self.ell is None):
            raise ValueError("verify needs --q and --ell together")
        if self.subcommand == Subcommand.TABLE_CHECK and self.exceptional_table is None:
            raise ValueError("table-check needs --exceptional-table or DUNBLOCKS_EXCEPTIONAL_TABLE")
        return self
