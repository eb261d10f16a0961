# ======================
# UNIPOTENT / SERIES SCHEMAS
# ======================

from typing import Any, Optional

from pydantic import BaseModel, Field


class UnipotentListOut(BaseModel):
    input: dict[str, Any]
    count: int = Field(..., ge=0)
    labels: list[str]
    trivial: str


class D1PartitionMeta(BaseModel):
    d: Optional[int] = None
    k_thresholds: dict[str, Optional[int]] = Field(default_factory=dict)
    trivial_class_index: Optional[int] = None


class D1PartitionOut(BaseModel):
    input: dict[str, Any]
    regime: str
    classes: list[list[str]]
    meta: D1PartitionMeta
