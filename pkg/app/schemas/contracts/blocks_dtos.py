# ======================
# BLOCK SCHEMAS
# ======================

from typing import Any, Optional

from pydantic import BaseModel, Field

from app.schemas.enums.blocks_regimes import Regime


class BlockPartitionMeta(BaseModel):
    d: int = Field(..., ge=1)
    q: int
    ell: int
    k_thresholds: dict[str, int] = Field(default_factory=dict)
    merged_class_index: Optional[int] = None
    single_block: bool
    condition_star_star: bool
    merge_vertices: dict[str, list[int]] = Field(default_factory=dict)


class BlockPartitionOut(BaseModel):
    input: dict[str, Any]
    regime: Regime
    classes: list[list[str]]
    meta: BlockPartitionMeta
