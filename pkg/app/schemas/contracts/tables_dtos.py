# ======================
# EXCEPTIONAL TABLE SCHEMAS
# ======================

from pydantic import BaseModel, Field


class TableCheckOut(BaseModel):
    path: str
    entries: int = Field(..., ge=0)
    series_types: list[str]
    keys: list[str]
