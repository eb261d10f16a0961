# ======================
# ORACLE REPORT SCHEMAS
# ======================

from typing import Any, Optional

from pydantic import BaseModel, Field, model_validator


class CheckReport(BaseModel):
    name: str = Field(..., min_length=1)
    params: dict[str, Any] = Field(default_factory=dict)
    passed: bool
    counterexample: Optional[str] = None

    @model_validator(mode="after")
    def failure_has_counterexample(self):
        if not self.passed and not self.counterexample:
            raise ValueError("a failed check must carry a counterexample")
        return self

    @classmethod
    def ok(cls, name: str, **params: Any) -> "CheckReport":
        return cls(name=name, params=params, passed=True)

    @classmethod
    def failed(cls, name: str, counterexample: str, **params: Any) -> "CheckReport":
        return cls(name=name, params=params, passed=False, counterexample=counterexample)
