"""
Embedded Trees CLI Configuration
Validated view of the parsed command line
"""

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from config.tree_config import SYSTEM_CONFIG


class CliConfig(BaseModel):
    """Everything a subcommand needs; all outputs are deterministic for one config.

    Parameters left as None fall back to the family default (seq) or the
    suite default (verify).
    """
    model_config = ConfigDict(extra="ignore")

    subcommand: Literal["seq", "verify"]
    target: str
    order: Optional[int] = Field(default=None, ge=0)
    d: Optional[int] = Field(default=None, ge=2)
    j: Optional[int] = None
    m: Optional[int] = Field(default=None, ge=0)
    k: Optional[int] = Field(default=None, ge=0)
    n_max: Optional[int] = Field(default=None, ge=0)
    cap: Optional[int] = Field(default=None, ge=0)
    format: Literal["text", "csv", "jsonl"] = "text"
    workers: int = Field(default=SYSTEM_CONFIG["workers"], ge=1)
    log_level: str = SYSTEM_CONFIG["log_level"]

    @field_validator("format", mode="before")
    @classmethod
    def _alias_json_lines(cls, value):
        return "jsonl" if value in ("json-lines", "json") else value

    @field_validator("log_level", mode="before")
    @classmethod
    def _upper_level(cls, value):
        return value.upper() if isinstance(value, str) else value

    @property
    def arity(self) -> int:
        return self.d if self.d is not None else SYSTEM_CONFIG["default_arity"]
