############################################################
# validation/commands.py contains the models for checking
# the arguments of every command-line command
############################################################

### IMPORTING PACKAGES ###

# The types we use in this script
from typing import Annotated, Optional, Literal, Any
# Pydantic type validation
from pydantic import ConfigDict, BaseModel, Field, model_validator
from .shared import SequenceInput
from ..defaults import commands as cmd

### ALL ###
# This code tells other packages what to import if not explicitly stated
__all__ = ["TemplatesCommandModel", "SeveriCommandModel", "NodepolyCommandModel",
           "LeadingCommandModel", "VerifyCommandModel"]

### VALIDATION HELPERS ###

def _with_defaults(command: str, data: Any) -> Any:
    # Arguments left as None by argparse fall back to the command defaults
    if data is None:
        data = {}
    if not isinstance(data, dict):
        return data
    supplied = {key: value for key, value in data.items() if value is not None}
    return cmd._DEFAULTS_CMD[command] | supplied

### COMPONENT MODELS ###

class TemplatesCommandModel(BaseModel):
    model_config = ConfigDict(frozen=True)
    cogenus: Annotated[int, Field(ge=0)]
    kind: Literal["plain", "extended"]
    max_plain: Annotated[int, Field(ge=1)]
    max_extended: Annotated[int, Field(ge=0)]
    force: bool

    @model_validator(mode="before")
    @classmethod
    def apply_defaults(cls, data: Any) -> Any:
        return _with_defaults("templates", data)

    @model_validator(mode="after")
    def _check_plain_cogenus(self):
        if self.kind == "plain" and self.cogenus < 1:
            raise ValueError("templates have cogenus at least 1")
        return self

    @property
    def limit(self) -> int:
        return self.max_plain if self.kind == "plain" else self.max_extended

class SeveriCommandModel(BaseModel):
    model_config = ConfigDict(frozen=True)
    delta: Annotated[int, Field(ge=0)]
    alpha: SequenceInput
    beta: SequenceInput
    method: Literal["enumerate", "polynomial", "both"]

    @model_validator(mode="before")
    @classmethod
    def apply_defaults(cls, data: Any) -> Any:
        return _with_defaults("severi", data)

    @model_validator(mode="after")
    def _check_degree(self):
        if not self.alpha and not self.beta:
            raise ValueError("alpha and beta are both zero, so there is no curve degree to count")
        return self

class NodepolyCommandModel(BaseModel):
    model_config = ConfigDict(frozen=True)
    delta: Annotated[int, Field(ge=0)]
    out: Optional[str]

    @model_validator(mode="before")
    @classmethod
    def apply_defaults(cls, data: Any) -> Any:
        return _with_defaults("nodepoly", data)

class LeadingCommandModel(BaseModel):
    model_config = ConfigDict(frozen=True)
    delta: Annotated[int, Field(ge=1)]
    depth: Annotated[int, Field(ge=0)]

    @model_validator(mode="before")
    @classmethod
    def apply_defaults(cls, data: Any) -> Any:
        return _with_defaults("leading", data)

class VerifyCommandModel(BaseModel):
    model_config = ConfigDict(frozen=True)
    delta: Annotated[int, Field(ge=0)]
    max_degree: Annotated[int, Field(ge=1)]

    @model_validator(mode="before")
    @classmethod
    def apply_defaults(cls, data: Any) -> Any:
        return _with_defaults("verify", data)
