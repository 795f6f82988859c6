############################################################
# validation/posets.py contains the models for checking the
# interchangeability classes of a marking poset
############################################################

### IMPORTING PACKAGES ###

# The types we use in this script
from typing import Hashable
# Pydantic type validation
from pydantic import ConfigDict, BaseModel, Field, model_validator

### ALL ###
# This code tells other packages what to import if not explicitly stated
__all__ = ["ElementClassModel", "MarkingPosetModel"]

### COMPONENT MODELS ###

class ElementClassModel(BaseModel):
    model_config = ConfigDict(frozen=True)
    label: Hashable
    count: int = Field(ge=0)
    first: int = Field(ge=1)
    last: int = Field(ge=1)

    @model_validator(mode="after")
    def _check_range(self):
        if self.first > self.last:
            raise ValueError(f"class {self.label} has an empty gap range [{self.first}, {self.last}]")
        return self

class MarkingPosetModel(BaseModel):
    model_config = ConfigDict(frozen=True)
    backbone: int = Field(ge=1)
    classes: list[ElementClassModel]

    @model_validator(mode="after")
    def _check_gaps(self):
        labels = [c.label for c in self.classes]
        if len(set(labels)) != len(labels):
            raise ValueError("class labels must be unique")
        for c in self.classes:
            if c.last > self.backbone:
                raise ValueError(f"class {c.label} reaches gap {c.last}, but only gaps 1..{self.backbone} exist")
        return self
