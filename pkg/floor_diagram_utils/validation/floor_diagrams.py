############################################################
# validation/floor_diagrams.py contains the models for
# checking floor diagrams and their compatible pairs
############################################################

### IMPORTING PACKAGES ###

# Pydantic type validation
from pydantic import ConfigDict, BaseModel, Field, model_validator
from .shared import EdgeList, SequenceInput

### ALL ###
# This code tells other packages what to import if not explicitly stated
__all__ = ["FloorDiagramModel", "CompatiblePairModel", "EnumerationModel"]

### COMPONENT MODELS ###

class FloorDiagramModel(BaseModel):
    model_config = ConfigDict(frozen=True)
    d: int = Field(ge=1)
    edges: EdgeList

    @model_validator(mode="after")
    def _check_divergence(self):
        divergence = {v: 0 for v in range(1, self.d + 1)}
        for i, j, w in self.edges:
            if j > self.d:
                raise ValueError(f"edge {(i, j, w)} leaves the vertex range 1..{self.d}")
            if i < 1:
                raise ValueError(f"edge {(i, j, w)} starts below vertex 1")
            divergence[i] += w
            divergence[j] -= w
        for v, div in divergence.items():
            if div > 1:
                raise ValueError(f"vertex {v} has divergence {div}, floor diagrams allow at most 1")
        return self

class CompatiblePairModel(BaseModel):
    model_config = ConfigDict(frozen=True)
    alpha_parts: list[SequenceInput]
    beta_parts: list[SequenceInput]

    @model_validator(mode="after")
    def _check_lengths(self):
        if len(self.alpha_parts) != len(self.beta_parts):
            raise ValueError(f"got {len(self.alpha_parts)} alpha parts but {len(self.beta_parts)} beta parts")
        return self

class EnumerationModel(BaseModel):
    model_config = ConfigDict(frozen=True)
    d: int = Field(ge=1)
    delta: int = Field(ge=0)
