############################################################
# validation/templates.py contains the models for checking
# templates and extended templates on construction
############################################################

### IMPORTING PACKAGES ###

# Pydantic type validation
from pydantic import ConfigDict, BaseModel, Field, model_validator
from .shared import EdgeList, MatrixInput, _uncovered

### ALL ###
# This code tells other packages what to import if not explicitly stated
__all__ = ["TemplateModel", "ExtendedTemplateModel"]

### VALIDATION HELPERS ###

def _check_edges(edges, length: int):
    for i, j, w in edges:
        if i < 0 or j > length:
            raise ValueError(f"edge {(i, j, w)} leaves the vertex range 0..{length}")
        if j == i + 1 and w == 1:
            raise ValueError(f"edge {(i, j, w)} is a short edge (weight 1 between consecutive vertices)")

### COMPONENT MODELS ###

class TemplateModel(BaseModel):
    model_config = ConfigDict(frozen=True)
    edges: EdgeList
    length: int | None = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _check_template(self):
        if not self.edges:
            raise ValueError("a template needs at least one edge")
        length = max(j for _, j, _ in self.edges)
        if self.length is not None and self.length != length:
            raise ValueError(f"the edges end at vertex {length}, but length {self.length} was supplied")
        _check_edges(self.edges, length)
        if min(i for i, _, _ in self.edges) != 0:
            raise ValueError("template edges must start at vertex 0")
        missing = _uncovered(self.edges, length - 1)
        if missing:
            raise ValueError(f"vertices {missing} are not covered by any edge")
        return self

class ExtendedTemplateModel(BaseModel):
    model_config = ConfigDict(frozen=True)
    lam: EdgeList
    length: int = Field(ge=0)
    A: MatrixInput = {}
    B: MatrixInput = {}

    @model_validator(mode="after")
    def _check_extended(self):
        _check_edges(self.lam, self.length)
        matrix_length = max([i for i, _ in self.A] + [i for i, _ in self.B] + [0])
        if self.length < matrix_length:
            raise ValueError(f"length {self.length} is shorter than the matrices (which need {matrix_length})")
        missing = _uncovered(self.lam, self.length - matrix_length)
        if missing:
            raise ValueError(f"vertices {missing} are not covered by any edge, so the extended template is disconnected")
        return self
