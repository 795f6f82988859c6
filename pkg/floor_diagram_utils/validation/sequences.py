############################################################
# validation/sequences.py contains the models for checking
# tangency sequences and support matrices on construction
############################################################

### IMPORTING PACKAGES ###

# Pydantic type validation
from pydantic import ConfigDict, BaseModel
from .shared import SequenceInput, MatrixInput

### ALL ###
# This code tells other packages what to import if not explicitly stated
__all__ = ["TangencySequenceModel", "SupportMatrixModel"]

### COMPONENT MODELS ###

class TangencySequenceModel(BaseModel):
    model_config = ConfigDict(frozen=True)
    entries: SequenceInput

class SupportMatrixModel(BaseModel):
    model_config = ConfigDict(frozen=True)
    entries: MatrixInput
