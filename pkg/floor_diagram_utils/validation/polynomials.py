############################################################
# validation/polynomials.py contains the models for reading
# polynomials back in from their JSON representation
############################################################

### IMPORTING PACKAGES ###

# Default packages
from fractions import Fraction
# The types we use in this script
from typing import Annotated
# Pydantic type validation
from pydantic import ConfigDict, BaseModel, Field, BeforeValidator, model_validator
from .shared import RationalInput

### ALL ###
# This code tells other packages what to import if not explicitly stated
__all__ = ["PolynomialTermModel", "PolynomialJsonModel", "InterpolationModel"]

### VALIDATION HELPERS ###

def _validate_names(v):
    # Late import keeps the ring construction out of the validation layer
    from ..core.polynomials import VARIABLES
    v = list(v)
    for name in v:
        if name not in VARIABLES:
            raise ValueError(f"Unknown variable '{name}', expected one of {list(VARIABLES)}")
    if len(set(v)) != len(v):
        raise ValueError(f"Variables may only be listed once, got {v}")
    return v

VariableNames = Annotated[list[str], BeforeValidator(_validate_names)]

### COMPONENT MODELS ###

class PolynomialTermModel(BaseModel):
    model_config = ConfigDict(frozen=True)
    coeff: RationalInput
    exps: list[Annotated[int, Field(ge=0)]]

class PolynomialJsonModel(BaseModel):
    model_config = ConfigDict(frozen=True)
    vars: VariableNames
    terms: list[PolynomialTermModel]

    @model_validator(mode="after")
    def _check_widths(self):
        for term in self.terms:
            if len(term.exps) != len(self.vars):
                raise ValueError(f"term {term.exps} has {len(term.exps)} exponents, expected {len(self.vars)}")
            if term.coeff == 0:
                raise ValueError("zero coefficients are not stored")
        return self

class InterpolationModel(BaseModel):
    model_config = ConfigDict(frozen=True)
    points: list[tuple[int, RationalInput]]
    degree: int = Field(ge=0)

    @model_validator(mode="after")
    def _check_points(self):
        abscissae = [x for x, _ in self.points]
        if len(set(abscissae)) != len(abscissae):
            raise ValueError(f"interpolation points need distinct abscissae, got {abscissae}")
        if len(self.points) < self.degree + 1:
            raise ValueError(f"a degree {self.degree} polynomial needs at least {self.degree + 1} points, got {len(self.points)}")
        return self

    @property
    def fractions(self) -> list:
        return [(x, Fraction(y)) for x, y in self.points]
