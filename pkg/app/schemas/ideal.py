# app/schemas/ideal.py

from typing import List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from app.algebra.monomials import Field as CoefficientField
from app.algebra.monomials import MonomialIdeal, PolyContext, minimalize
from app.errors import InvalidInputError


class IdealDocument(BaseModel):
    """
    A monomial ideal as written by the user. Generators are kept in the order
    given; `to_ideal` produces the canonical minimal form.
    """

    nvars: int = Field(..., ge=1, examples=[6])
    field: str = Field("rational", examples=["rational", "fp:32003"])
    gens: List[List[int]] = Field(default_factory=list, examples=[[[1, 0, 0, 3, 0, 0]]])
    label: Optional[str] = None

    model_config = {
        "json_schema_extra": {
            "example": {
                "nvars": 6,
                "field": "rational",
                "gens": [[1, 0, 0, 3, 0, 0], [0, 1, 0, 0, 3, 0], [0, 0, 1, 1, 1, 1]],
                "label": "ex-no",
            }
        }
    }

    @field_validator("field")
    @classmethod
    def _known_field(cls, value: str) -> str:
        try:
            return str(CoefficientField.parse(value))
        except InvalidInputError as exc:
            raise ValueError(str(exc))

    @model_validator(mode="after")
    def _gens_fit(self) -> "IdealDocument":
        for g in self.gens:
            if len(g) != self.nvars:
                raise ValueError(f"generator {g} has length {len(g)}, expected {self.nvars}")
            if any(a < 0 for a in g):
                raise ValueError(f"negative exponent in {g}")
        return self

    @property
    def coefficient_field(self) -> CoefficientField:
        return CoefficientField.parse(self.field)

    @property
    def context(self) -> PolyContext:
        return PolyContext(self.nvars, self.coefficient_field)

    def to_ideal(self) -> MonomialIdeal:
        return minimalize(self.gens, self.context)

    @classmethod
    def from_ideal(cls, I: MonomialIdeal, label: Optional[str] = None) -> "IdealDocument":
        return cls(
            nvars=I.nvars,
            field=str(I.context.field),
            gens=[list(g) for g in I.gens],
            label=label,
        )
