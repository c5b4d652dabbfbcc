"""
models/documents.py
-------------------
Pydantic models for the JSON documents the CLI reads, and the RunConfig
that drives one CLI invocation.
"""
from __future__ import annotations

from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, StrictInt, field_validator, model_validator

Command = Literal["classify", "nerve", "growth", "region", "betti", "verify", "census", "ruin", "homology"]
COMMANDS = ("classify", "nerve", "growth", "region", "betti", "verify", "census", "ruin", "homology")

# commands that read a Coxeter matrix document
MATRIX_COMMANDS = {"classify", "nerve", "growth", "region", "betti", "verify", "ruin"}
WEIGHTED_COMMANDS = {"region", "betti"}


class CoxeterDocument(BaseModel):
    model_config = ConfigDict(extra="ignore")

    generators: Optional[List[str]] = None
    matrix: List[List[Union[StrictInt, str]]] = Field(..., min_length=1)

    @field_validator("matrix")
    def square(cls, v):
        if any(len(row) != len(v) for row in v):
            raise ValueError("matrix must be square")
        return v


class WeightsDocument(BaseModel):
    """Either {"q": r}, {"q": [r per generator class]} or {"weights": {generator: r}}.

    Values stay raw here; exactness is checked when the WeightVector is built.
    """
    model_config = ConfigDict(extra="ignore")

    q: Optional[Any] = None
    weights: Optional[Dict[str, Any]] = None

    @model_validator(mode="after")
    def one_form(self):
        if (self.q is None) == (self.weights is None):
            raise ValueError('give exactly one of "q" and "weights"')
        return self


class ComplexDocument(BaseModel):
    model_config = ConfigDict(extra="ignore")

    vertices: Optional[List[Union[StrictInt, str]]] = None
    maximal_faces: List[List[Union[StrictInt, str]]]


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    command: Command
    input: Optional[str] = None
    weights: Optional[str] = None
    output: Optional[str] = None

    max_order: PositiveInt = 200_000
    max_ball: PositiveInt = 14
    precision_bits: int = Field(1024, ge=53)
    threads: PositiveInt = 1
    max_generators: PositiveInt = 24
    max_faces: PositiveInt = 500_000
    max_circuit_length: PositiveInt = 16
    isolation_tolerance: str = "1/1000000000000"

    # command options
    subset: Optional[List[str]] = None          # classify -T, ruin -T
    universe: Optional[List[str]] = None        # ruin -U
    at: Optional[str] = None                    # growth --at (weights document path)
    radius: Optional[PositiveInt] = None        # ruin --radius
    homology: bool = False                      # ruin --homology
    max_label: int = Field(5, ge=2)
    rank: Literal[3, 4] = 4
    verbose: bool = False

    @model_validator(mode="after")
    def inputs_present(self):
        if self.command in MATRIX_COMMANDS | {"homology"} and not self.input:
            raise ValueError(f"{self.command} needs -i/--input")
        if self.command in WEIGHTED_COMMANDS and not self.weights:
            raise ValueError(f"{self.command} needs -q/--weights")
        return self
