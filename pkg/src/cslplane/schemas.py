"""Request and response models for the HTTP service and the CLI.

Exact quantities travel as reduced fraction strings ("3/5", "-1/3",
"2"); the only float anywhere is the display-only angle. The CLI builds
the same request models and renders the same reports, so both
interfaces expose identical data.
"""

from __future__ import annotations

from typing import Any, Literal, Optional

from pydantic import BaseModel, Field


class LatticeIn(BaseModel):
    """Lattice shape as exact fraction strings (integers also accepted)."""

    sigma2: int | str = Field(..., examples=["1", "2", "1/2"])
    sigma_cos: int | str = Field(0, examples=["0", "1/2", "-1/3"])


class ClassifyRequest(BaseModel):
    lattice: LatticeIn


class RotationRequest(BaseModel):
    lattice: LatticeIn
    p: int
    q: int


class ReflectionRequest(BaseModel):
    lattice: LatticeIn
    c: tuple[int, int]


class DecomposeRequest(BaseModel):
    lattice: LatticeIn
    matrix: tuple[str, str, str, str] = Field(
        ..., description="row-major entries as fraction strings"
    )


class EnumerateRequest(BaseModel):
    lattice: LatticeIn
    kind: Literal["rotations", "reflections"] = "rotations"
    max_sigma: Optional[int] = None
    coord_bound: Optional[int] = None


class VerifyRequest(BaseModel):
    sigma_max: int = 50
    lattice: Optional[LatticeIn] = None


class Report(BaseModel):
    """Uniform response envelope: echoed inputs, lattice class when a
    single lattice is involved, the subcommand payload, and a status."""

    inputs: dict[str, Any]
    lattice_class: Optional[str] = None
    result: dict[str, Any]
    status: str = "ok"
