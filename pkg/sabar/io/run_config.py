"""Validated settings of one CLI invocation."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

Verb = Literal["simplicial", "sublevel", "rips", "roots-order", "make-closed"]


def _rational(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ValueError(f"expected a rational, got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"malformed rational {value!r}") from e


class RunConfig(BaseModel):
    """One verb with its inputs, limits and output targets."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    verb: Verb
    input_path: Path | None = None
    points_path: Path | None = None
    formula: str | None = None
    poly: str | None = None
    polys: tuple[str, ...] = ()
    radius: Fraction | None = None
    levels: tuple[Fraction, ...] | None = None
    grid_n: int | None = None
    max_dim: int = 1
    steps: int | None = None
    json_out: Path | None = None
    svg_out: Path | None = None
    approx_width: Fraction = Fraction(1, 1000)
    threads: int = 1

    @field_validator("radius", "approx_width", mode="before")
    @classmethod
    def _parse_rational(cls, value: Any) -> Fraction | None:
        return None if value is None else _rational(value)

    @field_validator("levels", mode="before")
    @classmethod
    def _parse_levels(cls, value: Any) -> tuple[Fraction, ...] | None:
        if value is None:
            return None
        return tuple(_rational(v) for v in value)

    @field_validator("max_dim")
    @classmethod
    def _check_max_dim(cls, value: int) -> int:
        if value < 0:
            raise ValueError("max_dim must be >= 0")
        return value

    @field_validator("grid_n")
    @classmethod
    def _check_grid(cls, value: int | None) -> int | None:
        if value is not None and value < 2:
            raise ValueError("grid_n must be >= 2")
        return value

    @field_validator("approx_width")
    @classmethod
    def _check_width(cls, value: Fraction) -> Fraction:
        if value <= 0:
            raise ValueError("approximation width must be positive")
        return value

    @field_validator("threads", "steps")
    @classmethod
    def _check_positive(cls, value: int | None) -> int | None:
        if value is not None and value < 1:
            raise ValueError("must be a positive integer")
        return value

    @model_validator(mode="after")
    def _check_inputs(self) -> RunConfig:
        required: dict[str, tuple[str, ...]] = {
            "simplicial": ("input_path",),
            "sublevel": ("formula", "poly", "radius", "grid_n"),
            "rips": ("points_path",),
            "roots-order": ("polys",),
            "make-closed": ("formula",),
        }
        missing = [name for name in required[self.verb] if not getattr(self, name)]
        if missing:
            raise ValueError(f"{self.verb} needs {', '.join(missing)}")
        return self
