"""Result objects shared by the three construction methods.

A bounded search that exhausts its cap returns NotFoundUpToCap rather than
raising: not finding a realization below a cap is an answer, not an error,
and the object carries per-candidate diagnostics explaining each failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .matrices import DenseMatrix
from .scalars import Scalar


class Method(Enum):
    SHIFTED_COMPANION = "shifted-companion"
    LAFFEY = "laffey"
    MULTI_BLOCK = "multiblock"
    EXTERNAL = "external"


@dataclass(frozen=True)
class Certificate:
    """Outcome of independently re-deriving a realization's claims."""

    nonnegative: bool
    charpoly_match: bool
    backend_name: str
    precision: int | None = None
    tolerance_used: Scalar | None = None  # float backend only
    residual: Scalar | None = None  # float backend: max coefficient deviation

    @property
    def ok(self) -> bool:
        return self.nonnegative and self.charpoly_match

    def __str__(self):
        parts = [
            f"nonnegative={'yes' if self.nonnegative else 'NO'}",
            f"charpoly_match={'yes' if self.charpoly_match else 'NO'}",
            f"backend={self.backend_name}",
        ]
        if self.residual is not None:
            parts.append(f"residual={self.residual}")
        return ", ".join(parts)


@dataclass(frozen=True)
class RealizationResult:
    """A successful construction: matrix plus its verification certificate."""

    method: Method
    zeros_added: int
    matrix: DenseMatrix
    certificate: Certificate
    margin: Scalar | None = None  # smallest of the entries deciding feasibility
    notes: tuple = ()

    def __post_init__(self):
        if self.zeros_added != self.matrix.dim - 3:
            raise ValueError("zeros_added must be the dimension minus three")

    @property
    def dim(self) -> int:
        return self.matrix.dim

    @property
    def found(self) -> bool:
        return True


@dataclass(frozen=True)
class ScanDiagnostic:
    """Why one candidate in a scan was rejected."""

    parameter: int  # the dimension-control value tried (N or m)
    first_bad_index: int | None  # 1-based position of the first bad quantity
    detail: str = ""


@dataclass(frozen=True)
class NotFoundUpToCap:
    """A scan exhausted its cap; claims nothing beyond the cap."""

    method: Method
    cap: int
    diagnostics: tuple = ()
    notes: tuple = ()

    @property
    def found(self) -> bool:
        return False
