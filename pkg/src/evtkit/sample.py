"""Container for a block-maxima (e.g. annual-maximum) series."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True, eq=False)
class Sample:
    """An ordered series of block maxima.

    Values keep their original order; a stable ascending view is available
    through :meth:`sorted_values`. All values must be finite and there must
    be at least one.
    """

    values: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=float).ravel().copy()
        if arr.size < 1:
            raise DomainError("sample must contain at least one value")
        if not np.all(np.isfinite(arr)):
            raise DomainError("sample values must all be finite")
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)

    @property
    def n(self) -> int:
        return int(self.values.size)

    def sorted_values(self) -> np.ndarray:
        """Ascending view of the values (stable sort)."""
        return np.sort(self.values, kind="stable")

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"Sample(n={self.n})"
