"""Cooperative wall-clock budgets shared by the long-running algebra
routines (basis construction, multivariate gcd)."""

from __future__ import annotations

import time
from typing import Optional


class GroebnerTimeout(Exception):
    """Raised when an exact computation exceeds its deadline."""


class Deadline:
    """Cooperative wall-clock budget shared across stages."""

    def __init__(self, seconds: Optional[float]) -> None:
        self.expires_at = None if seconds is None else time.monotonic() + seconds

    def check(self) -> None:
        if self.expires_at is not None and time.monotonic() > self.expires_at:
            raise GroebnerTimeout("computation exceeded its time budget")

    def expired(self) -> bool:
        return self.expires_at is not None and time.monotonic() > self.expires_at

    def seconds_left(self) -> Optional[float]:
        """Remaining budget in seconds; None when unbounded."""
        if self.expires_at is None:
            return None
        return self.expires_at - time.monotonic()
