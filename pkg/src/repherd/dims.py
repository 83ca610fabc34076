"""Dimension values that may be finite, provably infinite, or undetermined."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class DimValue:
    kind: str  # "finite" | "infinite" | "at_least"
    value: int | None = None

    @staticmethod
    def finite(n: int) -> "DimValue":
        return DimValue("finite", n)

    @staticmethod
    def infinite() -> "DimValue":
        return DimValue("infinite")

    @staticmethod
    def at_least(n: int) -> "DimValue":
        return DimValue("at_least", n)

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def is_infinite(self) -> bool:
        return self.kind == "infinite"

    def le(self, n: int):
        """Certain comparison with n. True/False when decidable, None otherwise."""
        if self.kind == "finite":
            return self.value <= n
        if self.kind == "infinite":
            return False
        # at_least(b): actual value >= b, undetermined above
        return False if self.value > n else None

    def __str__(self) -> str:
        if self.kind == "finite":
            return str(self.value)
        if self.kind == "infinite":
            return "infinite"
        return ">=%d" % self.value

    def to_json(self):
        if self.kind == "finite":
            return {"finite": self.value}
        if self.kind == "infinite":
            return "infinite"
        return {"at_least": self.value}
