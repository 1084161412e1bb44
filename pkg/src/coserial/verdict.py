"""Boolean verdicts that carry the evidence behind a negative answer."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class Witness:
    kind: str
    vertex: Optional[str] = None
    arrow: Optional[tuple] = None
    detail: str = ""

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.vertex is not None:
            out["vertex"] = self.vertex
        if self.arrow is not None:
            out["arrow"] = list(self.arrow)
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass(frozen=True)
class Verdict:
    value: bool
    witness: Optional[Witness] = None
    reason: str = ""
    extra: dict = field(default_factory=dict, compare=False)

    def __bool__(self) -> bool:
        return self.value

    def to_json(self) -> dict:
        out: dict = {"value": self.value}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.reason:
            out["reason"] = self.reason
        return out
