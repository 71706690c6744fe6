"""Audited status records, loaded from the committed audit output."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Optional

CONFIRMED = "ConfirmedPass"
DISCREPANCY = "Discrepancy"
UNAUDITED = "Unaudited"


@dataclass(frozen=True)
class AuditedStatus:
    status: str
    counterexample: Optional[dict] = None  # rendered assignment
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    surviving_reading: Optional[str] = None
    note: str = ""

    @property
    def confirmed(self) -> bool:
        return self.status == CONFIRMED

    def counterexample_assignment(self) -> Optional[dict]:
        """The stored counterexample with parsed parameter values."""
        from ..report import parse_value

        if self.counterexample is None:
            return None
        return {k: parse_value(v) for k, v in self.counterexample.items()}

    def label(self) -> str:
        if self.status != DISCREPANCY:
            return self.status
        cx = ",".join(f"{k}={v}" for k, v in (self.counterexample or {}).items())
        text = f"Discrepancy({cx})"
        if self.surviving_reading:
            text += f" [holds as: {self.surviving_reading}]"
        return text

    def to_dict(self) -> dict:
        d = {"status": self.status}
        if self.status == DISCREPANCY:
            d.update(
                counterexample=self.counterexample,
                lhs=self.lhs,
                rhs=self.rhs,
                surviving_reading=self.surviving_reading,
            )
        if self.note:
            d["note"] = self.note
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "AuditedStatus":
        return cls(
            d["status"],
            d.get("counterexample"),
            d.get("lhs"),
            d.get("rhs"),
            d.get("surviving_reading"),
            d.get("note", ""),
        )


STATUS_FILE = "audited_status.json"


@lru_cache(maxsize=1)
def load_statuses() -> dict:
    try:
        text = resources.files("fibharm.data").joinpath(STATUS_FILE).read_text(encoding="utf-8")
    except FileNotFoundError:
        return {}
    raw = json.loads(text)
    return {k: AuditedStatus.from_dict(v) for k, v in raw["entries"].items()}


def status_of(entry_id: str) -> AuditedStatus:
    return load_statuses().get(entry_id, AuditedStatus(UNAUDITED))


def status_path():
    return resources.files("fibharm.data").joinpath(STATUS_FILE)
