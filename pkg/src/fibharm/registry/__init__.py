"""The identity catalog: one entry per displayed identity, with exact evaluators."""

from __future__ import annotations

from ..errors import NotFound
from .core import (
    DEFAULT_SEEDS,
    HALFINT,
    INT,
    RATIONAL,
    SEED,
    IdentityEntry,
    ParamSchema,
    ParamSpec,
    Reading,
    evaluate,
    grid_points,
    normalize_assignment,
)
from .status import CONFIRMED, DISCREPANCY, UNAUDITED, AuditedStatus, status_of

FAMILIES = ("ABEL-FIB", "ABEL-COMB", "GOULD", "BT-BOYAD", "BT-GQ")

ALIASES = {"rec-FF-particular": "rec-FF-part"}


def _build() -> tuple:
    from . import catalog_abel, catalog_bt, catalog_gould

    entries = tuple(catalog_abel.ENTRIES + catalog_gould.ENTRIES + catalog_bt.ENTRIES)
    ids = [e.id for e in entries]
    if len(set(ids)) != len(ids):
        raise RuntimeError("duplicate registry ids")
    return entries


_ENTRIES = None
_BY_ID = None


def registry_entries() -> tuple:
    """The immutable catalog in display order."""
    global _ENTRIES, _BY_ID
    if _ENTRIES is None:
        _ENTRIES = _build()
        _BY_ID = {e.id: e for e in _ENTRIES}
    return _ENTRIES


def lookup(entry_id: str) -> IdentityEntry:
    registry_entries()
    key = ALIASES.get(entry_id, entry_id)
    try:
        return _BY_ID[key]
    except KeyError:
        raise NotFound(f"unknown identity id {entry_id!r}") from None


def by_family(family: str) -> list:
    if family not in FAMILIES:
        raise NotFound(f"unknown family {family!r}")
    return [e for e in registry_entries() if e.family == family]


__all__ = [
    "FAMILIES",
    "ALIASES",
    "DEFAULT_SEEDS",
    "INT",
    "HALFINT",
    "SEED",
    "RATIONAL",
    "IdentityEntry",
    "ParamSchema",
    "ParamSpec",
    "Reading",
    "AuditedStatus",
    "CONFIRMED",
    "DISCREPANCY",
    "UNAUDITED",
    "evaluate",
    "grid_points",
    "normalize_assignment",
    "registry_entries",
    "lookup",
    "by_family",
    "status_of",
]
