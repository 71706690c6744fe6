import dataclasses

import pytest

import fibharm.registry as registry


@pytest.fixture
def patched_entry(monkeypatch):
    """Replace one registry entry in-process; returns a function taking (id, **changes)."""

    def patch(entry_id, **changes):
        registry.registry_entries()
        by_id = dict(registry._BY_ID)
        new = dataclasses.replace(by_id[entry_id], **changes)
        by_id[entry_id] = new
        monkeypatch.setattr(registry, "_BY_ID", by_id)
        monkeypatch.setattr(
            registry, "_ENTRIES", tuple(new if e.id == entry_id else e for e in registry._ENTRIES)
        )
        return new

    return patch


def plus_one(fn):
    def mutated(p, X):
        return fn(p, X) + 1

    return mutated
