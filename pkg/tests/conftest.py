"""Shared fixtures: corpus groups and Hall contexts are built once per session."""

from __future__ import annotations

import pytest

from hallfix import PiSet, build_hall_context, corpus_entries, load_group


@pytest.fixture(scope="session")
def groups():
    """Every builtin corpus group, loaded once."""
    return {entry.name: load_group(entry.name) for entry in corpus_entries()}


@pytest.fixture(scope="session")
def hall_ctx(groups):
    """Memoized Hall-context builder: hall_ctx(name, "2,3")."""
    cache = {}

    def get(name: str, pi_text: str):
        key = (name, pi_text)
        if key not in cache:
            cache[key] = build_hall_context(groups[name], PiSet.parse(pi_text))
        return cache[key]

    return get
