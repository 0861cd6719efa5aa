"""Bundled example structures for the CLI, API and web UI."""

from __future__ import annotations

import json
from importlib import resources

_EXAMPLES = (
    {
        "id": "parent",
        "title": "Three compartments, chain with a single outflow",
        "file": "parent.json",
        "suggested_edits": [
            {
                "label": "fix the first observation gain",
                "edits": ["C[1][1]=1"],
            },
            {
                "label": "fix two gains, remove the third output",
                "edits": ["C[1][1]=1", "C[2][2]=1", "C[3][3]=0"],
            },
        ],
    },
    {
        "id": "one_compartment",
        "title": "Single compartment with outflow",
        "file": "one_compartment.json",
        "suggested_edits": [
            {"label": "fix the observation gain", "edits": ["C[1][1]=1"]},
        ],
    },
    {
        "id": "two_compartment",
        "title": "Two compartments, unit gain, empty second pool",
        "file": "two_compartment.json",
        "suggested_edits": [],
    },
)


def _load(name: str) -> dict:
    text = (
        resources.files("structid").joinpath("examples").joinpath(name).read_text("utf-8")
    )
    return json.loads(text)


def list_examples() -> list[dict]:
    out = []
    for entry in _EXAMPLES:
        out.append(
            {
                "id": entry["id"],
                "title": entry["title"],
                "structure": _load(entry["file"]),
                "suggested_edits": entry["suggested_edits"],
            }
        )
    return out


def get_example(example_id: str) -> dict:
    for entry in _EXAMPLES:
        if entry["id"] == example_id:
            return _load(entry["file"])
    raise KeyError(example_id)
