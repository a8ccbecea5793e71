"""Exact verification of factorizations of odd-dimensional orthogonal groups."""

from __future__ import annotations

import json
from pathlib import Path

from ._oddfact import SCHEMA_VERSION, OddfactError, audit, discover as _discover, orbit as _orbit, order, suites
from ._oddfact import verify_jsonl

__all__ = [
    "SCHEMA_VERSION",
    "OddfactError",
    "audit",
    "discover",
    "orbit",
    "order",
    "suites",
    "verify",
    "verify_jsonl",
]

_PACKAGE_DATA = Path(__file__).resolve().parent / "data"


def _data_dir() -> str:
    return str(_PACKAGE_DATA) if (_PACKAGE_DATA / "groups").is_dir() else ""


def verify(rows, q=3, m=None, mode="both", seed=20240601, stretch=False, controls=False, suites=False):
    """Run the verifier and return (header, reports) as parsed JSON."""
    qs = [q] if isinstance(q, int) else list(q)
    text = verify_jsonl(list(rows), qs, m, mode, seed, stretch, controls, suites, _data_dir())
    lines = [json.loads(line) for line in text.splitlines() if line]
    return lines[0], lines[1:]


def orbit(m=3, q=3, group="omega", point="e1", action="vector", seed=20240601):
    """Orbit length and stabilizer order of a point, as integers."""
    size, stab = _orbit(m, q, group, point, action, seed)
    return int(size), int(stab)


def discover(target, m=3, q=3, hints=(2, 3), attempts=200, seed=20240601):
    """Fingerprint of a subgroup of the target order found by seeded search."""
    return json.loads(_discover(str(target), m, q, list(hints), attempts, seed))
