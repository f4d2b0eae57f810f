"""On-disk cache of weight systems.

The file is JSON holding a format tag, a version, the entries, and a
SHA-256 of the canonical entry list.  Anything that fails to verify is
discarded with a warning and recomputed.
"""
from __future__ import annotations

import fcntl
import hashlib
import json
import logging
import os
import tempfile
from contextlib import contextmanager

from .. import charmult
from ..rootdata import build_root_system

log = logging.getLogger(__name__)

FORMAT = "lieconvex-weight-cache"
VERSION = 1


def _checksum(entries) -> str:
    blob = json.dumps(entries, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def _entry(ws: charmult.WeightSystem) -> dict:
    return {
        "family": ws.rs.family,
        "rank": ws.rs.rank,
        "highest": list(ws.highest),
        "dominant": sorted([list(mu), m] for mu, m in ws.dominant.items()),
    }


@contextmanager
def _locked(path: str):
    with open(path + ".lock", "a") as fh:
        fcntl.flock(fh, fcntl.LOCK_EX)
        try:
            yield
        finally:
            fcntl.flock(fh, fcntl.LOCK_UN)


def _read_entries(path: str) -> list[dict]:
    if not os.path.exists(path):
        return []
    try:
        with open(path) as fh:
            doc = json.load(fh)
        if doc.get("format") != FORMAT or doc.get("version") != VERSION:
            raise ValueError("unknown cache format or version")
        entries = doc["entries"]
        if _checksum(entries) != doc.get("checksum"):
            raise ValueError("checksum mismatch")
        return entries
    except (OSError, ValueError, KeyError, TypeError, AttributeError) as e:
        log.warning("ignoring unreadable weight cache %s (%s); recomputing", path, e)
        return []


def load(path: str) -> int:
    """Seed the in-process cache from ``path``; returns the number of entries loaded."""
    with _locked(path):
        entries = _read_entries(path)
    systems = []
    try:
        for e in entries:
            rs = build_root_system(e["family"], e["rank"])
            dom = {tuple(mu): m for mu, m in e["dominant"]}
            systems.append(charmult.weight_system_from_dominant(rs, e["highest"], dom))
    except (KeyError, TypeError, ValueError) as e:
        log.warning("ignoring malformed weight cache %s (%s); recomputing", path, e)
        return 0
    charmult.seed_cache(systems)
    return len(systems)


def save(path: str) -> int:
    """Merge the in-process cache into ``path``; returns the number of entries written."""
    with _locked(path):
        entries = {(e["family"], e["rank"], tuple(e["highest"])): e for e in _read_entries(path)}
        for ws in charmult.cached_weight_systems():
            entries[(ws.rs.family, ws.rs.rank, ws.highest)] = _entry(ws)
        ordered = [entries[k] for k in sorted(entries)]
        doc = {"format": FORMAT, "version": VERSION, "checksum": _checksum(ordered), "entries": ordered}
        directory = os.path.dirname(os.path.abspath(path))
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".lieconvex-cache-")
        with os.fdopen(fd, "w") as fh:
            json.dump(doc, fh, sort_keys=True)
        os.replace(tmp, path)
    return len(ordered)
