"""Content-addressed on-disk cache for computed tables.

Entries are JSON files named by the SHA-256 of their canonical key,
which includes the package version so results from stale code are never
reused.  Corrupted entries are treated as misses and recomputed; write
uses a temp-file rename so concurrent writers of the same key converge
on identical content.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile

from . import __version__

ENV_CACHE_DIR = "CHEVMC_CACHE_DIR"


def cache_key(kind, family, rank, lam=None, w=None, method=None, extra=None):
    """Stable digest of the computation identity, including the code
    version."""
    payload = {
        "kind": kind,
        "family": family,
        "rank": rank,
        "lambda": list(lam) if lam is not None else None,
        "w": w,
        "method": method,
        "extra": extra,
        "version": __version__,
    }
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def default_cache_dir():
    return os.environ.get(ENV_CACHE_DIR)


def cache_get(directory, key):
    """The stored document, or None on miss or corruption."""
    if not directory:
        return None
    path = os.path.join(directory, key + ".json")
    if not os.path.exists(path):
        return None
    try:
        with open(path) as fh:
            return json.load(fh)
    except (json.JSONDecodeError, UnicodeDecodeError):
        return None


def cache_put(directory, key, value):
    """Store a JSON document atomically; IO errors propagate."""
    if not directory:
        return
    os.makedirs(directory, exist_ok=True)
    blob = json.dumps(value, sort_keys=True, indent=1)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(blob)
        os.replace(tmp, os.path.join(directory, key + ".json"))
    finally:
        if os.path.exists(tmp):
            os.unlink(tmp)
