"""JSONL cache of finished witness searches.

Each line stores one completed search for a pair: the pair id, the depth
that was exhausted, and the resulting classification.  A later run can
skip a pair when the cache already contains a result that settles it at
the requested depth: a found witness settles every depth, a completed
unsuccessful search settles any depth up to the one recorded.

Writes go through a temp file in the same directory followed by
os.replace, so a crash mid-write never corrupts the existing file.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

from . import __version__

ENV_VAR = "HGSP_CACHE"
DEFAULT_FILENAME = "hgsp-cache.jsonl"


def default_cache_path() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path.cwd() / DEFAULT_FILENAME


@dataclass(frozen=True)
class CacheRecord:
    pair_id: str
    degree: int
    searched_depth: int
    kind: str
    witness: Optional[str]
    witness_length: Optional[int]
    gcd: Optional[int]
    nodes: Optional[int]
    created_at: str
    tool_version: str

    def to_json(self) -> dict:
        return {
            "pair_id": self.pair_id,
            "degree": self.degree,
            "searched_depth": self.searched_depth,
            "kind": self.kind,
            "witness": self.witness,
            "witness_length": self.witness_length,
            "gcd": self.gcd,
            "nodes": self.nodes,
            "created_at": self.created_at,
            "tool_version": self.tool_version,
        }

    @classmethod
    def from_json(cls, data: dict) -> "CacheRecord":
        return cls(
            pair_id=data["pair_id"],
            degree=int(data["degree"]),
            searched_depth=int(data["searched_depth"]),
            kind=data["kind"],
            witness=data.get("witness"),
            witness_length=data.get("witness_length"),
            gcd=data.get("gcd"),
            nodes=data.get("nodes"),
            created_at=data.get("created_at", ""),
            tool_version=data.get("tool_version", ""),
        )

    def settles(self, max_depth: int) -> bool:
        """Whether this record answers a search to the given depth."""
        if self.kind == "obstructed":
            return True
        if self.kind == "arithmetic_witness":
            return self.witness_length is not None and self.witness_length <= max_depth
        return self.searched_depth >= max_depth


class ResultCache:
    """All records live in memory; the file is rewritten atomically."""

    def __init__(self, path: Path):
        self.path = Path(path)
        self._records: dict[str, CacheRecord] = {}
        self._load()

    def _load(self) -> None:
        if not self.path.exists():
            return
        with open(self.path, encoding="utf-8") as handle:
            for line in handle:
                line = line.strip()
                if not line:
                    continue
                try:
                    record = CacheRecord.from_json(json.loads(line))
                except (ValueError, KeyError, TypeError):
                    # a damaged line costs a recomputation, nothing more
                    continue
                self._keep_better(record)

    def _keep_better(self, record: CacheRecord) -> None:
        old = self._records.get(record.pair_id)
        if old is None:
            self._records[record.pair_id] = record
            return
        # A witness or obstruction beats depth; otherwise deeper wins.
        rank_new = (record.kind in ("arithmetic_witness", "obstructed"), record.searched_depth)
        rank_old = (old.kind in ("arithmetic_witness", "obstructed"), old.searched_depth)
        if rank_new >= rank_old:
            self._records[record.pair_id] = record

    def lookup(self, pair_id: str, max_depth: int) -> Optional[CacheRecord]:
        record = self._records.get(pair_id)
        if record is not None and record.settles(max_depth):
            return record
        return None

    def store(self, record: CacheRecord) -> None:
        self._keep_better(record)
        self._flush()

    def _flush(self) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp_name = tempfile.mkstemp(
            dir=self.path.parent, prefix=self.path.name, suffix=".tmp"
        )
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                for pair_id in sorted(self._records):
                    handle.write(json.dumps(self._records[pair_id].to_json()) + "\n")
            os.replace(tmp_name, self.path)
        except BaseException:
            try:
                os.unlink(tmp_name)
            except OSError:
                pass
            raise

    def __len__(self) -> int:
        return len(self._records)


def record_for(pair, classification, nodes: Optional[int] = None) -> CacheRecord:
    witness = classification.witness
    return CacheRecord(
        pair_id=pair.pair_id,
        degree=pair.degree,
        searched_depth=classification.searched_depth or 0,
        kind=classification.kind,
        witness=str(witness) if witness else None,
        witness_length=classification.witness_length,
        gcd=classification.gcd,
        nodes=nodes,
        created_at=datetime.now(timezone.utc).isoformat(timespec="seconds"),
        tool_version=__version__,
    )
