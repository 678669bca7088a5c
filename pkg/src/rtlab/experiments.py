"""Experiment records, the JSON-lines log, seed derivation, and artifact
directories: the reproducibility plumbing shared by the service and CLI."""

from __future__ import annotations

import hashlib
import json
import os
import threading
import time
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

from . import __version__

ENV_OUTPUT_ROOT = "RTLAB_OUTPUT_ROOT"


def derive_seed(master: int, module: str, call_index: int = 0) -> int:
    """Stable sub-seed from (master seed, module name, call index), so adding
    a call to a script does not perturb the seeds of earlier calls."""
    payload = f"{master}:{module}:{call_index}".encode()
    return int.from_bytes(hashlib.sha256(payload).digest()[:8], "big")


def output_root() -> Path:
    return Path(os.environ.get(ENV_OUTPUT_ROOT, ".rtlab"))


@dataclass
class ExperimentRecord:
    command: str
    params: dict
    seed: Optional[int]
    outputs: dict
    wall_time: float
    timestamp: str
    version: str = __version__
    inputs: dict = field(default_factory=dict)
    artifacts: list = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, default=str)


class ExperimentLog:
    """Append-only JSON-lines log; one atomic line per record."""

    SCHEMA_VERSION = 1

    def __init__(self, root: Optional[Path] = None):
        self.root = Path(root) if root is not None else output_root()
        self._lock = threading.Lock()

    @property
    def log_path(self) -> Path:
        return self.root / "log.jsonl"

    def record(
        self,
        command: str,
        params: dict,
        outputs: dict,
        seed: Optional[int] = None,
        wall_time: float = 0.0,
        inputs: Optional[dict] = None,
        artifacts: Optional[list] = None,
    ) -> ExperimentRecord:
        rec = ExperimentRecord(
            command=command,
            params=params,
            seed=seed,
            outputs=outputs,
            wall_time=wall_time,
            timestamp=datetime.now(timezone.utc).isoformat(),
            inputs=inputs or {},
            artifacts=artifacts or [],
        )
        self.root.mkdir(parents=True, exist_ok=True)
        line = json.dumps(
            {"schema": self.SCHEMA_VERSION, **json.loads(rec.to_json())}, sort_keys=True
        )
        with self._lock, open(self.log_path, "a") as fh:
            fh.write(line + "\n")
        return rec

    def read_all(self) -> list[dict]:
        try:
            with open(self.log_path) as fh:
                return [json.loads(line) for line in fh if line.strip()]
        except FileNotFoundError:
            return []


def run_dir(root: Optional[Path] = None, tag: str = "") -> Path:
    """Fresh runs/<timestamp>-<hash>/ directory with a manifest stub."""
    base = Path(root) if root is not None else output_root()
    stamp = datetime.now(timezone.utc).strftime("%Y%m%dT%H%M%S")
    salt = hashlib.sha256(f"{stamp}:{time.monotonic_ns()}:{tag}".encode()).hexdigest()[:8]
    path = base / "runs" / f"{stamp}-{salt}"
    path.mkdir(parents=True, exist_ok=True)
    manifest = {"created": stamp, "tag": tag, "version": __version__}
    (path / "manifest.json").write_text(json.dumps(manifest, indent=2))
    return path
