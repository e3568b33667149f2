"""Run journal: one JSON line per CLI command"""

import json
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

from loguru import logger as log


class RunJournal:
    """Append-only JSONL journal of command runs"""

    def __init__(self, path: str):
        """Initialize run journal

        Args:
            path: JSONL file; parent directories are created on demand
        """
        self.path = Path(path)
        log.debug(f"Run journal initialized: {self.path}")

    def record(
        self,
        command: str,
        arguments: Dict[str, Any],
        exit_code: int,
        duration: float,
        summary: Optional[Dict[str, Any]] = None,
    ) -> bool:
        """Append one run record

        Args:
            command: Command name
            arguments: Command arguments
            exit_code: Process exit code
            duration: Wall time in seconds
            summary: Command-specific counters

        Returns:
            Whether the record was written
        """
        event = {
            "timestamp": datetime.now().isoformat(),
            "command": command,
            "arguments": arguments,
            "exit_code": exit_code,
            "duration": round(duration, 6),
            "summary": summary or {},
        }

        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "a", encoding="utf-8") as f:
                f.write(json.dumps(event, default=str) + "\n")
            log.debug(f"Journal record written: {command} -> {exit_code}")
            return True

        except OSError as e:
            log.error(f"Error writing run journal {self.path}: {e}")
            return False

    def recent(self, count: int = 100) -> List[Dict[str, Any]]:
        """Most recent records, oldest first

        Args:
            count: Number of records to return
        """
        if not self.path.exists():
            return []

        try:
            with open(self.path, "r", encoding="utf-8") as f:
                lines = [line for line in f.read().splitlines() if line.strip()]
            return [json.loads(line) for line in lines[-count:]] if count > 0 else []

        except (OSError, json.JSONDecodeError) as e:
            log.error(f"Error reading run journal {self.path}: {e}")
            return []
