"""File system utilities."""

import sys
from pathlib import Path
from typing import Union

from engine.core.errors import InputError

STDIN = "-"


def ensure_dir(path: Path) -> Path:
    """Ensure directory exists, create if needed."""
    path.mkdir(parents=True, exist_ok=True)
    return path


def safe_write(filepath: Path, content: str) -> None:
    """
    Atomically write text content.

    Args:
        filepath: Target file path
        content: Text to write, UTF-8 encoded
    """
    ensure_dir(filepath.parent)
    tmp_path = filepath.with_suffix(filepath.suffix + ".tmp")
    with open(tmp_path, "w", encoding="utf-8") as f:
        f.write(content)
    tmp_path.replace(filepath)


def read_input(source: Union[str, Path]) -> str:
    """
    Read UTF-8 text from a path, or from standard input when source is '-'.

    Raises:
        InputError: If the bytes are not valid UTF-8
    """
    try:
        if str(source) == STDIN:
            return sys.stdin.read()
        with open(source, "r", encoding="utf-8") as f:
            return f.read()
    except UnicodeDecodeError as e:
        raise InputError(f"{source}: not valid UTF-8 at byte {e.start}") from e
