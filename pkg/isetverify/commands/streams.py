# isetverify/commands/streams.py
import contextlib
import sys
from pathlib import Path
from typing import IO, Iterator, Optional

from ..errors import PreconditionError


@contextlib.contextmanager
def open_input(path: Optional[str]) -> Iterator[IO[str]]:
    """stdin when the path is absent or '-'."""
    if not path or path == "-":
        yield sys.stdin
        return
    try:
        handle = Path(path).open("r", encoding="utf-8")
    except OSError as e:
        raise PreconditionError(f"cannot open input {path}: {e}") from e
    with handle:
        yield handle


@contextlib.contextmanager
def open_output(path: Optional[str]) -> Iterator[IO[str]]:
    """stdout when the path is absent or '-'."""
    if not path or path == "-":
        yield sys.stdout
        sys.stdout.flush()
        return
    try:
        handle = Path(path).open("w", encoding="utf-8")
    except OSError as e:
        raise PreconditionError(f"cannot open output {path}: {e}") from e
    with handle:
        yield handle
