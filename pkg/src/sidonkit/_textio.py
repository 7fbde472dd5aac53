import contextlib
from pathlib import Path

from .errors import FormatError


def data_lines(source):
    """Yield ``(lineno, tokens)`` for each non-blank, non-comment line.

    ``source`` is a path or an iterable of strings (an open file works).
    """
    if isinstance(source, (str, Path)):
        with open(source) as fh:
            yield from data_lines(fh.readlines())
        return
    for lineno, line in enumerate(source, 1):
        line = line.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_int(token, lineno, base=10):
    try:
        return int(token, base)
    except ValueError:
        raise FormatError(f"not an integer: {token!r}", lineno) from None


def open_sink(sink):
    """Return ``(fh, close)`` for a path or an already-open text stream."""
    if isinstance(sink, (str, Path)):
        return open(sink, "w"), True
    return sink, False


@contextlib.contextmanager
def located(source):
    """Attach the file name to any FormatError raised while reading ``source``."""
    try:
        yield
    except FormatError as exc:
        if exc.path is None and isinstance(source, (str, Path)):
            raise FormatError(exc.message, exc.lineno, str(source)) from None
        raise
