class CapacityError(RuntimeError):
    """A request exceeds the size envelope the toolkit is built for."""


class FormatError(ValueError):
    """A data file does not parse; ``lineno`` is 1-based (0 if unknown)."""

    def __init__(self, message, lineno=0, path=None):
        self.message = message
        self.lineno = lineno
        self.path = path
        where = f"line {lineno}" if lineno else ""
        if path:
            where = f"{path}:{lineno}" if lineno else str(path)
        super().__init__(f"{where}: {message}" if where else message)
