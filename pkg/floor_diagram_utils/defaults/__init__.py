from .commands import _DEFAULTS_CMD, _EXIT_CODES

__all__ = ["_DEFAULTS_CMD", "_EXIT_CODES"]
