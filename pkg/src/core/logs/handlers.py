import inspect
import logging

from loguru import logger


class UvicornHandler(logging.Handler):
    """Forwards uvicorn's stdlib records into loguru; access lines get the REQUEST level."""

    def emit(self, record: logging.LogRecord) -> None:
        level: str | int
        try:
            level = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        frame, depth = inspect.currentframe(), 0
        while frame and (depth == 0 or frame.f_code.co_filename == logging.__file__):
            frame = frame.f_back
            depth += 1

        message = record.getMessage()
        if record.name == "uvicorn.access":
            level = "REQUEST"
            message = _format_access(record) or message

        logger.opt(depth=depth, exception=record.exc_info).log(level, message)


def _format_access(record: logging.LogRecord) -> str | None:
    # uvicorn passes (client, method, path, http_version, status) as args
    args = record.args
    if not isinstance(args, tuple) or len(args) != 5:
        return None
    client, method, path, _, status = args
    return f"{client} {method} {path} -> {status}"
