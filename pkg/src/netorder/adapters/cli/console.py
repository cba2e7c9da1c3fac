from __future__ import annotations

import logging

from rich.console import Console
from rich.logging import RichHandler

PACKAGE_LOGGER = "netorder"


def stderr_console() -> Console:
    return Console(stderr=True)


def configure_logging(level: str) -> None:
    """Route the package loggers to a rich handler on stderr.

    Repeated calls replace the handler installed by the previous call.
    """

    logger = logging.getLogger(PACKAGE_LOGGER)
    for handler in list(logger.handlers):
        if isinstance(handler, RichHandler):
            logger.removeHandler(handler)

    handler = RichHandler(console=stderr_console(), show_path=False, markup=False)
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    logger.addHandler(handler)
    logger.setLevel(level)
