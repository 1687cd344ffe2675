"""Logging configuration and utilities."""

import logging
import sys
from pathlib import Path
from logging.handlers import RotatingFileHandler
from typing import Optional

try:
    import colorlog
    HAS_COLORLOG = True
except ImportError:
    HAS_COLORLOG = False

DATE_FORMAT = '%Y-%m-%d %H:%M:%S'
CONSOLE_FORMAT = '%(asctime)s %(levelname)-8s %(name)s: %(message)s'
FILE_FORMAT = '%(asctime)s %(levelname)-8s %(name)s %(module)s.%(funcName)s:%(lineno)d: %(message)s'

LOG_COLORS = {
    'DEBUG': 'cyan',
    'INFO': 'green',
    'WARNING': 'yellow',
    'ERROR': 'red',
    'CRITICAL': 'red,bg_white',
}


def _console_formatter(use_colors: bool) -> logging.Formatter:
    if use_colors and HAS_COLORLOG and sys.stderr.isatty():
        return colorlog.ColoredFormatter(
            '%(log_color)s' + CONSOLE_FORMAT,
            datefmt=DATE_FORMAT,
            log_colors=LOG_COLORS,
        )
    return logging.Formatter(CONSOLE_FORMAT, datefmt=DATE_FORMAT)


def _file_handler(log_file: str) -> RotatingFileHandler:
    path = Path(log_file)
    path.parent.mkdir(parents=True, exist_ok=True)
    handler = RotatingFileHandler(
        path,
        maxBytes=10 * 1024 * 1024,  # 10MB
        backupCount=5,
        encoding='utf-8'
    )
    handler.setLevel(logging.DEBUG)
    handler.setFormatter(logging.Formatter(FILE_FORMAT, datefmt=DATE_FORMAT))
    return handler


def setup_logger(
    name: str = "acc",
    level: str = "INFO",
    log_file: Optional[str] = None,
    use_colors: bool = True
) -> logging.Logger:
    """
    Configure the toolkit logger.

    Console output goes to stderr so tables, CSV and JSON printed on stdout
    stay pipeable. Colors are used only when stderr is a terminal. The file
    log (when given) always records DEBUG.

    Args:
        name: Logger name; modules log under ``acc.<module>``
        level: Console level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Rotating log file path, or None
        use_colors: Colored console output via colorlog

    Returns:
        Configured logger
    """
    console_level = getattr(logging, level.upper())
    logger = logging.getLogger(name)
    logger.setLevel(logging.DEBUG if log_file else console_level)
    logger.propagate = False
    logger.handlers.clear()

    console = logging.StreamHandler(sys.stderr)
    console.setLevel(console_level)
    console.setFormatter(_console_formatter(use_colors))
    logger.addHandler(console)

    if log_file:
        logger.addHandler(_file_handler(log_file))

    return logger


def get_logger(name: str = "acc") -> logging.Logger:
    """Get existing logger or create a basic one."""
    logger = logging.getLogger(name)
    root = logging.getLogger(name.split('.')[0])
    if not logger.handlers and not root.handlers:
        # Library use without CLI setup: quiet by default
        setup_logger(root.name, level="WARNING")
    return logger
