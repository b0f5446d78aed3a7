# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""Logging configuration for pmmeas."""

import logging
import os
import sys
from typing import Optional


# Custom log level for OK messages (between INFO and WARNING)
OK_LEVEL = 25
logging.addLevelName(OK_LEVEL, "OK")


class PMMeasFormatter(logging.Formatter):
    """Formatter printing the [LEVEL] prefix style used on the console."""

    FORMATS = {
        logging.DEBUG: "[DEBUG] %(message)s",
        logging.INFO: "[INFO] %(message)s",
        OK_LEVEL: "[OK] %(message)s",
        logging.WARNING: "[WARN] %(message)s",
        logging.ERROR: "[ERROR] %(message)s",
        logging.CRITICAL: "[CRITICAL] %(message)s",
    }

    def format(self, record):
        log_fmt = self.FORMATS.get(record.levelno, "[%(levelname)s] %(message)s")
        formatter = logging.Formatter(log_fmt)
        return formatter.format(record)


class PMMeasLogger(logging.Logger):
    """Logger with an 'ok' method for passing checks."""

    def ok(self, msg, *args, **kwargs):
        """Log a success message at OK level."""
        if self.isEnabledFor(OK_LEVEL):
            self._log(OK_LEVEL, msg, args, **kwargs)


def _level_from_env(default: int) -> int:
    name = os.environ.get("PMMEAS_LOG_LEVEL", "").strip().upper()
    if not name:
        return default
    if name == "OK":
        return OK_LEVEL
    return getattr(logging, name, default)


def setup_logger(
    name: str = "pmmeas",
    level: int = logging.INFO,
    log_file: Optional[str] = None
) -> PMMeasLogger:
    """
    Set up and return the pmmeas logger.

    The console handler prints prefixed messages on stdout; the optional
    file handler keeps timestamped lines at DEBUG level.
    """
    logging.setLoggerClass(PMMeasLogger)

    logger = logging.getLogger(name)
    logger.setLevel(logging.DEBUG)

    # Avoid adding duplicate handlers
    if logger.handlers:
        return logger

    console_handler = logging.StreamHandler(sys.stdout)
    console_handler.setLevel(level)
    console_handler.setFormatter(PMMeasFormatter())
    logger.addHandler(console_handler)

    if log_file:
        log_dir = os.path.dirname(log_file)
        try:
            if log_dir and not os.path.exists(log_dir):
                os.makedirs(log_dir, exist_ok=True)
            file_handler = logging.FileHandler(log_file, encoding="utf-8")
        except OSError as e:
            logger.warning(f"Could not open log file {log_file}: {e}")
        else:
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(logging.Formatter(
                "%(asctime)s [%(levelname)s] %(name)s: %(message)s",
                datefmt="%Y-%m-%d %H:%M:%S"
            ))
            logger.addHandler(file_handler)

    return logger


def set_console_level(level: int) -> None:
    """Change the console verbosity of the default logger (e.g. for --quiet)."""
    for handler in logger.handlers:
        if isinstance(handler, logging.StreamHandler) and not isinstance(handler, logging.FileHandler):
            handler.setLevel(level)


# Get project root directory (parent of src/)
_PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
_LOG_FILE = os.environ.get("PMMEAS_LOG_FILE", os.path.join(_PROJECT_ROOT, "logs", "pmmeas.log"))

# Initialize the default logger with file logging
logger = setup_logger(level=_level_from_env(logging.INFO), log_file=_LOG_FILE)
