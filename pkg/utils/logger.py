# utils/logger.py
import logging
import os
from logging.handlers import RotatingFileHandler
from typing import Optional, Union

_DEFAULT_LEVEL = os.getenv("COXWL2_LOG_LEVEL", "INFO").upper()
_DEFAULT_FILE = os.getenv("COXWL2_LOG_FILE") or None      # console only unless set
_DEFAULT_MAX_MB = int(os.getenv("COXWL2_LOG_MAX_MB", "5"))
_DEFAULT_BACKUPS = int(os.getenv("COXWL2_LOG_BACKUPS", "3"))


def setup_logger(name: str,
                 level: Union[str, int] = _DEFAULT_LEVEL,
                 log_file: Optional[str] = _DEFAULT_FILE,
                 to_console: bool = True) -> logging.Logger:
    """
    Create/get a logger with console and optional rotating-file handlers.
    Re-using the same name returns the same configured logger (no duplicate handlers).
    The console handler writes to stderr; stdout carries the JSON documents.
    """
    logger = logging.getLogger(name)
    if isinstance(level, str):
        level = getattr(logging, level.upper(), logging.INFO)
    if logger.handlers:  # already configured
        logger.setLevel(level)
        return logger

    logger.setLevel(level)

    fmt = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
    datefmt = "%Y-%m-%d %H:%M:%S"
    formatter = logging.Formatter(fmt=fmt, datefmt=datefmt)

    if log_file:
        directory = os.path.dirname(log_file)
        if directory:
            os.makedirs(directory, exist_ok=True)
        file_handler = RotatingFileHandler(
            log_file,
            maxBytes=_DEFAULT_MAX_MB * 1024 * 1024,
            backupCount=_DEFAULT_BACKUPS,
            encoding="utf-8"
        )
        file_handler.setFormatter(formatter)
        file_handler.setLevel(level)
        logger.addHandler(file_handler)

    if to_console:
        stream_handler = logging.StreamHandler()
        stream_handler.setFormatter(formatter)
        stream_handler.setLevel(level)
        logger.addHandler(stream_handler)

    # Optional: quiet noisy libs
    logging.getLogger("networkx").setLevel(logging.WARNING)

    return logger
