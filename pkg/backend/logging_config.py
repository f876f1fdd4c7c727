"""
Average-Degree Partition Solver - Central Logging Configuration
"""
import logging
import logging.handlers
import os
import sys
from pathlib import Path
from typing import Optional

from .config import LOG_LEVEL, LOG_FILE, BASE_DIR


def configure_logging(console_level: Optional[str] = None):
    """
    Setup logging configuration
    - Rotates logs every 10MB (keeps 5 backups)
    - detailed formatting with timestamps
    - Console output goes to stderr so CLI stdout stays machine readable
    """
    root_logger = logging.getLogger()
    root_logger.setLevel(getattr(logging, LOG_LEVEL))

    # Remove existing handlers to avoid duplicates during reloads
    if root_logger.hasHandlers():
        root_logger.handlers.clear()

    # Define Formatters
    detailed_formatter = logging.Formatter(
        fmt='%(asctime)s - %(name)s - %(levelname)s - [%(filename)s:%(lineno)d] - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    console_formatter = logging.Formatter(
        fmt='%(levelname)s: %(message)s'
    )

    # 1. File Handler (Rotating) - skipped when LOG_FILE is empty
    log_path = None
    if LOG_FILE:
        log_path = Path(BASE_DIR) / LOG_FILE
        os.makedirs(log_path.parent, exist_ok=True)

        file_handler = logging.handlers.RotatingFileHandler(
            filename=log_path,
            maxBytes=10 * 1024 * 1024,  # 10 MB
            backupCount=5,
            encoding='utf-8'
        )
        file_handler.setFormatter(detailed_formatter)
        file_handler.setLevel(getattr(logging, LOG_LEVEL))
        root_logger.addHandler(file_handler)

    # 2. Console Handler
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(console_formatter)
    console_handler.setLevel(getattr(logging, console_level or "WARNING"))
    root_logger.addHandler(console_handler)

    if console_level == "DEBUG":
        root_logger.setLevel(logging.DEBUG)

    # 3. Third-party loggers (Quiet them down)
    logging.getLogger("uvicorn.access").setLevel(logging.WARNING)
    logging.getLogger("httpx").setLevel(logging.WARNING)

    logging.info(f"✅ Logging initialized. Writing to: {log_path or 'console only'}")
