import os
import json
import logging
from logging.handlers import RotatingFileHandler

CHECK_LEVEL_NUM = 38
DEFAULT_LOG_BACKUP_COUNT = 10


def setup_events_logger(full_path, events_retention_size):
    """Rotating events.log in full_path, one line per golden check:

        time | check | match/MISMATCH | seconds | differing entries
    """
    logging.addLevelName(CHECK_LEVEL_NUM, "CHECK")

    logger = logging.getLogger("tilting.events")
    logger.setLevel(CHECK_LEVEL_NUM)
    logger.propagate = False

    formatter = logging.Formatter(
        "%(asctime)s | %(check)s | %(outcome)s | %(elapsed).3fs | %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )

    os.makedirs(full_path, exist_ok=True)
    path = os.path.join(full_path, "events.log")
    if not any(getattr(h, "baseFilename", None) == os.path.abspath(path) for h in logger.handlers):
        file_handler = RotatingFileHandler(
            path,
            maxBytes=events_retention_size,
            backupCount=DEFAULT_LOG_BACKUP_COUNT,
        )
        file_handler.setFormatter(formatter)
        file_handler.setLevel(CHECK_LEVEL_NUM)
        logger.addHandler(file_handler)

    return logger


def mismatch(expected, actual):
    """Entries on which a check's result differs from its expected value;
    keyed results report only the differing keys."""
    if isinstance(expected, dict) and isinstance(actual, dict):
        keys = sorted(set(expected) | set(actual), key=str)
        return {str(k): [expected.get(k), actual.get(k)] for k in keys if expected.get(k) != actual.get(k)}
    return {} if expected == actual else {"expected": expected, "actual": actual}


def log_check(logger, check, expected, actual, elapsed):
    if logger is None:
        return
    diff = mismatch(expected, actual)
    logger.log(
        CHECK_LEVEL_NUM,
        json.dumps(diff, sort_keys=True, default=str) if diff else "-",
        extra={"check": check, "outcome": "MISMATCH" if diff else "match", "elapsed": elapsed},
    )
