"""Compact event logging for long verification runs."""
import logging
from datetime import datetime

from hopfext.core.config import settings

_logger = logging.getLogger("hopfext")
_logger.setLevel(logging.INFO)
_handler = logging.StreamHandler()
_handler.setFormatter(logging.Formatter("%(message)s"))
if not _logger.handlers:
    _logger.addHandler(_handler)

# ANSI colors
RESET = "\033[0m"
GRAY = "\033[90m"
GREEN = "\033[92m"
YELLOW = "\033[93m"
RED = "\033[91m"
CYAN = "\033[96m"
BLUE = "\033[94m"
MAGENTA = "\033[95m"

STYLES = {
    # Scenario runs
    "RUN": (CYAN, "[RUN]"),
    "TASK": (CYAN, "[TASK]"),

    # Rewriting
    "COMPLETE": (BLUE, "[GB]"),
    "BASIS": (BLUE, "[PBW]"),

    # Structure checks
    "HOPF": (GREEN, "[HOPF]"),
    "EXACT": (GREEN, "[EXACT]"),
    "CLEFT": (GREEN, "[CLEFT]"),
    "SPLIT": (GREEN, "[SPLIT]"),
    "TWIST": (MAGENTA, "[TWIST]"),
    "LIE": (MAGENTA, "[LIE]"),
    "BETTI": (MAGENTA, "[BETTI]"),

    # Outcomes that need a human
    "FINDING": (YELLOW, "[FINDING]"),
    "INCONCLUSIVE": (YELLOW, "[?]"),
    "WARN": (YELLOW, "[WARN]"),
    "ERROR": (RED, "[ERROR]"),
}


def log(event: str, **data):
    """Log an event with optional data."""
    time = datetime.now().strftime("%H:%M:%S")

    color, icon = STYLES.get(event, (GRAY, "•"))
    if not settings.log_color:
        color = ""

    parts = [f"{k}={v}" for k, v in data.items() if v is not None]
    data_str = " ".join(parts)

    reset = RESET if settings.log_color else ""
    gray = GRAY if settings.log_color else ""
    msg = f"{gray}{time}{reset} {icon} {color}{event}{reset}"
    if data_str:
        msg += f" {data_str}"

    _logger.info(msg)


def log_step(stage: str, **data):
    """Log a construction stage (completion, basis count, ...)."""
    log(stage.upper(), **data)


def log_verdict(check: str, verdict: str, **data):
    """Log the outcome of a named check."""
    event = check.upper() if check.upper() in STYLES else "TASK"
    log(event, check=check, verdict=verdict, **data)


def log_finding(msg: str, **data):
    """Log a result that disagrees with a stated formula."""
    log("FINDING", msg=msg, **data)


def log_error(context: str, msg: str):
    """Log error."""
    log("ERROR", context=context, msg=msg)


def log_warn(msg: str):
    """Log warning."""
    log("WARN", msg=msg)
