"""Centralized enums for verdicts and task names."""
from enum import Enum


class Verdict(str, Enum):
    """Outcome of a verification."""
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


class TaskKind(str, Enum):
    """Tasks a scenario file may request."""
    BUILD = "build"
    VERIFY_HOPF = "verify-hopf"
    VERIFY_EXTENSION = "verify-extension"
    TWIST_CHECK = "twist-check"
    BETTI = "betti"
    LIE = "verify-lie"


class ExtensionLevel(str, Enum):
    """How far verify-extension goes down the exact -> cleft -> split chain."""
    EXACT = "exact"
    CLEFT = "cleft"
    SPLIT = "split"


class BettiMethod(str, Enum):
    """Method used for a Betti table."""
    BAR = "bar"
    MINIMAL = "minimal"
    BOTH = "both"


class CheckMode(str, Enum):
    """Generator-level checks vs all basis words."""
    GENERATORS = "generators"
    EXHAUSTIVE = "exhaustive"
