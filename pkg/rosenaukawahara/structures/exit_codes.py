"""
CLI Exit Codes
"""

from enum import IntEnum


class ExitCode(IntEnum):
    """Process exit statuses of the command-line harness."""

    SUCCESS = 0
    USAGE_ERROR = 1
    NUMERICAL_FAILURE = 2
    PROPERTY_FAILURE = 3
