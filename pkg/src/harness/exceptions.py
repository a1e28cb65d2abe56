"""Harness exceptions"""


class HarnessError(Exception):
    """A Harness Error has ocurred"""


class EmptyRunLog(HarnessError):
    """A statistic was requested over a log without episodes"""


class RunLogMismatch(HarnessError):
    """Two logs cannot be compared"""


class RunLogFormatError(HarnessError):
    """Run CSV could not be parsed"""
