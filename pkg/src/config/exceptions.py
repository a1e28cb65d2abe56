"""Gymnav config exceptions"""


class ConfigError(Exception):
    """A Config Error has ocurred"""
