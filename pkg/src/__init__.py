"""Angular control charts for multi-state system reliability."""

__version__ = "1.0.0"
__author__ = "ACC Toolkit"
