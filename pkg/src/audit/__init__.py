"""Run journal"""

from .journal import RunJournal

__all__ = ["RunJournal"]
