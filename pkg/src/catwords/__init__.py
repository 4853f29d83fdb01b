"""Descent statistics on Catalan words avoiding short patterns."""
from .core import (
    FirstReturnSplit,
    catalan_number,
    descent_count,
    enumerate_words,
    first_return_join,
    first_return_split,
    validate,
)
from .patterns import avoiders, contains, count_occurrences, descent_distribution, descent_popularity

__version__ = "0.1.0"
