"""Exact ordinal arithmetic, club sequences, walks and finite colorings."""

from ._ordlab import *  # noqa: F401,F403
from ._ordlab import DomainError, Ordinal, OrdSet, ParseError  # noqa: F401
