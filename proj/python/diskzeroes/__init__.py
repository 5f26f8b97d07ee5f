"""Potential-theory toolkit for zero sets of weighted disk spaces."""

from ._diskzeroes import *  # noqa: F401,F403
