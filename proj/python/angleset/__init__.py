"""Angle covers of rotation-system graphs."""

from ._core import *  # noqa: F401,F403
