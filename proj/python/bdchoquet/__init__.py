"""Choquet-integral Bernstein-Durrmeyer approximation operators."""

from bdchoquet._core import *  # noqa: F401,F403
from bdchoquet._core import __version__  # noqa: F401
