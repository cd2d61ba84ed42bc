"""Smart waste bin collection simulator (python bindings)."""

from ._binsim import *  # noqa: F401,F403
from ._binsim import __version__  # noqa: F401
