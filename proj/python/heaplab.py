"""Python face of the heaplab library; everything lives in the extension."""

from _heaplab import *  # noqa: F401,F403
from _heaplab import __doc__  # noqa: F401
