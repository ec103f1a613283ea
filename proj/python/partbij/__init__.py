"""Integer partition bijections: Glaisher, Sylvester, Bressoud and the
pair-insertion extension, with class predicates, enumeration, verification
sweeps, and text diagram renderers.

Partitions are plain lists of positive integers; every function canonicalizes
its input to non-increasing order.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
