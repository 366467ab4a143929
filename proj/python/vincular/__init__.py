"""Dash-pattern toolkit: pattern occurrence counting, avoider enumeration,
symmetry/Wilf classification, the sequence catalog and the bijections.

Permutations travel as one-line strings (digit strings up to n = 9,
comma-separated beyond); pattern sets as comma-separated pattern strings.
"""

from ._vincular import *  # noqa: F401,F403
from ._vincular import __version__  # noqa: F401
