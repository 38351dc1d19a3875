from ._confspace import *  # noqa: F401,F403
from ._confspace import __doc__  # noqa: F401
