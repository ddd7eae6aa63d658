from ._hddlogic import *  # noqa: F401,F403
from ._hddlogic import __doc__  # noqa: F401
