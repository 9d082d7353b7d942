from ._quartic_brauer import *  # noqa: F401,F403
