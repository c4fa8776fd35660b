from ._nodim import *  # noqa: F401,F403
