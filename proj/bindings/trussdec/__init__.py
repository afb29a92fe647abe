try:
    from ._trussdec import *  # noqa: F401,F403
except ImportError:  # running against a bare build tree
    from _trussdec import *  # noqa: F401,F403
