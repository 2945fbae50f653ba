"""Confidence bands and quantile intervals for long-range dependent time series."""

try:
    from ._lrdband import *  # noqa: F401,F403  (installed package layout)
    from ._lrdband import __version__  # noqa: F401
except ImportError:  # pragma: no cover - build-tree layout
    from _lrdband import *  # noqa: F401,F403
    from _lrdband import __version__  # noqa: F401
