"""Zeta-signal forecasting toolkit: python surface over the C++ core.

Submodules mirror the C++ namespaces:

    zeta        critical-line evaluation, signal sampling, zero location
    data        macro CSV ingestion and the t-argument transform
    forecast    cyclical correction and alpha calibration
    hmm         four-phase hidden Markov model
    spectral    discrete Fourier analysis of the signal
    stochastic  Monte Carlo shock bands
    arima       ARIMA comparison baseline
    mcdm        AHP weights and model ranking
"""

from zetacast._core import (  # noqa: F401
    __version__,
    arima,
    data,
    forecast,
    hmm,
    mcdm,
    spectral,
    stochastic,
    zeta,
)

__all__ = [
    "__version__",
    "arima",
    "data",
    "forecast",
    "hmm",
    "mcdm",
    "spectral",
    "stochastic",
    "zeta",
]
