"""Numerical kernel backend selection.

The hot inner loops (Bessel evaluation, direct Fourier grid transforms,
moment accumulations) exist twice: a compiled Cython extension ``_core``
and a pure-Python/numpy twin ``_pykernels`` with identical signatures.
The extension is preferred when importable; set ``CIRCLE_UNCERTAINTY_PURE=1``
to force the fallback.  ``BACKEND`` names the active implementation.
"""

import os

if os.environ.get("CIRCLE_UNCERTAINTY_PURE", "") not in ("", "0"):
    from . import _pykernels as _impl

    BACKEND = "python"
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _pykernels as _impl

        BACKEND = "python"

bessel_i = _impl.bessel_i
synthesize = _impl.synthesize
analyze = _impl.analyze
coeff_moments = _impl.coeff_moments
grid_e_moments = _impl.grid_e_moments

__all__ = [
    "BACKEND",
    "bessel_i",
    "synthesize",
    "analyze",
    "coeff_moments",
    "grid_e_moments",
]
