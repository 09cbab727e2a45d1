"""Uncertainty bounds for angle and angular momentum on the circle.

States live on a truncated angular-momentum ladder; circular moments,
the sine/cosine covariance matrix, and three nested lower bounds on the
angular-momentum variance are computed from them.  See the module
docstrings for the conventions, and :mod:`circle_uncertainty.cli` for a
command-line front end.
"""

from ._kernels import BACKEND
from .bounds import (
    BoundsReport,
    SaturationFlags,
    full_report,
    saturation_flags,
    standard_bound,
    u2_alpha_sweep,
    u2_closed_form,
    v2_bound,
)
from .catalog import (
    VonMisesParams,
    cat_state,
    intelligent_residual,
    l_eigenstate,
    von_mises,
    x_extremal_state,
)
from .errors import DomainError, NumericalError
from .ladder import XMoments, apply_x, commutator_residual, similarity_residual, x_moments
from .moments import (
    AngularMoments,
    CovarianceMatrix,
    covariance,
    dispersion_e,
    dispersion_l,
    moments_from_coeffs,
    quadrature_oracle,
    resultant_vector,
)
from .special import BesselResult, bessel_i
from .states import (
    AngularGrid,
    CircleState,
    from_grid,
    from_wavefunction,
    load_state,
    make_state,
    rotate,
    save_state,
    to_grid,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "__version__",
    "AngularGrid",
    "AngularMoments",
    "BesselResult",
    "BoundsReport",
    "CircleState",
    "CovarianceMatrix",
    "DomainError",
    "NumericalError",
    "SaturationFlags",
    "VonMisesParams",
    "XMoments",
    "apply_x",
    "bessel_i",
    "cat_state",
    "commutator_residual",
    "covariance",
    "dispersion_e",
    "dispersion_l",
    "from_grid",
    "from_wavefunction",
    "full_report",
    "intelligent_residual",
    "l_eigenstate",
    "load_state",
    "make_state",
    "moments_from_coeffs",
    "quadrature_oracle",
    "resultant_vector",
    "rotate",
    "saturation_flags",
    "save_state",
    "similarity_residual",
    "standard_bound",
    "to_grid",
    "u2_alpha_sweep",
    "u2_closed_form",
    "v2_bound",
    "von_mises",
    "x_extremal_state",
    "x_moments",
]
