"""At-the-money option pricing under the CGMY model.

Short-time expansions, Fourier inversion and a change-of-measure Monte
Carlo estimator, together with the special functions and stable samplers
they rely on.
"""

__version__ = "0.1.0"

from .bsm import AtmQuote, bs_atm_expansion, bs_atm_price, implied_vol_atm
from .exceptions import DomainError, InvalidParameterError, NumericalQualityError, UnsupportedOrderError
from .expand import ExpansionCoeffs, coeffs, iv_approx, price_approx
from .model import (
    CgmyParams,
    DerivedQuantities,
    bs_char_exponent,
    char_exponent,
    char_exponent_share,
    characteristic_function,
    derive,
    levy_density,
    validate,
)
from .price_ift import IftConfig, ift_price, zeta
from .price_mc import McConfig, mc_diagnostics, mc_price
from .results import PriceEstimate
from .stable import StableSpec, ez_plus, sample_one_sided, sample_symmetric_z, tail_reference

__all__ = [
    "AtmQuote", "CgmyParams", "DerivedQuantities", "DomainError", "ExpansionCoeffs",
    "IftConfig", "InvalidParameterError", "McConfig", "NumericalQualityError",
    "PriceEstimate", "StableSpec", "UnsupportedOrderError",
    "bs_atm_expansion", "bs_atm_price", "bs_char_exponent", "char_exponent",
    "char_exponent_share", "characteristic_function", "coeffs", "derive", "ez_plus",
    "ift_price", "implied_vol_atm", "iv_approx", "levy_density", "mc_diagnostics",
    "mc_price", "price_approx", "sample_one_sided", "sample_symmetric_z",
    "tail_reference", "validate", "zeta",
]
