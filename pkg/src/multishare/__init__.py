"""Threshold sharing of sets of secrets over a prime field.

Three schemes are provided: Shamir single-secret sharing, the points scheme
(secrets as polynomial values at ``0..k-1``) and coefficient packing (secrets
as polynomial coefficients). :mod:`multishare.analysis` and
:mod:`multishare.attacks` quantify where the unrandomized schemes break.
"""

from .errors import *  # noqa: F401,F403
from .field import FieldElement, PrimeModulus, fe_add, fe_inv, fe_mul, fe_pow, fe_sub, is_prime
from .poly import (
    NEG_INFINITY,
    Polynomial,
    interpolate,
    poly_eval,
    true_degree,
    vandermonde_first_row_inverse,
)
from .schemes import (
    RandomSource,
    Scheme,
    Share,
    chunk_secret,
    coeff_reconstruct,
    coeff_split,
    points_reconstruct,
    points_split,
    shamir_reconstruct,
    shamir_split,
    unchunk_secret,
)
from .analysis import CensusReport, BlowupReport, Method, blowup_factor, degeneracy_census, eq1_check
from .attacks import DivisibilityInference, RelatedShareForgery, divisibility_attack, related_share_forgery

__version__ = "0.1.0"
