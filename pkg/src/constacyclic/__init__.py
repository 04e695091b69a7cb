"""Minimum distances of repeated-root constacyclic codes of lengths n p^s and 2n p^s."""

from .codes import (
    CodeInstance,
    SingleFactorSpec,
    TwoFactorSpec,
    build_negacyclic,
    build_single,
    build_two_factor,
    encode,
    is_codeword,
    lambda_shift,
    x2_plus_1_irreducible,
)
from .distance import (
    DistanceResult,
    certificate_for,
    distance_for,
    distance_single,
    distance_two_factor,
    negacyclic_distance,
)
from .errors import *  # noqa: F401,F403
from .finite_field import FieldContext, FieldElement, ff_construct, ff_enumerate
from .oracle import (
    OracleReport,
    brute_force_min_distance,
    low_weight_search,
    verify_code,
    verify_point,
)
from .padic import Beta, Low, TauK, classify_exponent, padic_expansion, weight_of_power
from .polynomial import Polynomial, gcd, poly_weight

__version__ = "0.1.0"
