"""Subspace codes for random linear network coding."""

__version__ = "0.1.0"

from .bounds import (
    asymptotic_curves,
    bound_report,
    covering_bound,
    gaussian_coefficient,
    greedy_gv_code,
    normalized_params,
    packing_bound,
    singleton_bound,
    sphere_size,
)
from .channel import (
    ChannelConfig,
    ChannelOutcome,
    PacketModelConfig,
    apply_channel,
    correctability_check,
    erasure_operator,
    packet_channel,
)
from .code import (
    CodeParams,
    KKCode,
    brute_force_md_decode,
    complementary_code,
    interpolate,
    min_distance,
    puncture,
)
from .errors import ParameterError, ParseError, PreconditionError, ResourceError
from .field import GF, FieldElement, get_field
from .linearized import BivariateLinearizedPoly, LinearizedPoly
from .subspace import Subspace, enumerate_grassmannian, random_subspace

__all__ = [
    "BivariateLinearizedPoly",
    "ChannelConfig",
    "ChannelOutcome",
    "CodeParams",
    "FieldElement",
    "GF",
    "KKCode",
    "LinearizedPoly",
    "PacketModelConfig",
    "ParameterError",
    "ParseError",
    "PreconditionError",
    "ResourceError",
    "Subspace",
    "apply_channel",
    "asymptotic_curves",
    "bound_report",
    "brute_force_md_decode",
    "complementary_code",
    "correctability_check",
    "covering_bound",
    "enumerate_grassmannian",
    "erasure_operator",
    "gaussian_coefficient",
    "get_field",
    "greedy_gv_code",
    "interpolate",
    "min_distance",
    "normalized_params",
    "packet_channel",
    "packing_bound",
    "puncture",
    "random_subspace",
    "singleton_bound",
    "sphere_size",
]
