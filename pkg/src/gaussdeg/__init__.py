"""Degradability analysis of one-mode bosonic Gaussian channels."""

from .channels import (
    ChannelSpec,
    KChannel,
    amp_coupling,
    apply_general,
    apply_general_complementary,
    apply_k,
    apply_k_complementary,
    bs_coupling,
    k_coupling,
    swap_coupling,
)
from .decompose import (
    Decomposition,
    apply_decomposed,
    decompose,
    generate_coupling,
    verify_decomposition,
)
from .degradability import (
    Classification,
    antidegrading_k,
    classify,
    degrading_k,
    random_states,
    verify_anti_degradability,
    verify_weak_degradability,
)
from .exceptions import (
    GaussDegError,
    InvalidCoupling,
    InvalidState,
    ParseError,
    RegimeError,
    Unsupported,
)
from .gaussian import (
    GaussianState,
    SqueezeParams,
    apply_squeeze,
    char_fn_eval,
    coherent,
    compute_q,
    rotate,
    squeezed_thermal,
    state_distance,
    thermal,
    vacuum,
    validate_coupling,
)

__version__ = "0.1.0"
