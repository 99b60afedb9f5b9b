"""Box-ball system simulation, RS insertion, Greene statistics and Knuth classes."""

from ._boxball import (
    CapacityError,
    InternalError,
    carrier_eject,
    carrier_trace,
    greene_profile,
    inverse_rs,
    is_steady,
    knuth_class,
    knuth_dot,
    parse_permutation,
    qhat_class,
    rs,
    simulate,
    soliton_decomposition,
    steady_state_time,
    suite_names,
    verify,
)

__all__ = [
    "CapacityError",
    "InternalError",
    "carrier_eject",
    "carrier_trace",
    "greene_profile",
    "inverse_rs",
    "is_steady",
    "knuth_class",
    "knuth_dot",
    "parse_permutation",
    "qhat_class",
    "rs",
    "simulate",
    "soliton_decomposition",
    "steady_state_time",
    "suite_names",
    "verify",
]
