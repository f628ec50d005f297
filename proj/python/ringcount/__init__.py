"""Python bindings for the ringcount library."""

from ._ringcount import (
    GuardExceeded,
    InternalFault,
    ParameterError,
    ParseError,
    aleph,
    chain_binomial,
    gaussian_binomial,
    kappa,
    omega,
    omega_histogram,
    restrict,
    run,
)

__all__ = [
    "GuardExceeded",
    "InternalFault",
    "ParameterError",
    "ParseError",
    "aleph",
    "chain_binomial",
    "gaussian_binomial",
    "kappa",
    "omega",
    "omega_histogram",
    "restrict",
    "run",
]
