"""Variable-order fractional calculus via Laplace-domain kernel representations.

The heavy lifting lives in the C++ extension module; this package re-exports
its public surface.
"""

from ._core import (
    CQGenerator,
    CQScheme,
    ContourPlan,
    ConvolutionCheckReport,
    KernelPair,
    KochubeiReport,
    RelaxationProblem,
    TimeSeries,
    TransitionFunction,
    TransitionKind,
    complex_power,
    cq_weights,
    gamma_fn,
    higher_order_pair,
    invert,
    invert_at,
    kochubei_check,
    make_constant,
    make_erf,
    make_exponential,
    make_kernel_pair,
    make_mittag_leffler,
    mittag_leffler,
    mittag_leffler_at,
    optimal_params,
    phi_j_kernel,
    phi_kernel,
    psi_kernel,
    reference_constant_solution,
    solve_cq,
    solve_lt,
    sonine_convolve,
    spectral_density,
    verify_pair,
)

__version__ = "0.1.0"

__all__ = [
    "CQGenerator",
    "CQScheme",
    "ContourPlan",
    "ConvolutionCheckReport",
    "KernelPair",
    "KochubeiReport",
    "RelaxationProblem",
    "TimeSeries",
    "TransitionFunction",
    "TransitionKind",
    "complex_power",
    "cq_weights",
    "gamma_fn",
    "higher_order_pair",
    "invert",
    "invert_at",
    "kochubei_check",
    "make_constant",
    "make_erf",
    "make_exponential",
    "make_kernel_pair",
    "make_mittag_leffler",
    "mittag_leffler",
    "mittag_leffler_at",
    "optimal_params",
    "phi_j_kernel",
    "phi_kernel",
    "psi_kernel",
    "reference_constant_solution",
    "solve_cq",
    "solve_lt",
    "sonine_convolve",
    "spectral_density",
    "verify_pair",
]
