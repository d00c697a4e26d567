"""Solver for the BCS-Bogoliubov gap equation.

The heavy lifting lives in the compiled extension ``bcsgap._core``; this
package re-exports its public names.
"""

from bcsgap._core import (
    DeltaDerivative,
    GapPoint,
    GapSolver,
    MaterialParams,
    QuadratureConfig,
    SolverConfig,
    SweepResult,
    delta0,
    fn_G,
    fn_g,
    kernel_h,
    run_verification,
    tanh_over_eta,
    __version__,
)

__all__ = [
    "DeltaDerivative",
    "GapPoint",
    "GapSolver",
    "MaterialParams",
    "QuadratureConfig",
    "SolverConfig",
    "SweepResult",
    "delta0",
    "fn_G",
    "fn_g",
    "kernel_h",
    "run_verification",
    "tanh_over_eta",
    "__version__",
]
