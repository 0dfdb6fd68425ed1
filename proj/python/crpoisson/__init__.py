"""Exact invariant-form calculus on G/M for G = SU(n+1,1).

Thin package around the pybind11 extension; all arithmetic stays exact
(Gaussian rationals) on the C++ side.
"""

from ._crpoisson import (
    Form,
    Model,
    conjugate,
    kappa,
    run_suite,
    scale,
    suite_names,
    wedge,
    __version__,
)

__all__ = [
    "Form",
    "Model",
    "conjugate",
    "kappa",
    "run_suite",
    "scale",
    "suite_names",
    "wedge",
    "__version__",
]
