"""Exact quantum cluster structure on quantum unipotent coordinate rings.

Layers, bottom up: laurent (exact scalars), cartan (weights and Weyl
combinatorics), seeds (initial quantum seed from a reduced word), torus
(based quantum torus and mutation), evaluator + shuffle (the functional
realization where minors are honest value tables), verifier (exact
identity suites), cli/service (tooling surfaces).
"""

from ._kernels import BACKEND as kernel_backend
from .cartan import CartanDatum, Weight
from .laurent import QLaurentScalar
from .seeds import MinorSpec, QuantumSeed, ReducedWordData, build_seed, build_word_data
from .torus import MutationState, TorusElement

__all__ = [
    "CartanDatum",
    "Weight",
    "QLaurentScalar",
    "MinorSpec",
    "QuantumSeed",
    "ReducedWordData",
    "build_seed",
    "build_word_data",
    "MutationState",
    "TorusElement",
    "kernel_backend",
]

__version__ = "0.1.0"
