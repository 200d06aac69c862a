"""Generalized Pauli operators, mutually unbiased bases and phase operators for prime-dimensional qudits."""

from . import closed_forms, fourier, io, linalg, mub, pauli, phase, polar, reports, verify
from .fourier import build_F, build_V
from .mub import build_mubs, unbiasedness_report
from .pauli import build_class, build_generator, build_h, build_set_S, build_X, build_Z
from .phase import (
    build_E,
    build_kernel_Pi,
    build_povm_Delta,
    build_U,
    expectation_E,
    phase_density,
    phase_distribution,
)

__version__ = "0.1.0"
