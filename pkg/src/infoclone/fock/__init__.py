# -*- coding: utf-8 -*-
"""
A brute-force truncated Fock-space oracle used to validate the label-space
cloning engine independently.
"""
from .evolution import (
    build_sector_unitary,
    build_unitary,
    evolve,
    MAX_ORACLE_MODES,
    number_sectors,
    oracle_fidelity,
    OracleComparison,
    SectorUnitary,
    unitarity_residual,
)
from .operators import (
    annihilation_matrix,
    annihilation_operator,
    clone_exponent,
    commutator_residuals,
    CommutatorResiduals,
    creation_matrix,
    DEFAULT_MAX_DENSE_DIMENSION,
)
from .space import (
    basis_vector,
    coherent_vector,
    DEFAULT_CUTOFF,
    DEFAULT_MAX_AMPLITUDES,
    fidelity,
    FockSpace,
    StateVector,
    truncation_fidelity,
)
