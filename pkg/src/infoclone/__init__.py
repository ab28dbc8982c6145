# -*- coding: utf-8 -*-
from loguru import logger as _logger

_logger.disable("infoclone")

from . import exceptions
from .cloning import (
    amplification_factor,
    apply_clone_map,
    attenuation_factor,
    build_generator,
    clone,
    CloneGenerator,
    exponentiate,
    LabelRotation,
    literal_overlap_after,
    OverlapComparison,
    predicted_clone_labels,
    verify_overlap_preservation,
    would_enable_cloning,
)
from .estimation import (
    clone_estimates,
    control_estimates,
    estimate_alpha,
    estimate_control,
    heterodyne_outcomes,
    HeterodyneSample,
    run_control_trials,
    run_trials,
    sample_control,
    sample_heterodyne,
    sweep,
    SweepPoint,
    TrialStatistics,
)
from .states import (
    ComplexAmplitude,
    excitations,
    fidelity_to,
    overlap_sq,
    product_overlap_sq,
    ProductCoherentState,
    scaling_overlap_discrepancy,
    scaling_overlap_log_ratio,
    total_excitation,
)
from .version import __version__
