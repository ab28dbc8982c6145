# -*- coding: utf-8 -*-
"""
This module provides a Monte Carlo reproduction of the statistics obtained
by estimating the label of an unknown coherent state from its clones.

Each clone is measured by heterodyne detection, whose outcomes follow the
Husimi distribution of the measured coherent state: the label plus complex
Gaussian noise with variance 1/2 per quadrature.

Trials are drawn in fixed-size blocks, each with its own counter-based
random stream derived from the seed, the kind of experiment, the number of
copies and the block index. The samples used by any given trial are
therefore a fixed function of the seed and trial index, regardless of how
many worker threads are used.
"""
__all__ = (
    "BLOCK_SIZE",
    "HeterodyneSample",
    "QUADRATURE_STD",
    "SweepPoint",
    "TrialStatistics",
    "clone_estimates",
    "control_estimates",
    "estimate_alpha",
    "estimate_control",
    "heterodyne_outcomes",
    "run_control_trials",
    "run_trials",
    "sample_control",
    "sample_heterodyne",
    "sweep",
)

import enum
import math
from concurrent.futures import ThreadPoolExecutor
from functools import partial
from typing import Any, Callable, Dict, List, Sequence, Tuple

import attr
import numpy as np
from loguru import logger

from . import exceptions as exc
from .cloning import attenuation_factor
from .states import ComplexAmplitude, LabelLike
from .util import require_positive

QUADRATURE_VARIANCE = 0.5
QUADRATURE_STD = math.sqrt(QUADRATURE_VARIANCE)
BLOCK_SIZE = 4096


class _Stream(enum.IntEnum):
    CLONING = 0
    CONTROL = 1


@attr.s(frozen=True, slots=True, auto_attribs=True)
class HeterodyneSample:
    """A single heterodyne outcome, z, obtained from one mode."""

    z: ComplexAmplitude


def heterodyne_outcomes(mu: LabelLike,
                        rng: np.random.Generator,
                        shape: Tuple[int, ...] = ()
                        ) -> np.ndarray:
    """
    Simulates an array of independent heterodyne measurements of the
    coherent state |mu>.

    Parameters
    ----------
    mu: LabelLike
        The label of the measured state.
    rng: np.random.Generator
        The source of noise. Both quadratures of each outcome are drawn
        together, so the outcomes are a fixed function of the generator state
        and the shape.
    shape: Tuple[int, ...]
        The shape of the returned array of outcomes.

    Returns
    -------
    np.ndarray
        Complex outcomes with mean mu and variance 1/2 per quadrature.
    """
    mu = ComplexAmplitude.coerce(mu).to_complex()
    noise = rng.normal(0.0, QUADRATURE_STD, size=tuple(shape) + (2,))
    return mu + noise[..., 0] + 1j * noise[..., 1]


def sample_heterodyne(mu: LabelLike,
                      rng: np.random.Generator
                      ) -> HeterodyneSample:
    """Simulates a heterodyne measurement of the coherent state |mu>."""
    z = complex(heterodyne_outcomes(mu, rng))
    return HeterodyneSample(ComplexAmplitude.from_complex(z))


def clone_estimates(outcomes: np.ndarray, n_clones: int) -> np.ndarray:
    """Forms sqrt(N) times the mean over the last axis, which holds the
    outcomes of the N clones of each trial."""
    return math.sqrt(n_clones) * np.mean(outcomes, axis=-1)


def control_estimates(outcomes: np.ndarray) -> np.ndarray:
    """Forms the plain mean over the last axis."""
    return np.mean(outcomes, axis=-1)


def _outcomes(samples: Sequence[HeterodyneSample]) -> np.ndarray:
    return np.array([s.z.to_complex() for s in samples], dtype=complex)


def estimate_alpha(samples: Sequence[HeterodyneSample],
                   n_clones: int
                   ) -> ComplexAmplitude:
    """Estimates the unknown label as sqrt(N) times the mean outcome over
    the N clones.

    Raises
    ------
    DomainError
        If no samples are given.
    DimensionMismatchError
        If the number of samples differs from the number of clones.
    """
    if not samples:
        raise exc.DomainError("cannot estimate from an empty sample list")
    if len(samples) != n_clones:
        raise exc.DimensionMismatchError("samples", n_clones, len(samples))
    estimate = clone_estimates(_outcomes(samples), n_clones)
    return ComplexAmplitude.from_complex(complex(estimate))


def sample_control(alpha: LabelLike,
                   n_copies: int,
                   rng: np.random.Generator
                   ) -> List[HeterodyneSample]:
    """Measures N independent, full-strength copies of |alpha>."""
    n_copies = require_positive("number of copies", n_copies)
    return [sample_heterodyne(alpha, rng) for _ in range(n_copies)]


def estimate_control(samples: Sequence[HeterodyneSample]) -> ComplexAmplitude:
    """Estimates the label as the plain mean of the outcomes.

    Raises
    ------
    DomainError
        If no samples are given.
    """
    if not samples:
        raise exc.DomainError("cannot estimate from an empty sample list")
    estimate = control_estimates(_outcomes(samples))
    return ComplexAmplitude.from_complex(complex(estimate))


@attr.s(frozen=True, slots=True, auto_attribs=True)
class TrialStatistics:
    """Summary statistics of the label estimates over a number of trials.

    Attributes
    ----------
    n_trials: int
        The number of trials.
    mean_est: ComplexAmplitude
        The mean of the estimates.
    std_re: float
        The sample standard deviation of the real part of the estimates.
    std_im: float
        The sample standard deviation of the imaginary part.
    """

    n_trials: int
    mean_est: ComplexAmplitude
    std_re: float
    std_im: float

    @property
    def std_err(self) -> float:
        """The standard error of the mean for a per-quadrature standard
        deviation of 1/sqrt(2)."""
        return QUADRATURE_STD / math.sqrt(self.n_trials)

    def is_unbiased(self, alpha: LabelLike, n_std_errs: float = 5.0) -> bool:
        """Determines whether the mean estimate lies within a given number of
        standard errors of alpha in both quadratures."""
        alpha = ComplexAmplitude.coerce(alpha)
        bound = n_std_errs * self.std_err
        return (abs(self.mean_est.re - alpha.re) < bound
                and abs(self.mean_est.im - alpha.im) < bound)

    def within(self, target_std: float, rel_tol: float) -> bool:
        """Determines whether both quadrature deviations lie within a
        relative tolerance of a target."""
        return all(abs(std - target_std) <= rel_tol * target_std
                   for std in (self.std_re, self.std_im))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n_trials": self.n_trials,
            "mean_est": self.mean_est.format(),
            "mean_est_re": self.mean_est.re,
            "mean_est_im": self.mean_est.im,
            "std_re": self.std_re,
            "std_im": self.std_im,
        }


def _block_rng(seed: int, stream: _Stream, n: int, block: int
               ) -> np.random.Generator:
    sequence = np.random.SeedSequence(seed, spawn_key=(int(stream), n, block))
    return np.random.Generator(np.random.Philox(sequence))


def _run(mu: complex,
         n_per_trial: int,
         estimator: Callable[[np.ndarray], np.ndarray],
         n_trials: int,
         seed: int,
         stream: _Stream,
         workers: int
         ) -> TrialStatistics:
    if n_trials < 2:
        raise exc.DomainError(f"need at least two trials: {n_trials}")
    if seed < 0:
        raise exc.DomainError(f"seed must be non-negative: {seed}")
    workers = require_positive("number of workers", workers)
    n_blocks = -(-n_trials // BLOCK_SIZE)

    def run_block(block: int) -> np.ndarray:
        size = min(BLOCK_SIZE, n_trials - block * BLOCK_SIZE)
        rng = _block_rng(seed, stream, n_per_trial, block)
        return estimator(heterodyne_outcomes(mu, rng, (size, n_per_trial)))

    logger.debug(
        f"running trials [stream: {stream.name}, n: {n_per_trial}, "
        f"trials: {n_trials}, blocks: {n_blocks}, workers: {workers}]"
    )
    with ThreadPoolExecutor(max_workers=workers) as executor:
        estimates = np.concatenate(list(executor.map(run_block,
                                                     range(n_blocks))))
    return TrialStatistics(
        n_trials=n_trials,
        mean_est=ComplexAmplitude.from_complex(estimates.mean()),
        std_re=float(np.std(estimates.real, ddof=1)),
        std_im=float(np.std(estimates.imag, ddof=1)),
    )


def run_trials(alpha: LabelLike,
               n_clones: int,
               n_trials: int,
               seed: int,
               *,
               workers: int = 1
               ) -> TrialStatistics:
    """
    Repeats the information-cloning estimation experiment: each trial
    measures N clones with label alpha / sqrt(N) and forms the estimate
    sqrt(N) times their mean outcome.

    Raises
    ------
    DomainError
        If there are fewer than two trials, no clones, or a negative seed.
    """
    alpha = ComplexAmplitude.coerce(alpha)
    c = attenuation_factor(n_clones)
    estimator = partial(clone_estimates, n_clones=n_clones)
    return _run(alpha.to_complex() * c, n_clones, estimator,
                n_trials, seed, _Stream.CLONING, workers)


def run_control_trials(alpha: LabelLike,
                       n_copies: int,
                       n_trials: int,
                       seed: int,
                       *,
                       workers: int = 1
                       ) -> TrialStatistics:
    """
    Repeats the control experiment: each trial measures N independent,
    full-strength copies of |alpha> and forms the plain mean.
    """
    alpha = ComplexAmplitude.coerce(alpha)
    n_copies = require_positive("number of copies", n_copies)
    return _run(alpha.to_complex(), n_copies, control_estimates, n_trials,
                seed, _Stream.CONTROL, workers)


@attr.s(frozen=True, slots=True, auto_attribs=True)
class SweepPoint:
    """Cloning and control statistics for a given number of copies."""

    n_clones: int
    cloning: TrialStatistics
    control: TrialStatistics

    @property
    def control_expected_std(self) -> float:
        return QUADRATURE_STD / math.sqrt(self.n_clones)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n_clones": self.n_clones,
            "cloning": self.cloning.to_dict(),
            "control": self.control.to_dict(),
            "cloning_expected_std": QUADRATURE_STD,
            "control_expected_std": self.control_expected_std,
        }


def sweep(alpha: LabelLike,
          n_values: Sequence[int],
          n_trials: int,
          seed: int,
          *,
          workers: int = 1
          ) -> List[SweepPoint]:
    """Runs the cloning and control experiments for each number of copies."""
    return [
        SweepPoint(
            n,
            run_trials(alpha, n, n_trials, seed, workers=workers),
            run_control_trials(alpha, n, n_trials, seed, workers=workers),
        )
        for n in n_values
    ]
