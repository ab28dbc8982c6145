# -*- coding: utf-8 -*-
__all__ = (
    "DEFAULT_CUTOFF",
    "DEFAULT_MAX_AMPLITUDES",
    "FockSpace",
    "StateVector",
    "basis_vector",
    "coherent_vector",
    "fidelity",
    "truncation_fidelity",
)

import functools
import typing as t
from typing import Any, Sequence, Union

import attr
import numpy as np
import scipy.stats
from loguru import logger

from .. import exceptions as exc
from ..states import ComplexAmplitude, LabelLike, ProductCoherentState

DEFAULT_CUTOFF = 24
DEFAULT_MAX_AMPLITUDES = 2 ** 20
NORM_TOLERANCE = 1e-10


@attr.s(frozen=True, slots=True, auto_attribs=True)
class FockSpace:
    """A truncated multi-mode Fock space.

    Basis states are ordered lexicographically by occupation, with mode 0
    varying slowest.

    Attributes
    ----------
    cutoff: int
        The number of Fock levels, D, kept per mode (occupations 0..D-1).
    n_modes: int
        The number of modes, M.
    max_amplitudes: int
        The largest permitted dimension, D^M.

    Raises
    ------
    DomainError
        If the cutoff is less than two or there are no modes.
    ResourceLimitExceeded
        If D^M exceeds the permitted number of amplitudes.
    """

    cutoff: int
    n_modes: int
    max_amplitudes: int = attr.ib(default=DEFAULT_MAX_AMPLITUDES, repr=False)

    def __attrs_post_init__(self) -> None:
        if self.cutoff < 2:
            raise exc.DomainError(f"cutoff must be at least 2: {self.cutoff}")
        if self.n_modes < 1:
            raise exc.DomainError(f"need at least one mode: {self.n_modes}")
        if self.dimension > self.max_amplitudes:
            raise exc.ResourceLimitExceeded(
                f"fock space [cutoff: {self.cutoff}, modes: {self.n_modes}]",
                self.dimension,
                self.max_amplitudes,
            )

    @property
    def dimension(self) -> int:
        return self.cutoff ** self.n_modes

    @property
    def occupations(self) -> np.ndarray:
        """A (D^M, M) array giving the occupation of each mode in each
        basis state."""
        grid = np.indices((self.cutoff,) * self.n_modes)
        return grid.reshape(self.n_modes, -1).T

    @property
    def total_occupations(self) -> np.ndarray:
        """The total occupation number of each basis state."""
        return self.occupations.sum(axis=1)

    def check_mode(self, mode: int) -> int:
        """Raises a :class:`ModeIndexError` if a mode does not exist."""
        if not 0 <= mode < self.n_modes:
            raise exc.ModeIndexError(mode, self.n_modes)
        return mode


def _require_normalised(instance: Any,
                        attribute: Any,
                        value: np.ndarray
                        ) -> None:
    norm = float(np.linalg.norm(value))
    if abs(norm - 1.0) >= NORM_TOLERANCE:
        raise exc.DomainError(f"state vector is not normalised [norm: {norm}]")


@attr.s(frozen=True, slots=True, auto_attribs=True)
class StateVector:
    """A normalised pure state in a truncated Fock space.

    Attributes
    ----------
    space: FockSpace
        The space to which this state belongs.
    amplitudes: np.ndarray
        The D^M complex amplitudes of the state in the occupation basis.
    """

    space: FockSpace
    amplitudes: np.ndarray = attr.ib(
        eq=False, repr=False, validator=_require_normalised
    )

    def __attrs_post_init__(self) -> None:
        if self.amplitudes.shape != (self.space.dimension,):
            raise exc.DimensionMismatchError(
                "state vector", self.space.dimension, self.amplitudes.size
            )

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def _single_mode(mu: ComplexAmplitude, cutoff: int) -> np.ndarray:
    value = mu.to_complex()
    steps = np.empty(cutoff, dtype=complex)
    steps[0] = np.exp(-0.5 * abs(value) ** 2)
    steps[1:] = value / np.sqrt(np.arange(1, cutoff))
    ket = np.cumprod(steps)
    return ket / np.linalg.norm(ket)


def coherent_vector(space: FockSpace,
                    labels: Union[ProductCoherentState, Sequence[LabelLike]]
                    ) -> StateVector:
    """Builds the truncated product coherent state with given labels.

    Each single-mode factor is expanded as exp(-|mu|^2/2) sum mu^n/sqrt(n!)
    |n> up to the cutoff and renormalised.

    Raises
    ------
    DimensionMismatchError
        If the number of labels differs from the number of modes.
    """
    if not isinstance(labels, ProductCoherentState):
        labels = ProductCoherentState(labels)
    if labels.n_modes != space.n_modes:
        raise exc.DimensionMismatchError(
            "coherent labels", space.n_modes, labels.n_modes
        )
    for mode, mu in enumerate(labels.labels):
        if abs(mu) ** 2 > space.cutoff / 4:
            logger.warning(
                f"label {mu} on mode {mode} is large for cutoff "
                f"{space.cutoff}: truncation error may be significant"
            )
    factors = [_single_mode(mu, space.cutoff) for mu in labels.labels]
    amplitudes = functools.reduce(np.kron, factors)
    return StateVector(space, amplitudes)


def truncation_fidelity(mu: LabelLike, cutoff: int) -> float:
    """
    Computes the fidelity between the ideal single-mode coherent state and
    its renormalised truncation to a given cutoff, which equals the Poisson
    probability of observing fewer than cutoff quanta.
    """
    mu = ComplexAmplitude.coerce(mu)
    return float(scipy.stats.poisson.cdf(cutoff - 1, abs(mu) ** 2))


def fidelity(v: StateVector, w: StateVector) -> float:
    """Computes |<v|w>|^2.

    Raises
    ------
    DimensionMismatchError
        If the states have different dimensions.
    """
    if v.amplitudes.size != w.amplitudes.size:
        raise exc.DimensionMismatchError(
            "state vector", v.amplitudes.size, w.amplitudes.size
        )
    overlap = np.vdot(v.amplitudes, w.amplitudes)
    value = float(abs(overlap) ** 2)
    return min(max(value, 0.0), 1.0)


def basis_vector(space: FockSpace, occupation: t.Sequence[int]) -> StateVector:
    """Returns the basis state with a given occupation of each mode."""
    if len(occupation) != space.n_modes:
        raise exc.DimensionMismatchError(
            "occupation", space.n_modes, len(occupation)
        )
    index = int(np.ravel_multi_index(tuple(occupation),
                                     (space.cutoff,) * space.n_modes))
    amplitudes = np.zeros(space.dimension, dtype=complex)
    amplitudes[index] = 1.0
    return StateVector(space, amplitudes)
