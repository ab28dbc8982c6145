# -*- coding: utf-8 -*-
"""
This module implements the information-cloning transformation in label
space.

The cloning unitary is a passive, number-conserving Gaussian unitary. It
therefore maps a product of coherent states to another product of coherent
states, and its action on the vector of labels is the real orthogonal
matrix obtained by exponentiating a real antisymmetric generator.
"""
__all__ = (
    "CloneGenerator",
    "LabelRotation",
    "OverlapComparison",
    "amplification_factor",
    "apply_clone_map",
    "attenuation_factor",
    "build_generator",
    "clone",
    "exponentiate",
    "literal_overlap_after",
    "predicted_clone_labels",
    "verify_overlap_preservation",
    "would_enable_cloning",
)

import math
import typing as t
from typing import Any, Dict, Optional, Sequence, Tuple

import attr
import numpy as np
import scipy.linalg
from loguru import logger

from . import exceptions as exc
from .states import (
    ComplexAmplitude,
    LabelLike,
    ProductCoherentState,
    product_overlap_sq,
)
from .util import require_finite, require_positive, tuple_from_iterable

#: maximum permitted per-entry deviation of R^T R from the identity
ORTHOGONALITY_TOLERANCE = 1e-12

#: maximum permitted deviation of det(R) from +1
DETERMINANT_TOLERANCE = 1e-10


def _coupling(n_clones: int) -> float:
    return math.pi / (2.0 * math.sqrt(n_clones))


@attr.s(frozen=True, slots=True, auto_attribs=True)
class CloneGenerator:
    """The real antisymmetric generator of the cloning map over N + 1 modes.

    Entry [0][j] is -(pi / (2 sqrt(N))) r_j and entry [j][0] is its
    negation; every other entry is zero.

    Attributes
    ----------
    n_clones: int
        The number of ancilla modes, N.
    weights: Tuple[float, ...]
        The coupling weight, r_j, of each ancilla.
    matrix: np.ndarray
        The (N + 1) x (N + 1) generator.
    """

    n_clones: int
    weights: Tuple[float, ...] = attr.ib(converter=tuple_from_iterable)
    matrix: np.ndarray = attr.ib(eq=False, repr=False)

    @property
    def dimension(self) -> int:
        return self.n_clones + 1

    @property
    def coupling(self) -> float:
        """The coefficient pi / (2 sqrt(N))."""
        return _coupling(self.n_clones)

    @property
    def collective_angle(self) -> float:
        """
        The rotation angle of the two-mode block that couples the unknown
        mode to the weighted collective ancilla mode. This is pi / 2 for
        unit weights.
        """
        return self.coupling * math.sqrt(math.fsum(r * r for r in self.weights))

    def to_dict(self) -> Dict[str, Any]:
        return {"n_clones": self.n_clones, "weights": list(self.weights)}


def build_generator(n_clones: int,
                    weights: Optional[Sequence[float]] = None
                    ) -> CloneGenerator:
    """Builds the generator of the cloning map for a given number of clones.

    Parameters
    ----------
    n_clones: int
        The number of clones, N, which must be at least one.
    weights: Sequence[float], optional
        The coupling weight of each ancilla. Defaults to one for every
        ancilla.

    Raises
    ------
    DomainError
        If the number of clones is less than one.
    DimensionMismatchError
        If the number of weights differs from the number of clones.
    NonFiniteValueError
        If a weight is not finite.
    """
    n_clones = require_positive("number of clones", n_clones)
    if weights is None:
        weights = (1.0,) * n_clones
    if len(weights) != n_clones:
        raise exc.DimensionMismatchError("weights", n_clones, len(weights))
    weights = tuple(require_finite("weight", r) for r in weights)

    coupling = _coupling(n_clones)
    matrix = np.zeros((n_clones + 1, n_clones + 1), dtype=float)
    for j, r in enumerate(weights, start=1):
        matrix[j, 0] = coupling * r
        matrix[0, j] = -matrix[j, 0]
    matrix.setflags(write=False)
    logger.debug(f"built generator [n_clones: {n_clones}]")
    return CloneGenerator(n_clones, weights, matrix)


@attr.s(frozen=True, slots=True, auto_attribs=True)
class LabelRotation:
    """The real orthogonal matrix by which the cloning map acts on labels.

    Attributes
    ----------
    matrix: np.ndarray
        The orthogonal (N + 1) x (N + 1) rotation.
    generator: CloneGenerator, optional
        The generator from which this rotation was obtained, if any.
    scale: float
        The factor, at least one, by which the orthogonality and determinant
        tolerances are widened; rounding in the exponential grows with the
        norm of the generator.

    Raises
    ------
    DomainError
        If the matrix is not a proper rotation to within tolerance.
    """

    matrix: np.ndarray = attr.ib(eq=False, repr=False)
    generator: Optional[CloneGenerator] = attr.ib(default=None, repr=False)
    scale: float = attr.ib(default=1.0, repr=False)

    def __attrs_post_init__(self) -> None:
        residual = self.orthogonality_residual
        if residual >= ORTHOGONALITY_TOLERANCE * self.scale:
            raise exc.DomainError(
                f"label rotation is not orthogonal [residual: {residual}]"
            )
        determinant = float(np.linalg.det(self.matrix))
        if abs(determinant - 1.0) >= DETERMINANT_TOLERANCE * self.scale:
            raise exc.DomainError(
                f"label rotation is not proper [det: {determinant}]"
            )

    @property
    def dimension(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def orthogonality_residual(self) -> float:
        """The largest entry of |R^T R - I|."""
        gram = self.matrix.T @ self.matrix
        return float(np.max(np.abs(gram - np.eye(self.dimension))))

    def inverse(self) -> "LabelRotation":
        """Returns the inverse rotation, i.e., the label-space image of the
        adjoint of the cloning unitary."""
        matrix = np.ascontiguousarray(self.matrix.T)
        matrix.setflags(write=False)
        return LabelRotation(matrix, scale=self.scale)

    def closed_form(self) -> np.ndarray:
        """
        Computes this rotation in closed form from its generator by rotating
        the unknown mode and the weighted collective ancilla mode through the
        collective angle and leaving every orthogonal mode untouched.

        Raises
        ------
        DomainError
            If this rotation was not built from a generator.
        """
        if self.generator is None:
            raise exc.DomainError("rotation has no associated generator")
        gen = self.generator
        identity = np.eye(gen.dimension)
        norm = math.sqrt(math.fsum(r * r for r in gen.weights))
        if norm == 0.0:
            return identity
        u = np.zeros(gen.dimension)
        u[1:] = np.asarray(gen.weights) / norm
        e0 = identity[0]
        k = np.outer(u, e0) - np.outer(e0, u)
        theta = gen.collective_angle
        return (identity
                + math.sin(theta) * k
                - (1.0 - math.cos(theta)) * (np.outer(u, u) + np.outer(e0, e0)))

    def apply(self, psi: ProductCoherentState) -> ProductCoherentState:
        return apply_clone_map(psi, self)


def exponentiate(gen: CloneGenerator) -> LabelRotation:
    """Exponentiates a generator into the corresponding label rotation."""
    matrix = scipy.linalg.expm(gen.matrix)
    matrix.setflags(write=False)
    # the spectral norm of the generator is its collective angle
    return LabelRotation(matrix, gen, max(1.0, abs(gen.collective_angle)))


def apply_clone_map(psi: ProductCoherentState,
                    rotation: LabelRotation
                    ) -> ProductCoherentState:
    """Computes the labels of the product state obtained by applying the
    cloning map to a given product state.

    Raises
    ------
    DimensionMismatchError
        If the number of modes differs from the dimension of the rotation.
    """
    if psi.n_modes != rotation.dimension:
        raise exc.DimensionMismatchError(
            "product state", rotation.dimension, psi.n_modes
        )
    return ProductCoherentState.from_array(rotation.matrix @ psi.to_array())


@attr.s(frozen=True, slots=True, auto_attribs=True)
class OverlapComparison:
    """Squared overlaps of two states before and after the cloning map."""

    before: float
    after: float
    abs_diff: float

    def to_dict(self) -> Dict[str, float]:
        return {
            "before": self.before,
            "after": self.after,
            "abs_diff": self.abs_diff,
        }


def verify_overlap_preservation(psi: ProductCoherentState,
                                psi_prime: ProductCoherentState,
                                rotation: LabelRotation
                                ) -> OverlapComparison:
    """Compares the squared overlap of two states with that of their images
    under the cloning map.

    Raises
    ------
    DimensionMismatchError
        If either state does not match the dimension of the rotation.
    """
    before = product_overlap_sq(psi, psi_prime)
    after = product_overlap_sq(apply_clone_map(psi, rotation),
                               apply_clone_map(psi_prime, rotation))
    return OverlapComparison(before, after, abs(before - after))


def attenuation_factor(n_clones: int) -> float:
    """Returns the known scale, 1 / sqrt(N), relating each clone's label to
    the label of the unknown state."""
    n_clones = require_positive("number of clones", n_clones)
    return 1.0 / math.sqrt(n_clones)


def amplification_factor(n_clones: int) -> float:
    """Returns the scale, sqrt(N), by which the label of N merged known
    ancillas is amplified into mode 0."""
    n_clones = require_positive("number of clones", n_clones)
    return math.sqrt(n_clones)


def clone(alpha: LabelLike,
          beta: LabelLike,
          n_clones: int,
          weights: Optional[Sequence[float]] = None
          ) -> ProductCoherentState:
    """Applies the cloning map to |alpha> |beta>^N."""
    rotation = exponentiate(build_generator(n_clones, weights))
    psi = ProductCoherentState.from_unknown_and_ancillas(alpha, beta, n_clones)
    return apply_clone_map(psi, rotation)


def predicted_clone_labels(alpha: LabelLike,
                           beta: LabelLike,
                           n_clones: int
                           ) -> ProductCoherentState:
    """Returns the closed-form output labels for unit weights:
    (-sqrt(N) beta, alpha / sqrt(N), ..., alpha / sqrt(N))."""
    alpha = ComplexAmplitude.coerce(alpha)
    beta = ComplexAmplitude.coerce(beta)
    c = attenuation_factor(n_clones)
    head = beta.scaled(-amplification_factor(n_clones))
    return ProductCoherentState((head,) + (alpha.scaled(c),) * n_clones)


def _unknown_and_ancilla(psi: ProductCoherentState
                         ) -> t.Tuple[ComplexAmplitude, ComplexAmplitude]:
    if psi.n_ancillas < 1 or len(set(psi.ancillas)) != 1:
        raise exc.DomainError(
            "expected |alpha> followed by N >= 1 identical ancillas"
        )
    return psi.unknown, psi.ancillas[0]


def literal_overlap_after(psi: ProductCoherentState,
                          psi_prime: ProductCoherentState
                          ) -> float:
    """
    Evaluates the squared overlap after cloning under the alternative reading
    in which mode 0 ends up with label -N beta rather than -sqrt(N) beta.

    Both states must have the form |alpha> |beta>^N. The result,
    exp(-N^2 |beta - beta'|^2) exp(-|alpha - alpha'|^2), disagrees with the
    overlap before cloning whenever N > 1 and beta != beta'.

    Raises
    ------
    DomainError
        If either state does not have the form |alpha> |beta>^N.
    DimensionMismatchError
        If the states have a different number of modes.
    """
    if psi.n_modes != psi_prime.n_modes:
        raise exc.DimensionMismatchError(
            "product state", psi.n_modes, psi_prime.n_modes
        )
    n_clones = psi.n_ancillas
    alpha, beta = _unknown_and_ancilla(psi)
    alpha_prime, beta_prime = _unknown_and_ancilla(psi_prime)
    c = attenuation_factor(n_clones)

    def literal(a: ComplexAmplitude,
                b: ComplexAmplitude
                ) -> ProductCoherentState:
        return ProductCoherentState(
            (b.scaled(-n_clones),) + (a.scaled(c),) * n_clones
        )

    return product_overlap_sq(literal(alpha, beta),
                              literal(alpha_prime, beta_prime))


def would_enable_cloning(scale_modulus: float, n_clones: int) -> bool:
    """
    Determines whether a hypothetical universal amplifier that scales
    unknown labels by a given modulus would restore each of the N clones to
    the modulus of the original unknown label, thereby producing N exact
    copies of an unknown state.
    """
    scale_modulus = require_finite("scale modulus", scale_modulus)
    restored = scale_modulus * attenuation_factor(n_clones)
    return math.isclose(restored, 1.0, rel_tol=1e-12)
