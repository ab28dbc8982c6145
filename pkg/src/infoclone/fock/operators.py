# -*- coding: utf-8 -*-
"""
This module builds the bosonic ladder operators of a truncated Fock space
and the exponent of the cloning unitary from them.

Operators are assembled as sparse tensor products and converted to dense
matrices on request, subject to a dimension guard.
"""
__all__ = (
    "CommutatorResiduals",
    "DEFAULT_MAX_DENSE_DIMENSION",
    "annihilation_matrix",
    "annihilation_operator",
    "clone_exponent",
    "commutator_residuals",
    "creation_matrix",
)

import functools
import itertools
from typing import Dict

import attr
import numpy as np
import scipy.sparse

from .space import FockSpace
from .. import exceptions as exc
from ..cloning import CloneGenerator

DEFAULT_MAX_DENSE_DIMENSION = 2 ** 12


def _lowering(cutoff: int) -> scipy.sparse.csr_matrix:
    # <n-1|a|n> = sqrt(n)
    return scipy.sparse.diags(np.sqrt(np.arange(1, cutoff)), offsets=1,
                              shape=(cutoff, cutoff), format="csr")


def annihilation_operator(space: FockSpace,
                          mode: int
                          ) -> scipy.sparse.csr_matrix:
    """Returns the sparse lowering operator of a given mode, tensored with
    the identity on every other mode.

    Raises
    ------
    ModeIndexError
        If the mode does not exist.
    """
    space.check_mode(mode)
    identity = scipy.sparse.identity(space.cutoff, format="csr")
    factors = [identity] * space.n_modes
    factors[mode] = _lowering(space.cutoff)
    operator = functools.reduce(
        lambda x, y: scipy.sparse.kron(x, y, format="csr"), factors
    )
    return operator.astype(complex)


def _densify(space: FockSpace,
             operator: scipy.sparse.spmatrix,
             max_dense_dimension: int
             ) -> np.ndarray:
    if space.dimension > max_dense_dimension:
        raise exc.ResourceLimitExceeded(
            "dense operator", space.dimension, max_dense_dimension
        )
    return operator.toarray()


def annihilation_matrix(space: FockSpace,
                        mode: int,
                        *,
                        max_dense_dimension: int = DEFAULT_MAX_DENSE_DIMENSION
                        ) -> np.ndarray:
    """Returns the dense lowering operator of a given mode.

    Raises
    ------
    ModeIndexError
        If the mode does not exist.
    ResourceLimitExceeded
        If D^M exceeds the dense dimension guard.
    """
    return _densify(space, annihilation_operator(space, mode),
                    max_dense_dimension)


def creation_matrix(space: FockSpace,
                    mode: int,
                    *,
                    max_dense_dimension: int = DEFAULT_MAX_DENSE_DIMENSION
                    ) -> np.ndarray:
    """Returns the dense raising operator of a given mode."""
    operator = annihilation_operator(space, mode).conj().T
    return _densify(space, operator, max_dense_dimension)


def _max_entry(operator: scipy.sparse.spmatrix) -> float:
    if operator.nnz == 0:
        return 0.0
    return float(abs(operator).max())


@attr.s(frozen=True, slots=True, auto_attribs=True)
class CommutatorResiduals:
    """Largest deviations of the truncated ladder operators from the
    canonical commutation relations.

    Attributes
    ----------
    canonical: float
        max |[a_k, a_k^dag] - 1| over basis states whose occupation of mode k
        lies below the cutoff edge.
    cross: float
        max |[a_j, a_k]| over distinct modes.
    cross_dagger: float
        max |[a_j^dag, a_k]| over distinct modes.
    """

    canonical: float
    cross: float
    cross_dagger: float

    def to_dict(self) -> Dict[str, float]:
        return {
            "canonical": self.canonical,
            "cross": self.cross,
            "cross_dagger": self.cross_dagger,
        }


def commutator_residuals(space: FockSpace) -> CommutatorResiduals:
    """Measures how far the truncated ladder operators of a space deviate
    from the canonical commutation relations."""
    lowering = [annihilation_operator(space, k) for k in range(space.n_modes)]
    raising = [a.conj().T.tocsr() for a in lowering]
    identity = scipy.sparse.identity(space.dimension, format="csr")
    occupations = space.occupations

    canonical = 0.0
    for k, (a, a_dag) in enumerate(zip(lowering, raising)):
        below_edge = np.flatnonzero(occupations[:, k] <= space.cutoff - 2)
        deviation = (a @ a_dag - a_dag @ a - identity).tocsr()
        restricted = deviation[below_edge][:, below_edge]
        canonical = max(canonical, _max_entry(restricted))

    cross = 0.0
    cross_dagger = 0.0
    for j, k in itertools.permutations(range(space.n_modes), 2):
        a_j, a_k = lowering[j], lowering[k]
        cross = max(cross, _max_entry(a_j @ a_k - a_k @ a_j))
        a_j_dag = raising[j]
        cross_dagger = max(cross_dagger, _max_entry(a_j_dag @ a_k - a_k @ a_j_dag))

    return CommutatorResiduals(canonical, cross, cross_dagger)


def clone_exponent(space: FockSpace,
                   gen: CloneGenerator
                   ) -> scipy.sparse.csr_matrix:
    """
    Builds the anti-Hermitian exponent of the cloning unitary,
    -(pi / (2 sqrt(N))) (a^dag sum_j r_j b_j - a sum_j r_j b_j^dag),
    written as sum_{k,l} G_kl a_k^dag a_l for the generator matrix G.

    Raises
    ------
    DimensionMismatchError
        If the space does not have N + 1 modes.
    """
    if space.n_modes != gen.dimension:
        raise exc.DimensionMismatchError(
            "fock modes", gen.dimension, space.n_modes
        )
    lowering = [annihilation_operator(space, k) for k in range(space.n_modes)]
    exponent = scipy.sparse.csr_matrix((space.dimension, space.dimension),
                                       dtype=complex)
    rows, cols = np.nonzero(gen.matrix)
    for k, l in zip(rows, cols):
        exponent = exponent + gen.matrix[k, l] * (
            lowering[k].conj().T @ lowering[l]
        )
    return exponent.tocsr()
