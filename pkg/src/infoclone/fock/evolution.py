# -*- coding: utf-8 -*-
"""
This module exponentiates the cloning exponent in a truncated Fock space
and applies the resulting unitary to explicit state vectors.

The exponent only moves quanta between modes, so it is block diagonal with
respect to the total occupation number, even after truncation. Each block
is exponentiated as a dense matrix; the full D^M x D^M unitary is only
assembled when explicitly requested.
"""
__all__ = (
    "MAX_ORACLE_MODES",
    "OracleComparison",
    "SectorUnitary",
    "build_sector_unitary",
    "build_unitary",
    "evolve",
    "number_sectors",
    "oracle_fidelity",
    "unitarity_residual",
)

from typing import Any, Dict, List, Optional, Tuple

import attr
import numpy as np
import scipy.linalg
from loguru import logger

from .operators import clone_exponent, DEFAULT_MAX_DENSE_DIMENSION
from .space import coherent_vector, fidelity, FockSpace, StateVector
from .. import exceptions as exc
from ..cloning import apply_clone_map, CloneGenerator, exponentiate
from ..states import ProductCoherentState

#: the oracle is restricted to at most three clones
MAX_ORACLE_MODES = 4

Block = Tuple[np.ndarray, np.ndarray]


def number_sectors(space: FockSpace) -> Dict[int, np.ndarray]:
    """Groups the basis indices of a space by total occupation number."""
    totals = space.total_occupations
    return {
        int(total): np.flatnonzero(totals == total)
        for total in np.unique(totals)
    }


@attr.s(frozen=True, slots=True, auto_attribs=True)
class SectorUnitary:
    """The cloning unitary of a truncated Fock space, stored as one dense
    block per total-occupation sector.

    Attributes
    ----------
    space: FockSpace
        The space on which the unitary acts.
    generator: CloneGenerator
        The generator from which the unitary was built.
    blocks: List[Tuple[np.ndarray, np.ndarray]]
        Pairs of basis indices and the dense unitary block acting on them.
    """

    space: FockSpace
    generator: CloneGenerator
    blocks: List[Block] = attr.ib(eq=False, repr=False)

    @property
    def unitarity_residual(self) -> float:
        """The largest entry of |U^dag U - I|."""
        residual = 0.0
        for _, block in self.blocks:
            gram = block.conj().T @ block
            deviation = np.max(np.abs(gram - np.eye(block.shape[0])))
            residual = max(residual, float(deviation))
        return residual

    def apply(self, state: StateVector) -> StateVector:
        """Applies this unitary to a given state.

        Raises
        ------
        DimensionMismatchError
            If the state does not belong to a space of the same dimension.
        """
        if state.space.dimension != self.space.dimension:
            raise exc.DimensionMismatchError(
                "state vector", self.space.dimension, state.space.dimension
            )
        output = np.zeros(self.space.dimension, dtype=complex)
        for indices, block in self.blocks:
            output[indices] = block @ state.amplitudes[indices]
        return StateVector(self.space, output)

    def to_dense(self,
                 *,
                 max_dense_dimension: int = DEFAULT_MAX_DENSE_DIMENSION
                 ) -> np.ndarray:
        """Assembles the full unitary as a dense matrix.

        Raises
        ------
        ResourceLimitExceeded
            If D^M exceeds the dense dimension guard.
        """
        if self.space.dimension > max_dense_dimension:
            raise exc.ResourceLimitExceeded(
                "dense unitary", self.space.dimension, max_dense_dimension
            )
        unitary = np.zeros((self.space.dimension,) * 2, dtype=complex)
        for indices, block in self.blocks:
            unitary[np.ix_(indices, indices)] = block
        return unitary


def _check_modes(space: FockSpace) -> None:
    if space.n_modes > MAX_ORACLE_MODES:
        raise exc.ResourceLimitExceeded(
            "oracle mode count", space.n_modes, MAX_ORACLE_MODES
        )


def build_sector_unitary(space: FockSpace,
                         gen: CloneGenerator
                         ) -> SectorUnitary:
    """Exponentiates the cloning exponent sector by sector.

    Raises
    ------
    DimensionMismatchError
        If the space does not have N + 1 modes.
    ResourceLimitExceeded
        If the space has more modes than the oracle supports.
    """
    _check_modes(space)
    exponent = clone_exponent(space, gen)
    blocks: List[Block] = []
    sectors = number_sectors(space)
    logger.debug(
        f"exponentiating clone unitary [cutoff: {space.cutoff}, "
        f"modes: {space.n_modes}, sectors: {len(sectors)}]"
    )
    for indices in sectors.values():
        dense = exponent[indices][:, indices].toarray()
        blocks.append((indices, scipy.linalg.expm(dense)))
    return SectorUnitary(space, gen, blocks)


def build_unitary(space: FockSpace,
                  gen: CloneGenerator,
                  *,
                  max_dense_dimension: int = DEFAULT_MAX_DENSE_DIMENSION
                  ) -> np.ndarray:
    """Builds the cloning unitary of a truncated Fock space as a dense
    matrix.

    Raises
    ------
    DimensionMismatchError
        If the space does not have N + 1 modes.
    ResourceLimitExceeded
        If the space has too many modes, or D^M exceeds the dense
        dimension guard.
    """
    if space.dimension > max_dense_dimension:
        raise exc.ResourceLimitExceeded(
            "dense unitary", space.dimension, max_dense_dimension
        )
    unitary = build_sector_unitary(space, gen)
    return unitary.to_dense(max_dense_dimension=max_dense_dimension)


def evolve(space: FockSpace,
           gen: CloneGenerator,
           state: StateVector
           ) -> StateVector:
    """Applies the cloning unitary to an explicit state vector."""
    return build_sector_unitary(space, gen).apply(state)


def unitarity_residual(space: FockSpace, gen: CloneGenerator) -> float:
    """Returns the largest entry of |U^dag U - I| for the cloning unitary."""
    return build_sector_unitary(space, gen).unitarity_residual


@attr.s(frozen=True, slots=True, auto_attribs=True)
class OracleComparison:
    """The outcome of comparing the Fock-space unitary against the
    label-space prediction.

    Attributes
    ----------
    predicted: ProductCoherentState
        The labels predicted by the label-space engine.
    fidelity: float
        The fidelity between the evolved state and the predicted state.
    norm_change: float
        The change in norm caused by applying the unitary.
    unitarity_residual: float
        The largest entry of |U^dag U - I|.
    """

    predicted: ProductCoherentState
    fidelity: float
    norm_change: float
    unitarity_residual: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "predicted": self.predicted.to_dict()["labels"],
            "fidelity": self.fidelity,
            "infidelity": 1.0 - self.fidelity,
            "norm_change": self.norm_change,
            "unitarity_residual": self.unitarity_residual,
        }


def oracle_fidelity(space: FockSpace,
                    gen: CloneGenerator,
                    psi: ProductCoherentState,
                    unitary: Optional[SectorUnitary] = None
                    ) -> OracleComparison:
    """
    Applies the Fock-space cloning unitary to the truncated product coherent
    state with labels psi and measures its fidelity to the truncated product
    coherent state predicted by the label-space engine.

    Parameters
    ----------
    unitary: SectorUnitary, optional
        A unitary previously built for the same space and generator, which
        is reused instead of exponentiating every sector again. Building the
        unitary dominates the cost of a comparison, so callers that compare
        many states at one cutoff should build it once.

    Raises
    ------
    DimensionMismatchError
        If a given unitary was built for another space.
    DomainError
        If a given unitary was built from another generator.
    """
    if unitary is None:
        unitary = build_sector_unitary(space, gen)
    else:
        if (unitary.space.cutoff, unitary.space.n_modes) \
                != (space.cutoff, space.n_modes):
            raise exc.DimensionMismatchError(
                "unitary dimension", space.dimension, unitary.space.dimension
            )
        if unitary.generator != gen:
            raise exc.DomainError("unitary was built from another generator")
    predicted = apply_clone_map(psi, exponentiate(gen))
    initial = coherent_vector(space, psi)
    evolved = unitary.apply(initial)
    target = coherent_vector(space, predicted)
    return OracleComparison(
        predicted=predicted,
        fidelity=fidelity(evolved, target),
        norm_change=abs(evolved.norm - initial.norm),
        unitarity_residual=unitary.unitarity_residual,
    )
