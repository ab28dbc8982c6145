# -*- coding: utf-8 -*-
import pytest

import math

import numpy as np

from infoclone.cloning import build_generator
from infoclone.exceptions import (
    DimensionMismatchError,
    DomainError,
    ModeIndexError,
    ResourceLimitExceeded,
)
from infoclone.fock import (
    annihilation_matrix,
    annihilation_operator,
    basis_vector,
    build_sector_unitary,
    build_unitary,
    coherent_vector,
    commutator_residuals,
    creation_matrix,
    evolve,
    fidelity,
    FockSpace,
    MAX_ORACLE_MODES,
    number_sectors,
    oracle_fidelity,
    truncation_fidelity,
    unitarity_residual,
)
from infoclone.states import overlap_sq, ProductCoherentState


def test_space_dimension_and_occupations():
    space = FockSpace(3, 2)
    assert space.dimension == 9
    assert space.occupations.shape == (9, 2)
    assert space.occupations[0].tolist() == [0, 0]
    assert space.occupations[1].tolist() == [0, 1]
    assert space.occupations[3].tolist() == [1, 0]
    assert space.total_occupations.tolist() == [0, 1, 2, 1, 2, 3, 2, 3, 4]


def test_space_guards():
    with pytest.raises(DomainError):
        FockSpace(1, 1)
    with pytest.raises(DomainError):
        FockSpace(4, 0)
    with pytest.raises(ResourceLimitExceeded):
        FockSpace(24, 5)
    with pytest.raises(ResourceLimitExceeded):
        FockSpace(4, 3, max_amplitudes=63)
    assert FockSpace(4, 3, max_amplitudes=64).dimension == 64


def test_annihilation_matrix_two_levels():
    space = FockSpace(2, 1)
    assert np.array_equal(annihilation_matrix(space, 0), [[0, 1], [0, 0]])
    assert np.array_equal(creation_matrix(space, 0), [[0, 0], [1, 0]])


def test_annihilation_matrix_lowers_occupation():
    space = FockSpace(4, 2)
    a1 = annihilation_operator(space, 1)
    out = a1 @ basis_vector(space, (2, 3)).amplitudes
    expected = math.sqrt(3) * basis_vector(space, (2, 2)).amplitudes
    assert np.allclose(out, expected, rtol=0, atol=1e-15)


def test_mode_index_errors():
    space = FockSpace(3, 2)
    with pytest.raises(ModeIndexError):
        annihilation_operator(space, 2)
    with pytest.raises(ModeIndexError):
        annihilation_operator(space, -1)


def test_dense_operator_guard():
    space = FockSpace(24, 3)
    with pytest.raises(ResourceLimitExceeded):
        annihilation_matrix(space, 0)
    small = FockSpace(4, 2)
    with pytest.raises(ResourceLimitExceeded):
        creation_matrix(small, 1, max_dense_dimension=15)
    assert creation_matrix(small, 1, max_dense_dimension=16).shape == (16, 16)


@pytest.mark.parametrize("cutoff, n_modes", [(2, 2), (5, 2), (4, 3)])
def test_commutator_residuals(cutoff, n_modes):
    residuals = commutator_residuals(FockSpace(cutoff, n_modes))
    assert residuals.canonical < 1e-12
    assert residuals.cross == 0.0
    assert residuals.cross_dagger == 0.0


def test_coherent_vector_vacuum():
    space = FockSpace(6, 2)
    vacuum = coherent_vector(space, [0, 0])
    assert np.array_equal(vacuum.amplitudes,
                          basis_vector(space, (0, 0)).amplitudes)


def test_coherent_vector_vacuum_probability():
    space = FockSpace(24, 1)
    vacuum = basis_vector(space, (0,))
    state = coherent_vector(space, [math.sqrt(0.5)])
    assert fidelity(vacuum, state) == pytest.approx(0.6065306597, abs=1e-8)


def test_coherent_vector_matches_overlap(random_labels):
    space = FockSpace(24, 2)
    for _ in range(10):
        psi = ProductCoherentState.from_array(random_labels(2, 1.0))
        phi = ProductCoherentState.from_array(random_labels(2, 1.0))
        expected = overlap_sq(psi.labels[0], phi.labels[0]) \
            * overlap_sq(psi.labels[1], phi.labels[1])
        actual = fidelity(coherent_vector(space, psi),
                          coherent_vector(space, phi))
        assert actual == pytest.approx(expected, abs=1e-8)


def test_coherent_vector_label_count():
    with pytest.raises(DimensionMismatchError):
        coherent_vector(FockSpace(4, 2), [0, 0, 0])


def test_fidelity_examples():
    space = FockSpace(3, 1)
    zero = basis_vector(space, (0,))
    one = basis_vector(space, (1,))
    assert fidelity(zero, zero) == 1.0
    assert fidelity(zero, one) == 0.0
    with pytest.raises(DimensionMismatchError):
        fidelity(zero, basis_vector(FockSpace(3, 2), (0, 0)))


def test_truncation_fidelity():
    assert truncation_fidelity(1, 2) == pytest.approx(2 * math.exp(-1),
                                                      abs=1e-12)
    assert truncation_fidelity(0.5j, 24) == pytest.approx(1.0, abs=1e-15)
    assert truncation_fidelity(3, 4) < truncation_fidelity(3, 12)


def test_number_sectors_partition_space():
    space = FockSpace(4, 3)
    sectors = number_sectors(space)
    assert sorted(sectors) == list(range(10))
    indices = np.sort(np.concatenate(list(sectors.values())))
    assert np.array_equal(indices, np.arange(space.dimension))
    assert len(sectors[0]) == 1
    assert len(sectors[1]) == 3
    totals = space.total_occupations
    for total, members in sectors.items():
        assert (totals[members] == total).all()


def test_zero_weight_unitary_is_identity():
    space = FockSpace(4, 3)
    unitary = build_unitary(space, build_generator(2, [0, 0]))
    assert np.allclose(unitary, np.eye(space.dimension), rtol=0, atol=1e-15)


@pytest.mark.parametrize("cutoff, n_clones", [(8, 1), (6, 2), (4, 3)])
def test_unitarity(cutoff, n_clones):
    space = FockSpace(cutoff, n_clones + 1)
    assert unitarity_residual(space, build_generator(n_clones)) < 1e-8


def test_evolve_matches_dense_unitary(random_labels):
    space = FockSpace(6, 3)
    gen = build_generator(2, [1.0, 0.5])
    state = coherent_vector(space, random_labels(3, 0.8))
    dense = build_unitary(space, gen) @ state.amplitudes
    evolved = evolve(space, gen, state)
    assert np.allclose(evolved.amplitudes, dense, rtol=0, atol=1e-12)


def test_single_quantum_moves_between_modes():
    space = FockSpace(4, 2)
    state = evolve(space, build_generator(1), basis_vector(space, (1, 0)))
    # a quarter turn sends the quantum in mode 0 to mode 1
    target = basis_vector(space, (0, 1))
    assert fidelity(state, target) == pytest.approx(1.0, abs=1e-12)


def test_dense_unitary_guard():
    with pytest.raises(ResourceLimitExceeded):
        build_unitary(FockSpace(24, 3), build_generator(2))


def test_oracle_mode_limit():
    assert MAX_ORACLE_MODES == 4
    with pytest.raises(ResourceLimitExceeded):
        build_sector_unitary(FockSpace(2, 5), build_generator(4))


def test_oracle_mode_mismatch():
    with pytest.raises(DimensionMismatchError):
        build_sector_unitary(FockSpace(4, 3), build_generator(1))


@pytest.mark.parametrize("cutoff, n_clones, alpha, beta", [
    (16, 1, 1.0, 0.5),
    (16, 1, 0.5 + 0.5j, -0.3j),
    (12, 2, 1.0, 0.3),
    (12, 2, 0.4 - 0.7j, 0.2 + 0.1j),
])
def test_oracle_fidelity(cutoff, n_clones, alpha, beta):
    space = FockSpace(cutoff, n_clones + 1)
    psi = ProductCoherentState.from_unknown_and_ancillas(alpha, beta, n_clones)
    comparison = oracle_fidelity(space, build_generator(n_clones), psi)
    assert comparison.fidelity > 1 - 1e-6
    assert comparison.norm_change < 1e-10
    assert comparison.unitarity_residual < 1e-8
    assert comparison.to_dict()["infidelity"] == pytest.approx(
        1 - comparison.fidelity, abs=0
    )


def test_oracle_zero_labels():
    space = FockSpace(6, 3)
    psi = ProductCoherentState.from_unknown_and_ancillas(0, 0, 2)
    comparison = oracle_fidelity(space, build_generator(2), psi)
    assert comparison.fidelity == pytest.approx(1.0, abs=1e-15)


def test_oracle_fidelity_fails_at_tiny_cutoff():
    space = FockSpace(2, 2)
    psi = ProductCoherentState.from_unknown_and_ancillas(1.5, 1.0, 1)
    comparison = oracle_fidelity(space, build_generator(1), psi)
    assert comparison.fidelity < 1 - 1e-5


def _ladder_unitaries(cutoffs):
    gen = build_generator(1)
    return [build_sector_unitary(FockSpace(d, 2), gen) for d in cutoffs]


def _fidelity_ladder(alpha, beta, unitaries):
    psi = ProductCoherentState.from_unknown_and_ancillas(alpha, beta, 1)
    return [oracle_fidelity(u.space, u.generator, psi, u).fidelity
            for u in unitaries]


def test_fidelity_improves_with_cutoff():
    fidelities = _fidelity_ladder(1.0, 0.5, _ladder_unitaries(range(4, 17)))
    for lower, higher in zip(fidelities, fidelities[1:]):
        assert higher >= lower - 1e-10


@pytest.mark.slow
def test_fidelity_improves_with_cutoff_random_labels(random_labels):
    unitaries = _ladder_unitaries(range(4, 21))
    for _ in range(20):
        alpha, beta = random_labels(2, 1.2)
        fidelities = _fidelity_ladder(alpha, beta, unitaries)
        for lower, higher in zip(fidelities, fidelities[1:]):
            assert higher >= lower - 1e-10


def test_oracle_fidelity_reuses_unitary(random_labels):
    space = FockSpace(10, 3)
    gen = build_generator(2)
    unitary = build_sector_unitary(space, gen)
    for _ in range(3):
        alpha, beta = random_labels(2, 0.8)
        psi = ProductCoherentState.from_unknown_and_ancillas(alpha, beta, 2)
        shared = oracle_fidelity(space, gen, psi, unitary)
        fresh = oracle_fidelity(space, gen, psi)
        assert shared.fidelity == fresh.fidelity
        assert shared.predicted == fresh.predicted


def test_oracle_fidelity_rejects_foreign_unitary():
    space = FockSpace(6, 2)
    gen = build_generator(1)
    psi = ProductCoherentState.from_unknown_and_ancillas(0.5, 0.2, 1)
    with pytest.raises(DimensionMismatchError):
        oracle_fidelity(space, gen, psi,
                        build_sector_unitary(FockSpace(8, 2), gen))
    with pytest.raises(DomainError):
        oracle_fidelity(space, gen, psi,
                        build_sector_unitary(space, build_generator(1, [0.5])))


@pytest.mark.slow
@pytest.mark.parametrize("n_clones", [1, 2])
def test_oracle_fidelity_at_acceptance_cutoffs(n_clones, random_labels):
    gen = build_generator(n_clones)
    cutoffs = (16, 20, 24)
    unitaries = {
        d: build_sector_unitary(FockSpace(d, n_clones + 1), gen)
        for d in cutoffs
    }
    for _ in range(20):
        alpha, beta = random_labels(2, 0.8)
        psi = ProductCoherentState.from_unknown_and_ancillas(alpha, beta,
                                                             n_clones)
        fidelities = [
            oracle_fidelity(unitaries[d].space, gen, psi, unitaries[d]).fidelity
            for d in cutoffs
        ]
        assert min(fidelities) >= 1 - 1e-5
        for lower, higher in zip(fidelities, fidelities[1:]):
            assert higher >= lower - 1e-10
