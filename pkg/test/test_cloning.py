# -*- coding: utf-8 -*-
import pytest

import math

import numpy as np
from hypothesis import given, settings, strategies as st

from infoclone.cloning import (
    amplification_factor,
    apply_clone_map,
    attenuation_factor,
    build_generator,
    clone,
    exponentiate,
    LabelRotation,
    literal_overlap_after,
    predicted_clone_labels,
    verify_overlap_preservation,
    would_enable_cloning,
)
from infoclone.exceptions import (
    DimensionMismatchError,
    DomainError,
    NonFiniteValueError,
)
from infoclone.states import ProductCoherentState, total_excitation

labels = st.complex_numbers(
    max_magnitude=2.0, allow_nan=False, allow_infinity=False
)


def test_build_generator_single_clone():
    gen = build_generator(1)
    expected = np.array([[0.0, -math.pi / 2], [math.pi / 2, 0.0]])
    assert gen.weights == (1.0,)
    assert np.array_equal(gen.matrix, expected)


def test_build_generator_four_clones():
    gen = build_generator(4, [1, 1, 1, 1])
    assert np.allclose(np.abs(gen.matrix[0, 1:]), math.pi / 4, atol=0)
    assert np.allclose(np.abs(gen.matrix[1:, 0]), math.pi / 4, atol=0)
    assert not gen.matrix[1:, 1:].any()
    assert gen.collective_angle == pytest.approx(math.pi / 2, abs=1e-15)


def test_build_generator_zero_weight():
    gen = build_generator(2, [1, 0])
    nonzero = list(zip(*np.nonzero(gen.matrix)))
    assert sorted(nonzero) == [(0, 1), (1, 0)]
    assert abs(gen.matrix[0, 1]) == pytest.approx(
        math.pi / (2 * math.sqrt(2)), abs=1e-15
    )


@pytest.mark.parametrize("n", [1, 2, 3, 7, 64])
def test_generator_is_antisymmetric(n):
    gen = build_generator(n, np.linspace(-1.5, 2.0, n))
    assert np.array_equal(gen.matrix, -gen.matrix.T)


def test_build_generator_errors():
    with pytest.raises(DomainError):
        build_generator(0)
    with pytest.raises(DimensionMismatchError):
        build_generator(3, [1, 1])
    with pytest.raises(NonFiniteValueError):
        build_generator(2, [1, float("nan")])


def test_exponentiate_single_clone():
    rotation = exponentiate(build_generator(1))
    expected = np.array([[0.0, -1.0], [1.0, 0.0]])
    assert np.allclose(rotation.matrix, expected, rtol=0, atol=1e-15)


def test_exponentiate_zero_weights():
    rotation = exponentiate(build_generator(3, [0, 0, 0]))
    assert np.allclose(rotation.matrix, np.eye(4), rtol=0, atol=1e-15)


@pytest.mark.parametrize("n", list(range(1, 9)) + [16, 32, 64])
def test_rotation_is_proper_orthogonal(n):
    rotation = exponentiate(build_generator(n))
    assert rotation.orthogonality_residual < 1e-12
    assert np.linalg.det(rotation.matrix) == pytest.approx(1.0, abs=1e-10)
    assert rotation.matrix[0, 0] == pytest.approx(0.0, abs=1e-13)


@pytest.mark.parametrize("weight", [1e3, 1e6])
def test_exponentiate_large_weights(weight):
    gen = build_generator(1, [weight])
    rotation = exponentiate(gen)
    assert rotation.scale == pytest.approx(abs(gen.collective_angle))
    assert rotation.orthogonality_residual < 1e-12 * rotation.scale
    assert np.allclose(rotation.matrix, rotation.closed_form(),
                       rtol=0, atol=1e-12 * rotation.scale)
    assert rotation.inverse().scale == rotation.scale


def test_rotation_tolerance_scale():
    assert exponentiate(build_generator(4)).scale == pytest.approx(math.pi / 2)
    assert exponentiate(build_generator(2, [0, 0])).scale == 1.0
    skewed = np.array([[1.0, 1e-11], [0.0, 1.0]])
    with pytest.raises(DomainError):
        LabelRotation(skewed)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_rotation_matches_closed_form(n, rng):
    for weights in (None, rng.uniform(-2.0, 2.0, size=n)):
        rotation = exponentiate(build_generator(n, weights))
        assert np.allclose(rotation.matrix, rotation.closed_form(),
                           rtol=0, atol=1e-13)


def test_apply_clone_map_examples():
    out = clone(0, 1, 1)
    assert np.allclose(out.to_array(), [-1, 0], rtol=0, atol=1e-12)

    out = clone(1, 0, 4)
    assert np.allclose(out.to_array(), [0, 0.5, 0.5, 0.5, 0.5],
                       rtol=0, atol=1e-12)

    out = clone(1 + 1j, 0.3, 2)
    expected = [-0.3 * math.sqrt(2)] + [(1 + 1j) / math.sqrt(2)] * 2
    assert np.allclose(out.to_array(), expected, rtol=0, atol=1e-12)


def test_apply_clone_map_dimension_mismatch():
    rotation = exponentiate(build_generator(2))
    with pytest.raises(DimensionMismatchError):
        apply_clone_map(ProductCoherentState([0, 0]), rotation)


@pytest.mark.parametrize("n", range(1, 9))
def test_clone_labels_match_prediction(n, random_labels):
    rotation = exponentiate(build_generator(n))
    for alpha, beta in zip(random_labels(100, 2.0), random_labels(100, 2.0)):
        psi = ProductCoherentState.from_unknown_and_ancillas(alpha, beta, n)
        out = apply_clone_map(psi, rotation).to_array()
        predicted = predicted_clone_labels(alpha, beta, n).to_array()
        assert np.allclose(out, predicted, rtol=0, atol=1e-10)

        # the unknown excitation is split evenly; the known one is merged
        assert abs(out[0]) == pytest.approx(math.sqrt(n) * abs(beta),
                                            abs=1e-10)
        assert np.allclose(np.abs(out[1:]), abs(alpha) / math.sqrt(n),
                           rtol=0, atol=1e-10)
        assert total_excitation(psi) == pytest.approx(
            np.sum(np.abs(out) ** 2), abs=1e-12
        )


@pytest.mark.parametrize("n", [1, 2, 4])
def test_overlap_preservation(n, random_labels):
    rotation = exponentiate(build_generator(n))
    for _ in range(1000):
        psi = ProductCoherentState.from_array(random_labels(n + 1, 1.5))
        psi_prime = ProductCoherentState.from_array(random_labels(n + 1, 1.5))
        comparison = verify_overlap_preservation(psi, psi_prime, rotation)
        assert comparison.abs_diff < 1e-12


@settings(max_examples=200)
@given(st.lists(st.tuples(labels, labels), min_size=5, max_size=5))
def test_overlap_preservation_five_modes(pairs):
    rotation = exponentiate(build_generator(4))
    psi = ProductCoherentState(mu for mu, _ in pairs)
    psi_prime = ProductCoherentState(nu for _, nu in pairs)
    comparison = verify_overlap_preservation(psi, psi_prime, rotation)
    assert comparison.abs_diff < 1e-12


def test_overlap_preservation_examples():
    rotation = exponentiate(build_generator(2))
    psi = ProductCoherentState.from_unknown_and_ancillas(1, 0, 2)
    comparison = verify_overlap_preservation(psi, psi, rotation)
    assert comparison.before == comparison.after == 1.0
    assert comparison.abs_diff == 0.0

    psi_prime = ProductCoherentState.from_unknown_and_ancillas(0, 0, 2)
    comparison = verify_overlap_preservation(psi, psi_prime, rotation)
    assert comparison.before == pytest.approx(math.exp(-1), abs=1e-12)
    assert comparison.after == pytest.approx(math.exp(-1), abs=1e-12)


def test_overlap_preservation_dimension_mismatch():
    rotation = exponentiate(build_generator(1))
    with pytest.raises(DimensionMismatchError):
        verify_overlap_preservation(ProductCoherentState([0, 0, 0]),
                                    ProductCoherentState([0, 0, 0]),
                                    rotation)


@pytest.mark.parametrize("n", [1, 2, 3, 6])
def test_four_applications_return_original(n, random_labels):
    rotation = exponentiate(build_generator(n))
    psi = ProductCoherentState.from_array(random_labels(n + 1, 2.0))
    out = psi
    for _ in range(4):
        out = rotation.apply(out)
    assert np.allclose(out.to_array(), psi.to_array(), rtol=0, atol=1e-10)


def test_inverse_undoes_clone_map(random_labels):
    rotation = exponentiate(build_generator(5, [1, 2, 0.5, -1, 0]))
    psi = ProductCoherentState.from_array(random_labels(6, 2.0))
    restored = rotation.inverse().apply(rotation.apply(psi))
    assert np.allclose(restored.to_array(), psi.to_array(),
                       rtol=0, atol=1e-12)


def test_attenuation_and_amplification_factors():
    assert attenuation_factor(1) == 1.0
    assert attenuation_factor(4) == 0.5
    assert attenuation_factor(2) == pytest.approx(0.7071067812, abs=1e-10)
    assert amplification_factor(9) == 3.0
    with pytest.raises(DomainError):
        attenuation_factor(0)
    with pytest.raises(DomainError):
        amplification_factor(0)


def test_literal_overlap_reading():
    psi = ProductCoherentState.from_unknown_and_ancillas(0.5, 1, 1)
    psi_prime = ProductCoherentState.from_unknown_and_ancillas(0.5, 0, 1)
    rotation = exponentiate(build_generator(1))
    before = verify_overlap_preservation(psi, psi_prime, rotation).before
    assert literal_overlap_after(psi, psi_prime) == pytest.approx(
        before, abs=1e-12
    )

    psi = ProductCoherentState.from_unknown_and_ancillas(0.5, 1, 2)
    psi_prime = ProductCoherentState.from_unknown_and_ancillas(0.5, 0, 2)
    assert literal_overlap_after(psi, psi_prime) == pytest.approx(
        math.exp(-4), abs=1e-12
    )
    with pytest.raises(DomainError):
        literal_overlap_after(ProductCoherentState([0, 1, 2]),
                              ProductCoherentState([0, 1, 2]))


def test_would_enable_cloning():
    assert would_enable_cloning(math.sqrt(4), 4)
    assert would_enable_cloning(1.0, 1)
    assert not would_enable_cloning(1.0, 4)
    assert not would_enable_cloning(1.5, 4)
