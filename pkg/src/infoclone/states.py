# -*- coding: utf-8 -*-
"""
This module provides exact, closed-form arithmetic on coherent-state labels:
complex amplitudes, product coherent states, squared overlaps, and the
scaling discrepancy that underlies the no-amplification argument.
"""
__all__ = (
    "ComplexAmplitude",
    "ProductCoherentState",
    "excitations",
    "fidelity_to",
    "overlap_sq",
    "product_overlap_sq",
    "scaling_overlap_discrepancy",
    "scaling_overlap_log_ratio",
    "total_excitation",
)

import math
import re
import typing as t
from typing import Any, Sequence, Tuple, Union

import attr
import numpy as np

from . import exceptions as exc
from .util import require_finite

_R_NUMBER = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_R_IMAGINARY = re.compile(rf"^(?P<sign>[+-]?)(?P<im>{_R_NUMBER})?i$")
_R_COMPLEX = re.compile(
    rf"^(?P<re>[+-]?{_R_NUMBER})(?:(?P<sign>[+-])(?P<im>{_R_NUMBER})?i)?$"
)

LabelLike = Union["ComplexAmplitude", complex, float, int]


def _finite_re(value: Any) -> float:
    return require_finite("real part", value)


def _finite_im(value: Any) -> float:
    return require_finite("imaginary part", value)


@attr.s(frozen=True, slots=True, str=False, auto_attribs=True)
class ComplexAmplitude:
    """An immutable coherent-state label, i.e., a dimensionless complex
    mode amplitude.

    Attributes
    ----------
    re: float
        The real part of the label.
    im: float
        The imaginary part of the label.

    Raises
    ------
    NonFiniteValueError
        If either component is NaN or infinite.
    """

    re: float = attr.ib(converter=_finite_re)
    im: float = attr.ib(default=0.0, converter=_finite_im)

    @classmethod
    def from_complex(cls, value: complex) -> "ComplexAmplitude":
        value = complex(value)
        return cls(value.real, value.imag)

    @classmethod
    def coerce(cls, value: LabelLike) -> "ComplexAmplitude":
        """Converts a complex, float, int or amplitude into an amplitude."""
        if isinstance(value, ComplexAmplitude):
            return value
        return cls.from_complex(value)

    @classmethod
    def parse(cls, text: str) -> "ComplexAmplitude":
        """Parses a label written as :code:`a`, :code:`bi`, :code:`a+bi`
        or :code:`a-bi`, without spaces.

        Parsing never consults the locale; the decimal separator is always
        a full stop.

        Raises
        ------
        LabelParseError
            If the text is not a well-formed complex literal.
        """
        stripped = text.strip()
        m_imaginary = _R_IMAGINARY.match(stripped)
        if m_imaginary:
            magnitude = float(m_imaginary.group("im") or "1")
            sign = -1.0 if m_imaginary.group("sign") == "-" else 1.0
            return cls(0.0, sign * magnitude)

        m_complex = _R_COMPLEX.match(stripped)
        if not m_complex:
            raise exc.LabelParseError(text)
        real = float(m_complex.group("re"))
        imag = 0.0
        if m_complex.group("sign"):
            imag = float(m_complex.group("im") or "1")
            if m_complex.group("sign") == "-":
                imag = -imag
        return cls(real, imag)

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    def __complex__(self) -> complex:
        return self.to_complex()

    def __abs__(self) -> float:
        return math.hypot(self.re, self.im)

    def scaled(self, factor: LabelLike) -> "ComplexAmplitude":
        """Returns this label multiplied by a (complex) factor."""
        return ComplexAmplitude.from_complex(
            self.to_complex() * complex(factor)
        )

    def format(self) -> str:
        """Renders this label in the :code:`a+bi` form accepted by
        :meth:`parse`."""
        sign = "-" if math.copysign(1.0, self.im) < 0 else "+"
        return f"{self.re!r}{sign}{abs(self.im)!r}i"

    def __str__(self) -> str:
        return self.format()


def _to_labels(values: t.Iterable[LabelLike]) -> Tuple[ComplexAmplitude, ...]:
    return tuple(ComplexAmplitude.coerce(v) for v in values)


@attr.s(frozen=True, slots=True, auto_attribs=True)
class ProductCoherentState:
    """An immutable, disentangled product of single-mode coherent states.

    Mode 0 holds the unknown state; modes 1 onwards hold the ancillas.

    Attributes
    ----------
    labels: Tuple[ComplexAmplitude, ...]
        The label of each mode, in mode order.

    Raises
    ------
    DomainError
        If no labels are given.
    """

    labels: Tuple[ComplexAmplitude, ...] = attr.ib(converter=_to_labels)

    @labels.validator
    def _check_labels(self, attribute: Any, value: Tuple[Any, ...]) -> None:
        if not value:
            raise exc.DomainError("a product state needs at least one mode")

    @classmethod
    def from_unknown_and_ancillas(
        cls, alpha: LabelLike, beta: LabelLike, n_ancillas: int
    ) -> "ProductCoherentState":
        """Builds |alpha> |beta>_1 ... |beta>_N."""
        if n_ancillas < 0:
            raise exc.DomainError(
                f"number of ancillas must be non-negative: {n_ancillas}"
            )
        alpha = ComplexAmplitude.coerce(alpha)
        beta = ComplexAmplitude.coerce(beta)
        return cls((alpha,) + (beta,) * n_ancillas)

    @classmethod
    def from_array(cls, values: Sequence[complex]) -> "ProductCoherentState":
        return cls(complex(v) for v in np.asarray(values, dtype=complex))

    def to_array(self) -> np.ndarray:
        """Returns the labels as a complex numpy vector."""
        return np.array([lbl.to_complex() for lbl in self.labels],
                        dtype=complex)

    @property
    def n_modes(self) -> int:
        return len(self.labels)

    @property
    def n_ancillas(self) -> int:
        return len(self.labels) - 1

    @property
    def unknown(self) -> ComplexAmplitude:
        return self.labels[0]

    @property
    def ancillas(self) -> Tuple[ComplexAmplitude, ...]:
        return self.labels[1:]

    def to_dict(self) -> t.Dict[str, Any]:
        return {"labels": [lbl.format() for lbl in self.labels]}


def overlap_sq(mu: LabelLike, nu: LabelLike) -> float:
    """Computes the squared overlap, exp(-|mu - nu|^2), of two coherent
    states.

    Raises
    ------
    NonFiniteValueError
        If either label is not finite.
    """
    mu = ComplexAmplitude.coerce(mu)
    nu = ComplexAmplitude.coerce(nu)
    distance = abs(mu.to_complex() - nu.to_complex())
    return math.exp(-distance * distance)


def product_overlap_sq(psi: ProductCoherentState,
                       psi_prime: ProductCoherentState
                       ) -> float:
    """Computes the squared overlap of two product coherent states as the
    product of their per-mode squared overlaps.

    Raises
    ------
    DimensionMismatchError
        If the states have a different number of modes.
    """
    if psi.n_modes != psi_prime.n_modes:
        raise exc.DimensionMismatchError(
            "product state", psi.n_modes, psi_prime.n_modes
        )
    return math.prod(
        overlap_sq(mu, nu) for mu, nu in zip(psi.labels, psi_prime.labels)
    )


def fidelity_to(psi: ProductCoherentState,
                psi_prime: ProductCoherentState
                ) -> float:
    """Alias of :func:`product_overlap_sq` used by validation reports."""
    return product_overlap_sq(psi, psi_prime)


def _scaling_exponents(lam: LabelLike,
                       alpha: LabelLike,
                       beta: LabelLike
                       ) -> t.Tuple[float, float]:
    lam = ComplexAmplitude.coerce(lam)
    alpha = ComplexAmplitude.coerce(alpha)
    beta = ComplexAmplitude.coerce(beta)
    delta = alpha.to_complex() - beta.to_complex()
    d2 = delta.real * delta.real + delta.imag * delta.imag
    m2 = lam.re * lam.re + lam.im * lam.im
    return m2, d2


def scaling_overlap_discrepancy(lam: LabelLike,
                                alpha: LabelLike,
                                beta: LabelLike
                                ) -> float:
    """
    Measures how badly a universal scaling map |alpha> -> |lam alpha>,
    |beta> -> |lam beta> would violate overlap preservation.

    The difference is evaluated as the larger overlap times
    1 - exp(-||lam|^2 - 1| |alpha-beta|^2), so that it stays positive for
    arbitrarily small separations. Once both overlaps underflow, i.e.,
    for |alpha-beta|^2 beyond roughly 745, the result is 0.0; use
    :func:`scaling_overlap_log_ratio` to compare such states.

    Returns
    -------
    float
        |exp(-|alpha-beta|^2) - exp(-|lam|^2 |alpha-beta|^2)|, which is zero
        if and only if |lam| = 1 or alpha = beta.
    """
    m2, d2 = _scaling_exponents(lam, alpha, beta)
    if m2 == 1.0 or d2 == 0.0:
        return 0.0
    larger = math.exp(-min(1.0, m2) * d2)
    return larger * -math.expm1(-abs(1.0 - m2) * d2)


def scaling_overlap_log_ratio(lam: LabelLike,
                              alpha: LabelLike,
                              beta: LabelLike
                              ) -> float:
    """
    Returns |ln(|<alpha|beta>|^2 / |<lam alpha|lam beta>|^2)|, i.e.,
    ||lam|^2 - 1| |alpha-beta|^2, which measures the same violation as
    :func:`scaling_overlap_discrepancy` relative to the overlaps themselves
    and never underflows.
    """
    m2, d2 = _scaling_exponents(lam, alpha, beta)
    if m2 == 1.0 or d2 == 0.0:
        return 0.0
    return abs(1.0 - m2) * d2


def excitations(psi: ProductCoherentState) -> Tuple[float, ...]:
    """Returns the mean occupation number, |v_k|^2, of each mode.

    Labels whose squared modulus exceeds the float range give :code:`inf`.
    """
    return tuple(lbl.re * lbl.re + lbl.im * lbl.im for lbl in psi.labels)


def total_excitation(psi: ProductCoherentState) -> float:
    """Returns the total mean occupation number across all modes."""
    return math.fsum(excitations(psi))
