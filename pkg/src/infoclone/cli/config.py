# -*- coding: utf-8 -*-
"""This module describes and loads the configuration of a single run."""
__all__ = ("COMMANDS", "DEFAULTS", "OUTPUT_FORMATS", "RunConfig")

import typing as t
from typing import Any, Dict, Mapping, Optional, Tuple

import attr
import yaml
from loguru import logger

from .. import exceptions as exc
from ..fock.space import DEFAULT_CUTOFF
from ..states import ComplexAmplitude, ProductCoherentState

COMMANDS = ("clone", "oracle-check", "estimate", "noamp", "overlap")
OUTPUT_FORMATS = ("json", "csv")

DEFAULTS: Dict[str, Any] = {
    "alpha": "1+0i",
    "beta": "0",
    "alpha_prime": "0",
    "beta_prime": "0",
    "n_clones": 1,
    "cutoff": DEFAULT_CUTOFF,
    "n_trials": 100000,
    "seed": 0,
    "tolerance": None,
    "workers": 1,
    "output_format": "json",
    "output_path": None,
    "psi": None,
    "psi_prime": None,
    "sweep": "1,4,16,64",
    "timing": False,
}


def _label(value: Any) -> ComplexAmplitude:
    if isinstance(value, ComplexAmplitude):
        return value
    if isinstance(value, (int, float, complex)) and not isinstance(value, bool):
        return ComplexAmplitude.coerce(value)
    return ComplexAmplitude.parse(str(value))


def _labels(value: Any) -> Optional[ProductCoherentState]:
    if value is None or isinstance(value, ProductCoherentState):
        return value
    if isinstance(value, str):
        value = [v for v in value.split(",") if v]
    return ProductCoherentState(_label(v) for v in value)


def _ints(value: Any) -> Tuple[int, ...]:
    if isinstance(value, str):
        value = [v for v in value.split(",") if v]
    return tuple(int(v) for v in value)


@attr.s(frozen=True, slots=True, auto_attribs=True)
class RunConfig:
    """An immutable description of a single command-line run.

    Attributes
    ----------
    command: str
        The name of the command to run.
    alpha: ComplexAmplitude
        The label of the unknown state.
    beta: ComplexAmplitude
        The label of each ancilla.
    alpha_prime: ComplexAmplitude
        The label of the unknown state of the comparison state.
    beta_prime: ComplexAmplitude
        The label of each ancilla of the comparison state.
    n_clones: int
        The number of clones, N.
    cutoff: int
        The per-mode Fock cutoff, D, used by the oracle.
    n_trials: int
        The number of Monte Carlo trials.
    seed: int
        The seed from which every random stream is derived.
    tolerance: float, optional
        The pass/fail tolerance; each command supplies its own default.
    workers: int
        The number of threads used to run estimation trials.
    output_format: str
        Either :code:`json` or :code:`csv`.
    output_path: str, optional
        The file to which the report is written, or stdout if omitted.
    psi: ProductCoherentState, optional
        An explicit first state for the overlap command.
    psi_prime: ProductCoherentState, optional
        An explicit second state for the overlap command.
    sweep: Tuple[int, ...]
        The numbers of copies at which the estimation curves are sampled.
    timing: bool
        If :code:`True`, the wall-clock duration is recorded in the report.

    Raises
    ------
    UsageError
        If any field lies outside the range accepted by the command.
    """

    command: str
    alpha: ComplexAmplitude = attr.ib(converter=_label)
    beta: ComplexAmplitude = attr.ib(converter=_label)
    alpha_prime: ComplexAmplitude = attr.ib(converter=_label)
    beta_prime: ComplexAmplitude = attr.ib(converter=_label)
    n_clones: int = attr.ib(converter=int)
    cutoff: int = attr.ib(converter=int)
    n_trials: int = attr.ib(converter=int)
    seed: int = attr.ib(converter=int)
    tolerance: Optional[float] = attr.ib(
        converter=attr.converters.optional(float)
    )
    workers: int = attr.ib(converter=int)
    output_format: str
    output_path: Optional[str]
    psi: Optional[ProductCoherentState] = attr.ib(converter=_labels)
    psi_prime: Optional[ProductCoherentState] = attr.ib(converter=_labels)
    sweep: Tuple[int, ...] = attr.ib(converter=_ints)
    timing: bool = attr.ib(converter=bool)

    def __attrs_post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise exc.UsageError(f"unknown command: {self.command}")
        if self.output_format not in OUTPUT_FORMATS:
            raise exc.UsageError(f"unknown output format: {self.output_format}")
        if self.n_clones < 1:
            raise exc.UsageError(f"--n must be at least 1: {self.n_clones}")
        if self.cutoff < 2:
            raise exc.UsageError(f"--cutoff must be at least 2: {self.cutoff}")
        if self.n_trials < 2:
            raise exc.UsageError(f"--trials must be at least 2: {self.n_trials}")
        if self.seed < 0:
            raise exc.UsageError(f"--seed must be non-negative: {self.seed}")
        if self.workers < 1:
            raise exc.UsageError(f"--workers must be at least 1: {self.workers}")
        if self.tolerance is not None and not self.tolerance > 0:
            raise exc.UsageError(f"--tolerance must be positive: {self.tolerance}")
        if not self.sweep or min(self.sweep) < 1:
            raise exc.UsageError(f"--sweep needs positive counts: {self.sweep}")

    @classmethod
    def build(cls,
              command: str,
              overrides: Mapping[str, Any],
              config_file: Optional[str] = None
              ) -> "RunConfig":
        """
        Builds a configuration by layering the built-in defaults, the
        contents of an optional YAML file, and a set of overrides, with later
        sources taking precedence. Overrides whose value is :code:`None` are
        ignored.

        Raises
        ------
        UsageError
            If the YAML file is malformed, names an unknown setting, or the
            resulting configuration is invalid.
        """
        settings = dict(DEFAULTS)
        if config_file:
            settings.update(cls._load_file(config_file))
        settings.update({k: v for k, v in overrides.items() if v is not None})
        try:
            return cls(command=command, **settings)
        except (TypeError, ValueError) as err:
            raise exc.UsageError(str(err)) from err

    @staticmethod
    def _load_file(filename: str) -> Dict[str, Any]:
        try:
            with open(filename, "r") as f:
                contents = yaml.safe_load(f)
        except (OSError, yaml.YAMLError) as err:
            logger.exception(f"failed to load configuration file [{filename}]")
            raise exc.UsageError(
                f"could not read configuration file: {filename}"
            ) from err
        if contents is None:
            return {}
        if not isinstance(contents, dict):
            raise exc.UsageError(f"configuration file is not a mapping: {filename}")
        unknown = set(contents) - set(DEFAULTS)
        if unknown:
            names = ", ".join(sorted(unknown))
            raise exc.UsageError(f"unknown settings in {filename}: {names}")
        logger.debug(f"loaded configuration file [{filename}]")
        return contents

    def to_dict(self) -> Dict[str, Any]:
        def states(psi: t.Optional[ProductCoherentState]) -> Any:
            return None if psi is None else psi.to_dict()["labels"]

        return {
            "command": self.command,
            "alpha": self.alpha.format(),
            "beta": self.beta.format(),
            "alpha_prime": self.alpha_prime.format(),
            "beta_prime": self.beta_prime.format(),
            "n_clones": self.n_clones,
            "cutoff": self.cutoff,
            "n_trials": self.n_trials,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "workers": self.workers,
            "output_format": self.output_format,
            "output_path": self.output_path,
            "psi": states(self.psi),
            "psi_prime": states(self.psi_prime),
            "sweep": list(self.sweep),
            "timing": self.timing,
        }
