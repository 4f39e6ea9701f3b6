"""Typed toolkit settings read from the layered configuration.

The ``[recognizer]``, ``[screening]``, ``[tpp]`` and ``[generator]`` sections
of the merged configuration feed the defaults of the corresponding CLI
options. Command-line flags always win over configured values.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Any

from pydantic import BaseModel, ConfigDict, Field

from dcm_toolkit.domain.enums import BoundMode, MatchPolicy

if TYPE_CHECKING:
    from lib_layered_config import Config


class RecognizerSettings(BaseModel):
    """Budgets for the exact recognizer.

    Example:
        >>> RecognizerSettings().max_n
        10
        >>> RecognizerSettings(max_n=0)  # doctest: +IGNORE_EXCEPTION_DETAIL
        Traceback (most recent call last):
        ...
        ValidationError: ...
    """

    model_config = ConfigDict(frozen=True)

    max_n: int = Field(default=10, gt=0)
    timeout_seconds: float = Field(default=60.0, gt=0)
    node_budget: int = Field(default=2_000_000, gt=0)
    policy: MatchPolicy = MatchPolicy.FIXED_ROWS


class ScreeningSettings(BaseModel):
    """Defaults of the ``check`` command."""

    model_config = ConfigDict(frozen=True)

    bound_mode: BoundMode = BoundMode.RELAXED
    subset_budget: int = Field(default=100_000, ge=0)
    require_strong: bool = False


class TppSettings(BaseModel):
    """Size guard for the exact three-partition solver."""

    model_config = ConfigDict(frozen=True)

    max_items: int = Field(default=24, gt=0)


class GeneratorSettings(BaseModel):
    """Seed used by ``random-graph`` when ``--seed`` is not given."""

    model_config = ConfigDict(frozen=True)

    seed: int = 20240601


class ToolkitSettings(BaseModel):
    """All toolkit sections of the merged configuration.

    Example:
        >>> settings = ToolkitSettings.model_validate({"tpp": {"max_items": 12}})
        >>> settings.tpp.max_items, settings.screening.bound_mode
        (12, <BoundMode.RELAXED: 'relaxed'>)
    """

    model_config = ConfigDict(frozen=True)

    recognizer: RecognizerSettings = RecognizerSettings()
    screening: ScreeningSettings = ScreeningSettings()
    tpp: TppSettings = TppSettings()
    generator: GeneratorSettings = GeneratorSettings()


_SECTIONS = ("recognizer", "screening", "tpp", "generator")


def load_toolkit_settings(config: Config) -> ToolkitSettings:
    """Validate the toolkit sections of ``config``.

    Missing sections fall back to their defaults; unknown keys inside a
    section are ignored.

    Raises:
        pydantic.ValidationError: If a configured value has the wrong type
            or is out of range.

    Example:
        >>> from lib_layered_config import Config
        >>> load_toolkit_settings(Config({}, {})).recognizer.node_budget
        2000000
        >>> load_toolkit_settings(Config({"generator": {"seed": 7}}, {})).generator.seed
        7
    """
    raw: dict[str, Any] = {name: config.get(name, default={}) or {} for name in _SECTIONS}
    return ToolkitSettings.model_validate(raw)


__all__ = [
    "GeneratorSettings",
    "RecognizerSettings",
    "ScreeningSettings",
    "ToolkitSettings",
    "TppSettings",
    "load_toolkit_settings",
]
