"""Toolkit settings: defaults, layered values and range validation."""

from __future__ import annotations

from typing import TYPE_CHECKING, Any

import pytest
from pydantic import ValidationError

from dcm_toolkit.adapters.config.loader import get_config
from dcm_toolkit.adapters.config.settings import ToolkitSettings, load_toolkit_settings
from dcm_toolkit.domain.enums import BoundMode, MatchPolicy

if TYPE_CHECKING:
    from collections.abc import Callable

    from lib_layered_config import Config


@pytest.mark.os_agnostic
def test_bundled_defaults_match_the_model_defaults(clear_config_cache: None) -> None:
    settings = load_toolkit_settings(get_config())

    assert settings.recognizer.max_n == 10
    assert settings.recognizer.timeout_seconds == 60.0
    assert settings.recognizer.node_budget == 2_000_000
    assert settings.recognizer.policy is MatchPolicy.FIXED_ROWS
    assert settings.screening.bound_mode is BoundMode.RELAXED
    assert settings.screening.subset_budget == 100_000
    assert settings.screening.require_strong is False
    assert settings.tpp.max_items == 24
    assert settings.generator.seed == 20240601


@pytest.mark.os_agnostic
def test_when_a_section_is_configured_its_values_are_coerced(
    config_factory: Callable[[dict[str, Any]], Config],
) -> None:
    config = config_factory({"recognizer": {"policy": "up-to-permutation", "timeout_seconds": 5}})

    settings = load_toolkit_settings(config)

    assert settings.recognizer.policy is MatchPolicy.UP_TO_PERMUTATION
    assert settings.recognizer.timeout_seconds == 5.0
    assert settings.recognizer.max_n == 10


@pytest.mark.os_agnostic
def test_when_a_section_is_missing_it_falls_back_to_defaults(
    config_factory: Callable[[dict[str, Any]], Config],
) -> None:
    settings = load_toolkit_settings(config_factory({"screening": {"bound_mode": "exact"}}))

    assert settings.screening.bound_mode is BoundMode.EXACT
    assert settings.tpp == ToolkitSettings().tpp


@pytest.mark.os_agnostic
@pytest.mark.parametrize(
    "data",
    [
        {"recognizer": {"max_n": 0}},
        {"recognizer": {"timeout_seconds": -1}},
        {"screening": {"subset_budget": -5}},
        {"screening": {"bound_mode": "sloppy"}},
        {"tpp": {"max_items": 0}},
    ],
)
def test_when_a_value_is_out_of_range_validation_fails(
    config_factory: Callable[[dict[str, Any]], Config], data: dict[str, Any]
) -> None:
    with pytest.raises(ValidationError):
        load_toolkit_settings(config_factory(data))


@pytest.mark.os_agnostic
def test_settings_are_frozen() -> None:
    settings = ToolkitSettings()

    with pytest.raises(ValidationError):
        settings.tpp.max_items = 3  # type: ignore[misc]
