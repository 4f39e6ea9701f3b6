"""Config display wrapper: delegation to lib_layered_config and section errors."""

from __future__ import annotations

from typing import TYPE_CHECKING, Any

import pytest
from lib_layered_config import Config

from dcm_toolkit.adapters.config.display import display_config
from dcm_toolkit.domain.enums import OutputFormat

if TYPE_CHECKING:
    from collections.abc import Callable

    from lib_layered_config.domain.config import SourceInfo


@pytest.mark.os_agnostic
@pytest.mark.parametrize("output_format", list(OutputFormat))
def test_when_the_section_does_not_exist_display_raises(
    config_factory: Callable[[dict[str, Any]], Config], output_format: OutputFormat
) -> None:
    config = config_factory({"recognizer": {"max_n": 10}})

    with pytest.raises(ValueError, match="not found"):
        display_config(config, output_format=output_format, section="reducer")


@pytest.mark.os_agnostic
def test_display_human_renders_toolkit_sections(capsys: pytest.CaptureFixture[str]) -> None:
    display_config(Config({"recognizer": {"policy": "fixed-rows"}}, {}), output_format=OutputFormat.HUMAN)

    output = capsys.readouterr().out
    assert "[recognizer]" in output
    assert 'policy = "fixed-rows"' in output


@pytest.mark.os_agnostic
def test_display_json_renders_toolkit_sections(capsys: pytest.CaptureFixture[str]) -> None:
    display_config(Config({"tpp": {"max_items": 24}}, {}), output_format=OutputFormat.JSON)

    output = capsys.readouterr().out
    assert '"tpp"' in output
    assert '"max_items": 24' in output


@pytest.mark.os_agnostic
def test_display_passes_the_profile_into_provenance(
    capsys: pytest.CaptureFixture[str],
    source_info_factory: Callable[..., SourceInfo],
) -> None:
    metadata = {"generator.seed": source_info_factory("generator.seed", "user", "/home/u/.config/dcm/config.toml")}
    config = Config({"generator": {"seed": 7}}, metadata)

    display_config(config, output_format=OutputFormat.HUMAN, profile="benchmarks")

    assert "# layer:user profile:benchmarks" in capsys.readouterr().out


@pytest.mark.os_agnostic
def test_display_shows_a_section_holding_only_falsey_values(capsys: pytest.CaptureFixture[str]) -> None:
    display_config(Config({"screening": {"require_strong": False, "subset_budget": 0}}, {}), section="screening")

    output = capsys.readouterr().out
    assert "require_strong = false" in output
    assert "subset_budget = 0" in output
