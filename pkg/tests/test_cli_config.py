"""CLI config stories: display, JSON format, sections, profiles and ``--set`` preservation."""

from __future__ import annotations

from typing import TYPE_CHECKING, Any

import pytest

from dcm_toolkit.adapters import cli as cli_mod

if TYPE_CHECKING:
    from collections.abc import Callable

    from click.testing import CliRunner, Result
    from lib_layered_config import Config


_TOOLKIT_SECTIONS: dict[str, Any] = {
    "recognizer": {"max_n": 8, "timeout_seconds": 12.5, "policy": "up-to-permutation"},
    "screening": {"bound_mode": "exact", "subset_budget": 5000},
    "tpp": {"max_items": 18},
}


@pytest.mark.os_agnostic
def test_when_config_is_invoked_it_displays_configuration(
    cli_runner: CliRunner,
    production_factory: Callable[[], Any],
) -> None:
    result: Result = cli_runner.invoke(cli_mod.cli, ["config"], obj=production_factory)

    assert result.exit_code == 0


@pytest.mark.os_agnostic
def test_when_config_is_invoked_with_json_format_it_outputs_json(
    cli_runner: CliRunner,
    production_factory: Callable[[], Any],
) -> None:
    result: Result = cli_runner.invoke(cli_mod.cli, ["config", "--format", "json"], obj=production_factory)

    assert result.exit_code == 0
    assert "{" in result.stdout


@pytest.mark.os_agnostic
def test_bundled_defaults_show_the_recognizer_section(
    cli_runner: CliRunner,
    production_factory: Callable[[], Any],
    clear_config_cache: None,
) -> None:
    result: Result = cli_runner.invoke(
        cli_mod.cli, ["config", "--format", "json", "--section", "recognizer"], obj=production_factory
    )

    assert result.exit_code == 0
    assert "max_n" in result.stdout
    assert "node_budget" in result.stdout


@pytest.mark.os_agnostic
def test_when_config_is_invoked_with_toolkit_data_it_displays_every_section(
    cli_runner: CliRunner,
    config_cli_context: Callable[[dict[str, Any]], Callable[[], Any]],
) -> None:
    factory = config_cli_context(_TOOLKIT_SECTIONS)

    result: Result = cli_runner.invoke(cli_mod.cli, ["config"], obj=factory)

    assert result.exit_code == 0
    for section in ("[recognizer]", "[screening]", "[tpp]"):
        assert section in result.output
    assert "up-to-permutation" in result.output
    assert "5000" in result.output


@pytest.mark.os_agnostic
def test_when_config_is_invoked_with_json_format_and_section_it_shows_only_that_section(
    cli_runner: CliRunner,
    config_cli_context: Callable[[dict[str, Any]], Callable[[], Any]],
) -> None:
    factory = config_cli_context(_TOOLKIT_SECTIONS)

    result: Result = cli_runner.invoke(
        cli_mod.cli, ["config", "--format", "json", "--section", "screening"], obj=factory
    )

    assert result.exit_code == 0
    assert "bound_mode" in result.stdout
    assert "exact" in result.stdout
    assert "max_items" not in result.stdout


@pytest.mark.os_agnostic
def test_when_config_is_invoked_with_json_format_and_missing_section_it_fails(
    cli_runner: CliRunner,
    config_cli_context: Callable[[dict[str, Any]], Callable[[], Any]],
) -> None:
    factory = config_cli_context(_TOOLKIT_SECTIONS)

    result: Result = cli_runner.invoke(
        cli_mod.cli, ["config", "--format", "json", "--section", "generator"], obj=factory
    )

    assert result.exit_code == 2
    assert "not found" in result.stderr


@pytest.mark.os_agnostic
def test_when_config_is_invoked_with_profile_it_passes_profile_to_get_config(
    cli_runner: CliRunner,
    config_factory: Callable[[dict[str, Any]], Config],
    inject_config_with_profile_capture: Callable[[Config, list[str | None]], Callable[[], Any]],
) -> None:
    captured: list[str | None] = []
    factory = inject_config_with_profile_capture(config_factory(_TOOLKIT_SECTIONS), captured)

    result: Result = cli_runner.invoke(cli_mod.cli, ["--profile", "benchmarks", "config"], obj=factory)

    assert result.exit_code == 0
    assert captured == ["benchmarks"]


@pytest.mark.os_agnostic
def test_when_config_is_invoked_without_profile_it_passes_none(
    cli_runner: CliRunner,
    config_factory: Callable[[dict[str, Any]], Config],
    inject_config_with_profile_capture: Callable[[Config, list[str | None]], Callable[[], Any]],
) -> None:
    captured: list[str | None] = []
    factory = inject_config_with_profile_capture(config_factory(_TOOLKIT_SECTIONS), captured)

    result: Result = cli_runner.invoke(cli_mod.cli, ["config"], obj=factory)

    assert result.exit_code == 0
    assert captured == [None]


@pytest.mark.os_agnostic
def test_when_config_subcommand_profile_reloads_it_preserves_root_set_overrides(
    cli_runner: CliRunner,
    config_factory: Callable[[dict[str, Any]], Config],
    inject_config_with_profile_capture: Callable[[Config, list[str | None]], Callable[[], Any]],
) -> None:
    captured: list[str | None] = []
    factory = inject_config_with_profile_capture(config_factory({"screening": {"bound_mode": "exact"}}), captured)

    result: Result = cli_runner.invoke(
        cli_mod.cli,
        ["--set", "screening.bound_mode=relaxed", "config", "--profile", "benchmarks", "--format", "json"],
        obj=factory,
    )

    assert result.exit_code == 0
    assert captured == [None, "benchmarks"]
    assert "relaxed" in result.stdout
    assert "exact" not in result.stdout


@pytest.mark.os_agnostic
def test_when_config_subcommand_has_no_profile_it_uses_stored_config_with_overrides(
    cli_runner: CliRunner,
    config_cli_context: Callable[[dict[str, Any]], Callable[[], Any]],
) -> None:
    factory = config_cli_context({"recognizer": {"policy": "fixed-rows"}})

    result: Result = cli_runner.invoke(
        cli_mod.cli,
        ["--set", "recognizer.policy=up-to-permutation", "config", "--format", "json"],
        obj=factory,
    )

    assert result.exit_code == 0
    assert "up-to-permutation" in result.stdout
    assert "fixed-rows" not in result.stdout


@pytest.mark.os_agnostic
def test_configured_defaults_feed_the_recognize_command(
    cli_runner: CliRunner,
    config_cli_context: Callable[[dict[str, Any]], Callable[[], Any]],
    write_text_file: Callable[[str, str], Any],
) -> None:
    factory = config_cli_context({"recognizer": {"max_n": 1}})
    path = write_text_file("two.dcm", "DCM\n1 1\n1 1\n")

    result: Result = cli_runner.invoke(cli_mod.cli, ["recognize", str(path)], obj=factory)

    assert result.exit_code == 3
    assert "n = 2 exceeds max_n = 1" in result.stdout


@pytest.mark.os_agnostic
def test_command_flags_win_over_configured_defaults(
    cli_runner: CliRunner,
    config_cli_context: Callable[[dict[str, Any]], Callable[[], Any]],
    write_text_file: Callable[[str, str], Any],
) -> None:
    factory = config_cli_context({"recognizer": {"max_n": 1}})
    path = write_text_file("two.dcm", "DCM\n1 1\n1 1\n")

    result: Result = cli_runner.invoke(cli_mod.cli, ["recognize", "--max-n", "4", str(path)], obj=factory)

    assert result.exit_code == 0
    assert result.stdout.startswith("D 2")
