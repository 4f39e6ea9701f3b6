"""Shared pytest fixtures for the CLI, adapter and domain suites.

Fixtures fall into three groups:

* CLI plumbing: a runner, ANSI stripping and traceback-state isolation.
* Service injection: factories that wire :class:`AppServices` around a
  hand-built :class:`lib_layered_config.Config`.
* Domain samples: the eight-node directed example graph used throughout
  the suites, its matrices, and a helper that writes input files.
"""

from __future__ import annotations

import contextlib
import os
import re
import tempfile
from dataclasses import fields
from pathlib import Path
from typing import TYPE_CHECKING, Any

import lib_cli_exit_tools
import pytest
from click.testing import CliRunner
from lib_layered_config import Config

from dcm_toolkit.domain.graphs import Graph
from dcm_toolkit.domain.matrices import CdcMatrix, DcMatrix

if TYPE_CHECKING:
    from collections.abc import Callable, Iterator

    from lib_layered_config.domain.config import SourceInfo

    from dcm_toolkit.composition import AppServices

_COVERAGE_BASENAME = ".coverage.dcm_toolkit"


def _purge_stale_coverage_files(cov_path: Path) -> None:
    """Delete the SQLite database and its journal sidecars left by a crashed run."""
    for suffix in ("", "-journal", "-wal", "-shm"):
        with contextlib.suppress(FileNotFoundError):
            Path(str(cov_path) + suffix).unlink()


def pytest_configure(config: pytest.Config) -> None:
    """Point coverage at a local temp directory before pytest-cov starts.

    SQLite locking is unreliable on network mounts, so the database never
    lives next to the checkout.
    """
    if "COVERAGE_FILE" not in os.environ:
        cov_path = Path(tempfile.gettempdir()) / _COVERAGE_BASENAME
        _purge_stale_coverage_files(cov_path)
        os.environ["COVERAGE_FILE"] = str(cov_path)


ANSI_ESCAPE_PATTERN = re.compile(r"\x1B\[[0-?]*[ -/]*[@-~]")
CONFIG_FIELDS: tuple[str, ...] = tuple(field.name for field in fields(type(lib_cli_exit_tools.config)))

# Eight-node strongly connected digraph with a known DCM.
FIG1_ARCS: tuple[tuple[int, int], ...] = (
    (0, 3),
    (0, 4),
    (3, 4),
    (4, 0),
    (4, 6),
    (6, 7),
    (7, 1),
    (7, 2),
    (2, 7),
    (1, 6),
    (6, 5),
    (5, 3),
    (3, 2),
    (2, 4),
    (1, 0),
)

_FIG1_DCM_PREFIXES: tuple[tuple[int, ...], ...] = (
    (1, 2, 3, 2),
    (1, 1, 2, 2, 2),
    (1, 2, 3, 2),
    (1, 2, 3, 2),
    (1, 3, 3, 1),
    (1, 1, 2, 4),
    (1, 2, 4, 1),
    (1, 2, 3, 2),
)


def _pad(prefix: tuple[int, ...], n: int) -> list[int]:
    return list(prefix) + [0] * (n - len(prefix))


def _cumulative(row: list[int]) -> list[int]:
    total = 0
    out: list[int] = []
    for value in row:
        total += value
        out.append(total)
    return out


FIG1_DCM_ROWS: tuple[tuple[int, ...], ...] = tuple(tuple(_pad(p, 8)) for p in _FIG1_DCM_PREFIXES)
FIG1_CDCM_ROWS: tuple[tuple[int, ...], ...] = tuple(tuple(_cumulative(list(r))) for r in FIG1_DCM_ROWS)


def _snapshot_cli_config() -> dict[str, object]:
    return {name: getattr(lib_cli_exit_tools.config, name) for name in CONFIG_FIELDS}


def _restore_cli_config(snapshot: dict[str, object]) -> None:
    for name, value in snapshot.items():
        setattr(lib_cli_exit_tools.config, name, value)


def _services_with(get_config: Callable[..., Config]) -> AppServices:
    """Production services whose config loader is replaced by ``get_config``."""
    from dcm_toolkit.composition import AppServices, build_production

    prod = build_production()
    return AppServices(
        get_config=get_config,
        get_default_config_path=prod.get_default_config_path,
        display_config=prod.display_config,
        load_toolkit_settings=prod.load_toolkit_settings,
        init_logging=prod.init_logging,
    )


@pytest.fixture
def cli_runner() -> CliRunner:
    """Fresh CliRunner; read ``result.stdout`` when parsing command output."""
    return CliRunner()


@pytest.fixture
def production_factory() -> Callable[[], AppServices]:
    """The ``build_production`` factory, for invocations needing no injection."""
    from dcm_toolkit.composition import build_production

    return build_production


@pytest.fixture
def strip_ansi() -> Callable[[str], str]:
    """Return a helper removing ANSI escape sequences from rich output."""

    def _strip(value: str) -> str:
        return ANSI_ESCAPE_PATTERN.sub("", value)

    return _strip


@pytest.fixture
def managed_traceback_state() -> Iterator[None]:
    """Reset ``lib_cli_exit_tools`` traceback flags and restore them afterwards."""
    lib_cli_exit_tools.reset_config()
    lib_cli_exit_tools.config.traceback = False
    lib_cli_exit_tools.config.traceback_force_color = False
    snapshot = _snapshot_cli_config()
    try:
        yield
    finally:
        _restore_cli_config(snapshot)


@pytest.fixture
def clear_config_cache() -> Iterator[None]:
    """Clear the ``get_config`` lru_cache before the test.

    Only clears before: a test may monkeypatch ``get_config`` away, taking
    ``cache_clear`` with it.
    """
    from dcm_toolkit.adapters.config import loader as config_mod

    config_mod.get_config.cache_clear()
    yield


@pytest.fixture
def config_factory() -> Callable[[dict[str, Any]], Config]:
    """Build real Config objects from plain dicts, without provenance."""

    def _factory(data: dict[str, Any]) -> Config:
        return Config(data, {})

    return _factory


@pytest.fixture
def source_info_factory() -> Callable[[str, str, str | None], SourceInfo]:
    """Build SourceInfo dicts for provenance display tests."""

    def _factory(key: str, layer: str, path: str | None = None) -> SourceInfo:
        return {"layer": layer, "path": path, "key": key}

    return _factory


@pytest.fixture
def inject_config(clear_config_cache: None) -> Callable[[Config], Callable[[], AppServices]]:
    """Return a function turning a Config into a services factory.

    Only the config loader is replaced; display, settings validation and
    logging stay production.

    Example:
        factory = inject_config(config_factory({"recognizer": {"max_n": 4}}))
        result = cli_runner.invoke(cli, ["recognize", path], obj=factory)
    """

    def _inject(config: Config) -> Callable[[], AppServices]:
        def _fake_get_config(**_kwargs: Any) -> Config:
            return config

        services = _services_with(_fake_get_config)
        return lambda: services

    return _inject


@pytest.fixture
def inject_config_with_profile_capture(
    clear_config_cache: None,
) -> Callable[[Config, list[str | None]], Callable[[], AppServices]]:
    """Like :func:`inject_config`, recording every ``profile`` passed to the loader."""

    def _inject(config: Config, captured_profiles: list[str | None]) -> Callable[[], AppServices]:
        def _capturing_get_config(*, profile: str | None = None, **_kwargs: Any) -> Config:
            captured_profiles.append(profile)
            return config

        services = _services_with(_capturing_get_config)
        return lambda: services

    return _inject


@pytest.fixture
def config_cli_context(clear_config_cache: None) -> Callable[[dict[str, Any]], Callable[[], AppServices]]:
    """Shortcut for :func:`inject_config` taking a plain dict."""

    def _create(config_data: dict[str, Any]) -> Callable[[], AppServices]:
        config = Config(config_data, {})

        def _fake_get_config(**_kwargs: Any) -> Config:
            return config

        services = _services_with(_fake_get_config)
        return lambda: services

    return _create


@pytest.fixture
def fig1_graph() -> Graph:
    """The eight-node strongly connected example digraph."""
    return Graph.directed(8, FIG1_ARCS)


@pytest.fixture
def fig1_dcm() -> DcMatrix:
    """DCM of :func:`fig1_graph`."""
    return DcMatrix.from_rows(FIG1_DCM_ROWS)


@pytest.fixture
def fig1_cdcm() -> CdcMatrix:
    """CDCM of :func:`fig1_graph`."""
    return CdcMatrix.from_rows(FIG1_CDCM_ROWS)


@pytest.fixture
def write_text_file(tmp_path: Path) -> Callable[[str, str], Path]:
    """Return a helper writing ``text`` to ``tmp_path / name``."""

    def _write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write
