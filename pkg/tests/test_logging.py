"""Logging configuration model tests.

``init_logging`` itself runs in the CLI integration tests.
"""

from __future__ import annotations

import pytest

from dcm_toolkit.adapters.logging.setup import LoggingConfigModel


@pytest.mark.os_agnostic
def test_logging_config_model_passes_unknown_keys_through() -> None:
    parsed = LoggingConfigModel.model_validate({"service": "dcm", "console_level": "WARNING"})

    assert parsed.service == "dcm"
    assert parsed.model_dump(exclude={"service", "environment"}, exclude_none=True) == {"console_level": "WARNING"}


@pytest.mark.os_agnostic
def test_logging_config_model_defaults_to_production_without_a_service() -> None:
    parsed = LoggingConfigModel.model_validate({})

    assert parsed.service is None
    assert parsed.environment == "prod"
