from __future__ import annotations

import pytest
from pydantic import ValidationError

from netorder.settings import Settings


def test_defaults() -> None:
    settings = Settings()

    assert settings.oracle_node_limit == 10
    assert settings.exhaustive_round_limit == 6
    assert settings.batch_workers == 4
    assert settings.log_level == "WARNING"


@pytest.mark.parametrize(
    "values",
    [
        {"oracle_node_limit": 0},
        {"oracle_node_limit": 17},
        {"exhaustive_round_limit": 9},
        {"batch_workers": 0},
        {"log_level": "TRACE"},
        {"colour": "always"},
    ],
)
def test_out_of_range_values_are_rejected(values: dict[str, object]) -> None:
    with pytest.raises(ValidationError):
        Settings.model_validate(values)
