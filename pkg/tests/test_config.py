"""
Test the run configuration parser.
"""

import logging
from pathlib import Path

import pytest

from rosenaukawahara.errors import ConfigParseError
from rosenaukawahara.harness.config import parse_config, parse_config_text, steps_for

from .test_helpers import EXAMPLE1, example_config, write_config

BASE = """
x_left = -10
x_right = 10
M = 40
tau = 0.1
T = 1
a = 1
b = 1
c = 2
alpha = 1
lambda = 1
nu = 1
m = 2
"""


class TestParseConfig:
    """Test suite for parse_config_text and parse_config."""

    def test_should_parse_complete_config(self) -> None:
        config = parse_config_text(BASE + "# trailing comment\nsnapshot_stride = 5 # inline\n")

        assert (config.x_left, config.x_right, config.M) == (-10.0, 10.0, 40)
        assert config.h == pytest.approx(0.5)
        assert config.N == 10
        assert config.tau == 0.1
        assert config.params == EXAMPLE1
        assert config.snapshot_stride == 5
        assert config.initial == "ansatz"
        assert config.branch == "auto"
        assert config.bootstrap_tol == 1e-12
        assert config.bootstrap_max_iter == 50
        assert config.profile is None

    def test_should_build_grids(self) -> None:
        config = parse_config_text(BASE)

        assert config.grid().M == 40
        assert config.time_grid().N == 10
        assert config.time_grid().T == pytest.approx(1.0)

    def test_should_derive_time_step_from_step_count(self) -> None:
        config = parse_config_text(BASE.replace("tau = 0.1", "N = 4"))

        assert config.N == 4
        assert config.tau == 0.25

    def test_should_derive_cells_from_spacing(self) -> None:
        config = parse_config_text(BASE.replace("M = 40", "h = 0.25"))

        assert config.M == 80

    @pytest.mark.parametrize(
        "removed, key",
        [
            ("m = 2", "m"),
            ("lambda = 1", "lambda"),
            ("T = 1", "T"),
            ("M = 40", "M"),
            ("tau = 0.1", "tau"),
        ],
    )
    def test_should_name_missing_key(self, removed: str, key: str) -> None:
        with pytest.raises(ConfigParseError, match=f"^{key}: missing required key") as error:
            parse_config_text(BASE.replace(removed, ""))
        assert error.value.key == key

    @pytest.mark.parametrize(
        "extra, key, message",
        [
            ("speed = 3", "speed", "unknown key"),
            ("a = 2", "a", "given more than once"),
            ("h = 0.5", "h", "conflicts with M"),
            ("N = 10", "N", "conflicts with tau"),
            ("branch = sideways", "branch", "expected one of"),
            ("snapshot_stride = -1", "snapshot_stride", "must not be negative"),
            ("bootstrap_max_iter = 0", "bootstrap_max_iter", "at least 1"),
            ("out_dir =", "out_dir", "empty value"),
            ("just words", "line 14", "expected 'key = value'"),
        ],
    )
    def test_should_reject_bad_entries(self, extra: str, key: str, message: str) -> None:
        with pytest.raises(ConfigParseError, match=message) as error:
            parse_config_text(BASE + extra + "\n")
        assert error.value.key == key

    @pytest.mark.parametrize(
        "old, new, key",
        [
            ("alpha = 1", "alpha = 0", "alpha"),
            ("lambda = 1", "lambda = -1", "lambda"),
            ("m = 2", "m = 0", "m"),
            ("m = 2", "m = 2.5", "m"),
            ("M = 40", "M = 7", "M"),
            ("M = 40", "h = 0.3", "h"),
            ("x_right = 10", "x_right = -10", "x_right"),
            ("T = 1", "T = 0", "T"),
            ("tau = 0.1", "tau = -0.1", "tau"),
            ("\na = 1", "\na = fast", "a"),
            ("\na = 1", "\na = nan", "a"),
        ],
    )
    def test_should_reject_invalid_values(self, old: str, new: str, key: str) -> None:
        with pytest.raises(ConfigParseError) as error:
            parse_config_text(BASE.replace(old, new))
        assert error.value.key == key

    def test_should_round_steps_up_and_warn(self, caplog: pytest.LogCaptureFixture) -> None:
        with caplog.at_level(logging.WARNING):
            config = parse_config_text(BASE.replace("tau = 0.1", "tau = 0.3"))

        assert config.N == 4
        assert config.realized_T == pytest.approx(1.2)
        assert "does not divide" in caplog.text

    def test_should_not_warn_for_dividing_step(self, caplog: pytest.LogCaptureFixture) -> None:
        with caplog.at_level(logging.WARNING):
            assert steps_for(100.0, 0.1) == 1000
            assert steps_for(1.0, 0.005) == 200
        assert caplog.text == ""

    def test_should_report_unreadable_file(self, tmp_path: Path) -> None:
        with pytest.raises(ConfigParseError, match="cannot read") as error:
            parse_config(tmp_path / "absent.cfg")
        assert error.value.key == "config"


class TestProfiles:
    """Test suite for registry-backed configurations."""

    def test_should_inherit_coefficients_and_branch(self, tmp_path: Path) -> None:
        config = parse_config(write_config(tmp_path, example_config(tmp_path / "out")))

        assert config.params == EXAMPLE1
        assert config.branch == "minus"
        assert config.profile == "example1"
        assert config.M == 300
        assert config.out_dir == str(tmp_path / "out")

    def test_should_inherit_domain(self) -> None:
        config = parse_config_text("profile = example2\nM = 480\nN = 10\nT = 1\n")

        assert (config.x_left, config.x_right) == (-40.0, 200.0)
        assert config.params.m == 4

    def test_explicit_keys_should_override_profile(self) -> None:
        config = parse_config_text(
            "profile = example1\nM = 480\nN = 10\nT = 1\nnu = 0.5\nbranch = plus\n"
        )

        assert config.params.nu == 0.5
        assert config.params.c == EXAMPLE1.c
        assert config.branch == "plus"

    def test_should_accept_presets(self) -> None:
        config = parse_config_text(
            "profile = rosenau_rlw\nx_left = -20\nx_right = 20\nM = 40\nN = 1\nT = 1\n"
        )

        assert (config.params.b, config.params.c, config.params.nu, config.params.m) == (
            2.0,
            0.0,
            0.0,
            1,
        )
        assert config.branch == "auto"

    def test_should_reject_unknown_profile(self) -> None:
        with pytest.raises(ConfigParseError, match="Unknown profile") as error:
            parse_config_text("profile = example9\nM = 40\nN = 1\nT = 1\n")
        assert error.value.key == "profile"
