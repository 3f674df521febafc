"""Tests for configuration, validators, deduplication and label words."""

from pathlib import Path

import pytest

from src.language.bounds import Bounds
from src.language.words import as_word, format_word, is_prefix, sort_words
from src.utils.config import EngineConfig
from src.utils.deduplication import StateDeduplicator
from src.utils.exceptions import BadTokenError, ConfigurationError, ParseError, ValidationError
from src.utils.logger import get_logger
from src.utils.validators import sanitize_filename, validate_degree, validate_symbol


class TestConfig:
    """Test engine configuration."""

    def test_defaults(self):
        """Test default bounds."""
        config = EngineConfig()
        assert config.max_label_len == 16
        assert config.max_steps == 10_000
        assert config.jobs == 1
        assert config.output_dir == Path("output")
        assert config.bounds() == Bounds()

    def test_validation(self):
        """Test invalid values are refused."""
        with pytest.raises(ConfigurationError):
            EngineConfig(log_level="LOUD")
        with pytest.raises(ConfigurationError):
            EngineConfig(max_steps=-1)
        with pytest.raises(ConfigurationError):
            EngineConfig(jobs=0)

    def test_log_level_normalized(self):
        """Test log levels are upper-cased."""
        assert EngineConfig(log_level="debug").log_level == "DEBUG"

    def test_from_env(self, monkeypatch):
        """Test environment values and overrides, ignoring unset overrides."""
        monkeypatch.setenv("APS_MAX_LABEL_LEN", "7")
        monkeypatch.setenv("APS_JOBS", "3")
        config = EngineConfig.from_env(max_label_len=None, max_steps=99)
        assert config.max_label_len == 7
        assert config.jobs == 3
        assert config.max_steps == 99

    def test_from_env_bad_number(self, monkeypatch):
        """Test non-numeric settings are a configuration error."""
        monkeypatch.setenv("APS_MAX_STATES", "lots")
        with pytest.raises(ConfigurationError):
            EngineConfig.from_env()

    def test_bounds_reject_negative(self):
        """Test bounds are non-negative."""
        with pytest.raises(ValueError):
            Bounds(max_label_len=-1)


class TestLogger:
    """Test module logger naming."""

    def test_package_prefix_dropped(self):
        """Test module loggers hang under aps without the source package name."""
        assert get_logger("src.language.enumerator").name == "aps.language.enumerator"
        assert get_logger("aps").name == "aps"
        assert get_logger("aps.oracle").name == "aps.oracle"
        assert get_logger("tools").name == "aps.tools"


class TestValidators:
    """Test symbol, degree and file name validation."""

    def test_symbols(self):
        """Test accepted and rejected symbol tokens."""
        assert validate_symbol("A1") == "A1"
        assert validate_symbol("S'") == "S'"
        for bad in ("", "a b", "a.b", "."):
            with pytest.raises(BadTokenError):
                validate_symbol(bad)

    def test_degrees(self):
        """Test degree literals."""
        assert validate_degree("315") == 315
        with pytest.raises(ParseError):
            validate_degree("360")
        with pytest.raises(ParseError):
            validate_degree("-45")

    def test_sanitize_filename(self):
        """Test unsafe characters are replaced."""
        assert sanitize_filename("verify_closed form pi5/x.md") == "verify_closed form pi5_x.md"
        assert sanitize_filename("...") == "untitled"
        assert len(sanitize_filename("a" * 300)) == 200


class TestDeduplicator:
    """Test the visited-state store."""

    def test_insert_if_absent(self):
        """Test duplicates and capacity."""
        dedup = StateDeduplicator(capacity=2)
        assert dedup.add_if_absent("a")
        assert not dedup.add_if_absent("a")
        assert dedup.is_duplicate("a")
        assert dedup.add_if_absent("b")
        assert dedup.full
        assert not dedup.add_if_absent("c")
        assert dedup.get_stats() == {'states': 2, 'duplicate_hits': 1, 'rejected': 1}


class TestWords:
    """Test label words."""

    def test_as_word(self):
        """Test characters, spaced tokens and the empty word."""
        assert as_word("aab") == ("a", "a", "b")
        assert as_word("a1 a2") == ("a1", "a2")
        assert as_word("_") == ()
        assert as_word("") == ()

    def test_format_word(self):
        """Test single-character labels concatenate."""
        assert format_word(("a", "b")) == "ab"
        assert format_word(("a1", "b")) == "a1 b"
        assert format_word(()) == "_"

    def test_shortlex(self):
        """Test ordering by length first."""
        assert sort_words([("b",), ("a", "a"), ("a",)]) == [("a",), ("b",), ("a", "a")]

    def test_prefix(self):
        """Test prefix checks."""
        assert is_prefix(("a",), ("a", "b"))
        assert not is_prefix(("b",), ("a", "b"))
        assert not is_prefix(("a", "b", "c"), ("a", "b"))


class TestExceptions:
    """Test error payloads."""

    def test_parse_error_location(self):
        """Test positions are prefixed to the message."""
        error = ParseError("bad", 3, 7)
        assert str(error) == "line 3, column 7: bad"
        assert str(ParseError("bad")) == "bad"

    def test_validation_error_problems(self):
        """Test every problem is kept."""
        error = ValidationError(["one", "two"])
        assert error.problems == ["one", "two"]
        assert str(error) == "one; two"


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
