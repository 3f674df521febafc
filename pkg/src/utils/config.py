"""Configuration management for the array P system toolkit."""

import os
from dataclasses import dataclass, field
from pathlib import Path
from dotenv import load_dotenv

from ..language.bounds import Bounds
from .exceptions import ConfigurationError

# Load environment variables
load_dotenv()


@dataclass
class EngineConfig:
    """Configuration for enumeration, random runs and output files."""

    max_label_len: int = 16
    max_steps: int = 10_000
    max_cells_per_array: int = 10_000
    max_total_arrays: int = 64
    max_states: int = 500_000
    jobs: int = 1
    output_dir: Path = field(default_factory=lambda: Path("output"))
    log_level: str = "INFO"

    def __post_init__(self):
        """Validate and normalize configuration values."""
        if isinstance(self.output_dir, str):
            self.output_dir = Path(self.output_dir)

        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if self.log_level.upper() not in valid_levels:
            raise ConfigurationError(f"Invalid log level: {self.log_level}. Must be one of {valid_levels}")
        self.log_level = self.log_level.upper()

        for name in ("max_label_len", "max_steps", "max_cells_per_array", "max_total_arrays", "max_states"):
            if getattr(self, name) < 0:
                raise ConfigurationError(f"{name} must be non-negative")
        if self.jobs < 1:
            raise ConfigurationError("jobs must be at least 1")

    @classmethod
    def from_env(cls, **overrides) -> 'EngineConfig':
        """Create configuration from environment variables with optional overrides."""
        try:
            config_dict = {
                'max_label_len': int(os.getenv('APS_MAX_LABEL_LEN', '16')),
                'max_steps': int(os.getenv('APS_MAX_STEPS', '10000')),
                'max_cells_per_array': int(os.getenv('APS_MAX_CELLS', '10000')),
                'max_total_arrays': int(os.getenv('APS_MAX_ARRAYS', '64')),
                'max_states': int(os.getenv('APS_MAX_STATES', '500000')),
                'jobs': int(os.getenv('APS_JOBS', '1')),
                'output_dir': os.getenv('APS_OUTPUT_DIR', 'output'),
                'log_level': os.getenv('APS_LOG_LEVEL', 'INFO'),
            }
        except ValueError as e:
            raise ConfigurationError(f"Invalid numeric setting in environment: {e}")

        # CLI flags left unset arrive as None
        config_dict.update({k: v for k, v in overrides.items() if v is not None})

        return cls(**config_dict)

    def bounds(self) -> Bounds:
        """Search bounds described by this configuration."""
        return Bounds(
            max_label_len=self.max_label_len,
            max_steps=self.max_steps,
            max_cells_per_array=self.max_cells_per_array,
            max_total_arrays=self.max_total_arrays,
            max_states=self.max_states,
        )
