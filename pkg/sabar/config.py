"""Configuration management for sabar."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import orjson

from sabar.pipeline.grid import thread_count

logger = logging.getLogger(__name__)


@dataclass
class Config:
    """Main configuration for sabar."""

    # Paths
    data_dir: Path = field(default_factory=lambda: Path.home() / ".sabar")

    # Pipeline
    grid_n: int = 32
    approx_width: Fraction = Fraction(1, 1000)
    dnf_atom_budget: int = 64
    max_exact_dim: int = 3
    threads: int = 1

    # Output
    log_level: str = "WARNING"

    @classmethod
    def load(cls, config_path: Path | None = None) -> "Config":
        """Load configuration from file; SABAR_THREADS overrides the thread count."""
        if config_path is None:
            config_path = Path.home() / ".sabar" / "config.json"

        config = cls()
        if config_path.exists():
            try:
                with open(config_path, "rb") as f:
                    data = orjson.loads(f.read())
                config = cls.from_dict(data)
            except Exception:
                logger.warning("could not read %s; using defaults", config_path)
                config = cls()

        config.threads = thread_count(config.threads)
        return config

    @classmethod
    def from_dict(cls, data: dict) -> "Config":
        """Create config from dictionary."""
        config = cls()

        if "data_dir" in data:
            config.data_dir = Path(data["data_dir"]).expanduser()
        if "grid_n" in data:
            config.grid_n = int(data["grid_n"])
        if "approx_width" in data:
            config.approx_width = Fraction(data["approx_width"])
        if "dnf_atom_budget" in data:
            config.dnf_atom_budget = int(data["dnf_atom_budget"])
        if "max_exact_dim" in data:
            config.max_exact_dim = int(data["max_exact_dim"])
        if "threads" in data:
            config.threads = int(data["threads"])
        if "log_level" in data:
            config.log_level = str(data["log_level"]).upper()

        return config

    def save(self, config_path: Path | None = None) -> None:
        """Save configuration to file."""
        if config_path is None:
            config_path = self.data_dir / "config.json"

        config_path.parent.mkdir(parents=True, exist_ok=True)

        data = {
            "data_dir": str(self.data_dir),
            "grid_n": self.grid_n,
            "approx_width": str(self.approx_width),
            "dnf_atom_budget": self.dnf_atom_budget,
            "max_exact_dim": self.max_exact_dim,
            "threads": self.threads,
            "log_level": self.log_level,
        }

        with open(config_path, "wb") as f:
            f.write(orjson.dumps(data, option=orjson.OPT_INDENT_2))
