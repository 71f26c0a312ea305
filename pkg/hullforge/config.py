import json
import logging
import os
import yaml
from pathlib import Path
from typing import Dict, Optional, Any, Final, Union
from dataclasses import dataclass, asdict

from hullforge.errors import BudgetExceeded, InputError

logger = logging.getLogger(__name__)

DEFAULT_BUDGET: Final = 10 ** 7
BUDGET_ENV_VAR: Final = "HULLFORGE_BUDGET"


@dataclass(frozen=True)
class EnumerationBudget:
    """Largest number of codewords any enumeration may visit.

    Shared by the codes module (minimum distance, maximality) and the oracle.
    """
    max_codewords: int = DEFAULT_BUDGET

    def __post_init__(self):
        if isinstance(self.max_codewords, bool) or not isinstance(self.max_codewords, int) \
                or self.max_codewords <= 0:
            raise InputError(
                f"enumeration budget must be a positive integer, got {self.max_codewords!r}")

    def allows(self, count: int) -> bool:
        return count <= self.max_codewords

    def check(self, count: int, what: str = "enumeration") -> None:
        if not self.allows(count):
            raise BudgetExceeded(count, self.max_codewords, what)

    @classmethod
    def from_env(cls, default: int = DEFAULT_BUDGET) -> "EnumerationBudget":
        """Budget from HULLFORGE_BUDGET, falling back to ``default``."""
        raw = os.environ.get(BUDGET_ENV_VAR)
        if raw is None or raw.strip() == "":
            return cls(default)
        try:
            return cls(int(raw))
        except ValueError:
            raise InputError(f"{BUDGET_ENV_VAR}={raw!r} is not an integer")


DEFAULT_ENUMERATION_BUDGET: Final = EnumerationBudget()


@dataclass
class HullforgeConfig:
    """Configuration structure for hullforge runs."""
    budget: int = DEFAULT_BUDGET
    form: str = "euclidean"
    r: int = 0
    seed: Optional[int] = None
    method: str = "auto"
    side: str = "code"
    json: bool = False
    verbose: bool = False
    show_progress: bool = False

    @classmethod
    def from_dict(cls, config_dict: Dict[str, Any]) -> 'HullforgeConfig':
        """Create config from dictionary."""
        return cls(**{k: v for k, v in config_dict.items() if k in cls.__annotations__})

    def to_dict(self) -> Dict[str, Any]:
        """Convert config to dictionary."""
        return asdict(self)

    def enumeration_budget(self) -> EnumerationBudget:
        return EnumerationBudget(self.budget)


class ConfigLoader:
    """Load and validate configuration files."""

    @staticmethod
    def load_config(config_path: str) -> HullforgeConfig:
        """Load configuration from file."""
        path = Path(config_path)

        if not path.exists():
            raise FileNotFoundError(f"Config file not found: {config_path}")

        try:
            with open(path, 'r') as f:
                if path.suffix.lower() in ['.yml', '.yaml']:
                    config_data = yaml.safe_load(f)
                elif path.suffix.lower() == '.json':
                    config_data = json.load(f)
                else:
                    raise ValueError(
                        f"Unsupported config format: {path.suffix}")

        except (yaml.YAMLError, json.JSONDecodeError) as e:
            raise ValueError(f"Invalid config file format: {e}")

        if not isinstance(config_data, dict):
            raise ValueError(f"Invalid config file format: expected a mapping in {config_path}")
        return HullforgeConfig.from_dict(config_data)

    @staticmethod
    def __save_hullforge_config(
        config: HullforgeConfig,
        config_path: str
    ) -> None:
        """Save configuration to file."""
        path = Path(config_path)

        with open(path, 'w') as f:
            if path.suffix.lower() in ['.yml', '.yaml']:
                yaml.dump(config.to_dict(), f, default_flow_style=False)
            elif path.suffix.lower() == '.json':
                json.dump(config.to_dict(), f, indent=2)
            else:
                raise ValueError(f"Unsupported config format: {path.suffix}")

    @staticmethod
    def save_config(
            config_to_save: Union[Dict[str, Any], HullforgeConfig],
            save_path: str) -> bool:
        if isinstance(config_to_save, dict):
            config_to_save = HullforgeConfig.from_dict(config_to_save)
        elif not isinstance(config_to_save, HullforgeConfig):
            raise TypeError("Unsupported config type")
        ConfigLoader.__save_hullforge_config(config_to_save, save_path)
        logger.debug(f"Saved configuration to {save_path}")
        return True

    @staticmethod
    def generate_sample_config(config_path: str) -> bool:
        """Generate a sample configuration file."""
        sample_config = HullforgeConfig(
            budget=10 ** 6,
            form="euclidean",
            r=1,
            seed=2024,
            method="auto",
            side="code",
            json=True,
            verbose=False,
            show_progress=True
        )

        return ConfigLoader.save_config(
            config_to_save=sample_config.to_dict(),
            save_path=config_path
        )
