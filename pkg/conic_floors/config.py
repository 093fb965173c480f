import os
import threading
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field


def get_project_root() -> Path:
    """Get the project root directory"""
    return Path(__file__).resolve().parent.parent


PROJECT_ROOT = get_project_root()
DATA_ROOT = PROJECT_ROOT / "data"

CACHE_ENV_VAR = "CONIC_FLOORS_CACHE"


class EngineSettings(BaseModel):
    max_seq_index: int = Field(
        64, description="Largest tangency order accepted in a sequence literal"
    )
    verify_witnesses: bool = Field(
        False,
        description="Re-derive every reality witness with a networkx isomorphism search",
    )
    max_graph_vertices: int = Field(
        6, description="Upper bound on the vertex count of X7/X8 degeneration graphs"
    )


class CacheSettings(BaseModel):
    """Configuration for the persistent invariant cache"""

    enabled: bool = Field(True, description="Whether the CLI persists computed invariants")
    path: str = Field(
        "cache/invariants.json", description="Cache file, relative to the project root"
    )


class ProviderSettings(BaseModel):
    default_table: str = Field(
        "data/tx81_2c1.table",
        description="JSON-lines table of invariants of the blow-up tX8,1",
    )


class LoggingSettings(BaseModel):
    level: str = Field("INFO", description="Console log level")
    log_dir: str = Field("logs", description="Directory for log files")
    file: bool = Field(False, description="Also write a timestamped log file")
    console: bool = Field(True, description="Log to stderr")


class AppConfig(BaseModel):
    engine: EngineSettings
    cache: CacheSettings
    provider: ProviderSettings
    logging: LoggingSettings


class Config:
    _instance = None
    _lock = threading.Lock()
    _initialized = False

    def __new__(cls):
        if cls._instance is None:
            with cls._lock:
                if cls._instance is None:
                    cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if not self._initialized:
            with self._lock:
                if not self._initialized:
                    self._config = None
                    self._load_initial_config()
                    self._initialized = True

    @staticmethod
    def _get_config_path() -> Path:
        root = PROJECT_ROOT
        config_path = root / "config" / "config.toml"
        if config_path.exists():
            return config_path
        example_path = root / "config" / "config.example.toml"
        if example_path.exists():
            return example_path
        raise FileNotFoundError("No configuration file found in config directory")

    def _load_config(self) -> dict:
        config_path = self._get_config_path()
        with config_path.open("rb") as f:
            return tomllib.load(f)

    def _load_initial_config(self):
        raw_config = self._load_config()
        config_dict = {
            "engine": EngineSettings(**raw_config.get("engine", {})),
            "cache": CacheSettings(**raw_config.get("cache", {})),
            "provider": ProviderSettings(**raw_config.get("provider", {})),
            "logging": LoggingSettings(**raw_config.get("logging", {})),
        }
        self._config = AppConfig(**config_dict)

    @property
    def engine(self) -> EngineSettings:
        return self._config.engine

    @property
    def cache(self) -> CacheSettings:
        return self._config.cache

    @property
    def provider(self) -> ProviderSettings:
        return self._config.provider

    @property
    def logging(self) -> LoggingSettings:
        return self._config.logging

    @property
    def cache_path(self) -> Path:
        """Cache file location; the CONIC_FLOORS_CACHE variable wins over the file"""
        override: Optional[str] = os.environ.get(CACHE_ENV_VAR)
        path = Path(override) if override else Path(self._config.cache.path)
        return path if path.is_absolute() else PROJECT_ROOT / path

    @property
    def provider_table_path(self) -> Path:
        path = Path(self._config.provider.default_table)
        return path if path.is_absolute() else PROJECT_ROOT / path

    @property
    def root_path(self) -> Path:
        """Get the root path of the application"""
        return PROJECT_ROOT


config = Config()
