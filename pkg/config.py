"""
Configuration settings for the double-cycle laboratory
"""

import os
from dataclasses import dataclass, replace
from typing import Any

from helper_utilities.constants import LabConstants


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    try:
        return int(raw) if raw not in (None, '') else default
    except ValueError:
        return default


def _env_flag(name: str, default: bool = False) -> bool:
    return os.environ.get(name, 'true' if default else 'false').strip().lower() == 'true'


class Config:
    """Base configuration class"""

    # Flask Configuration
    SECRET_KEY = os.environ.get('SECRET_KEY', 'dev-secret-change-me-in-production')
    FLASK_ENV = os.environ.get('FLASK_ENV', 'production')
    DEBUG = FLASK_ENV == 'development'
    JSON_SORT_KEYS = True

    # Database Configuration (verification history)
    SQLALCHEMY_DATABASE_URI = os.environ.get('DATABASE_URL', 'sqlite:///badc_lab.db')
    SQLALCHEMY_TRACK_MODIFICATIONS = False
    SQLALCHEMY_ENGINE_OPTIONS = {
        'pool_pre_ping': True,
    }

    # Enumeration Configuration
    ENUMERATION_CAP = _env_int('ENUMERATION_CAP', LabConstants.DEFAULT_ENUMERATION_CAP)
    API_ENUMERATION_CAP = _env_int('API_ENUMERATION_CAP', LabConstants.DEFAULT_API_ENUMERATION_CAP)
    GRAPH_WORKERS = _env_int('GRAPH_WORKERS', 1)

    # Verification Configuration
    VERIFY_EXHAUSTIVE_MAX = _env_int('VERIFY_EXHAUSTIVE_MAX', LabConstants.DEFAULT_EXHAUSTIVE_MAX)
    VERIFY_SAMPLED_MAX = _env_int('VERIFY_SAMPLED_MAX', LabConstants.DEFAULT_SAMPLED_MAX)
    VERIFY_SAMPLE_STARTS = _env_int('VERIFY_SAMPLE_STARTS', LabConstants.DEFAULT_SAMPLE_STARTS)
    VERIFY_WORKERS = _env_int('VERIFY_WORKERS', 1)
    RANDOM_SEED = _env_int('RANDOM_SEED', LabConstants.DEFAULT_SEED)

    # Sequence Configuration
    EXPAND_STRICT = _env_flag('EXPAND_STRICT')

    # Logging Configuration
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'INFO')
    LOG_FILE = os.environ.get('LOG_FILE')

    # Application Information
    APP_NAME = 'Boolean Automata Double-Cycle Laboratory'
    APP_VERSION = '1.0.0'
    JSON_SCHEMA_VERSION = LabConstants.SCHEMA_VERSION


class DevelopmentConfig(Config):
    """Development configuration"""
    DEBUG = True
    FLASK_ENV = 'development'
    LOG_LEVEL = 'DEBUG'


class ProductionConfig(Config):
    """Production configuration"""
    DEBUG = False
    FLASK_ENV = 'production'


class TestingConfig(Config):
    """Testing configuration"""
    TESTING = True
    DEBUG = True
    SQLALCHEMY_DATABASE_URI = 'sqlite:///:memory:'
    LOG_FILE = None
    VERIFY_EXHAUSTIVE_MAX = 7
    VERIFY_SAMPLED_MAX = 9
    VERIFY_SAMPLE_STARTS = 16
    RANDOM_SEED = LabConstants.DEFAULT_SEED
    EXPAND_STRICT = False
    GRAPH_WORKERS = 1
    VERIFY_WORKERS = 1


# Configuration mapping
config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': ProductionConfig
}


def get_config(name: str = None):
    """Resolve a configuration class by name, falling back to the default"""
    raw = name if name is not None else os.environ.get('FLASK_ENV', 'default')
    return config.get((raw or 'default').strip().lower(), config['default'])


@dataclass(frozen=True)
class LabSettings:
    """The subset of configuration the services read, passed explicitly"""

    enumeration_cap: int = LabConstants.DEFAULT_ENUMERATION_CAP
    api_enumeration_cap: int = LabConstants.DEFAULT_API_ENUMERATION_CAP
    graph_workers: int = 1
    exhaustive_max: int = LabConstants.DEFAULT_EXHAUSTIVE_MAX
    sampled_max: int = LabConstants.DEFAULT_SAMPLED_MAX
    sample_starts: int = LabConstants.DEFAULT_SAMPLE_STARTS
    verify_workers: int = 1
    seed: int = LabConstants.DEFAULT_SEED
    expand_strict: bool = False
    schema_version: int = LabConstants.SCHEMA_VERSION

    @classmethod
    def from_object(cls, source: Any) -> "LabSettings":
        """Build settings from a config class or a Flask config mapping"""
        def read(key: str, default: Any) -> Any:
            if isinstance(source, type):
                return getattr(source, key, default)
            return source.get(key, default)

        return cls(
            enumeration_cap=read('ENUMERATION_CAP', cls.enumeration_cap),
            api_enumeration_cap=read('API_ENUMERATION_CAP', cls.api_enumeration_cap),
            graph_workers=read('GRAPH_WORKERS', cls.graph_workers),
            exhaustive_max=read('VERIFY_EXHAUSTIVE_MAX', cls.exhaustive_max),
            sampled_max=read('VERIFY_SAMPLED_MAX', cls.sampled_max),
            sample_starts=read('VERIFY_SAMPLE_STARTS', cls.sample_starts),
            verify_workers=read('VERIFY_WORKERS', cls.verify_workers),
            seed=read('RANDOM_SEED', cls.seed),
            expand_strict=read('EXPAND_STRICT', cls.expand_strict),
            schema_version=read('JSON_SCHEMA_VERSION', cls.schema_version),
        )

    def with_overrides(self, **overrides: Any) -> "LabSettings":
        return replace(self, **{key: value for key, value in overrides.items() if value is not None})
