"""Text-oracle abstraction: live HTTP client, file cache, deterministic mock."""

from .base import NO_SCENARIO_SENTINEL, OracleRequest, OracleResponse, ROLES
from .cache import CachedOracle
from .http import HttpOracle
from .mock import MockOracle, MockState, ScenarioTemplate, default_pool

__all__ = [
    "OracleRequest", "OracleResponse", "ROLES", "NO_SCENARIO_SENTINEL",
    "CachedOracle", "HttpOracle",
    "MockOracle", "MockState", "ScenarioTemplate", "default_pool",
]
