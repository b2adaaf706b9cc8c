"""HTTP service wrapping the recommender, plus the client the CLI uses."""

from .client import RemoteServiceError, ServiceClient
from .state import ServiceConfig, ServiceState

__all__ = ["RemoteServiceError", "ServiceClient", "ServiceConfig", "ServiceState"]
