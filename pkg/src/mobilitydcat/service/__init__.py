"""HTTP portal service: content negotiation, versioned routing, catalog API."""

from .app import build_app, create_app, harvest_into_app, profile_to_json, report_to_json
from .config import HOST_ENV, PORT_ENV, ServiceConfig, load_config
from .negotiation import (
    AcceptEntry,
    AcceptPreference,
    Representation,
    negotiate,
    negotiate_media_type,
)
from .routing import VersionRoute, resolve_version_route

__all__ = [
    "AcceptEntry",
    "AcceptPreference",
    "HOST_ENV",
    "PORT_ENV",
    "Representation",
    "ServiceConfig",
    "VersionRoute",
    "build_app",
    "create_app",
    "harvest_into_app",
    "load_config",
    "negotiate",
    "negotiate_media_type",
    "profile_to_json",
    "report_to_json",
    "resolve_version_route",
]
