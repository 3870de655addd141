"""Application profiles: model, parsing, shape compilation, extension rules."""

from .bundled import (
    CURRENT_VERSION,
    PROFILE_VERSIONS,
    bundled_shape_resolver,
    dcat_ap_base_profile,
    minimum_profile,
    mobility_shapes,
    profile_for_version,
)
from .compiler import compile_to_shapes
from .extension import ExtensionViolation, check_extension
from .model import (
    UNBOUNDED,
    ClassProfile,
    Obligation,
    Profile,
    PropertyProfile,
    Unbounded,
    card_le,
)
from .parser import load_profile, parse_profile

__all__ = [
    "CURRENT_VERSION",
    "PROFILE_VERSIONS",
    "UNBOUNDED",
    "ClassProfile",
    "ExtensionViolation",
    "Obligation",
    "Profile",
    "PropertyProfile",
    "Unbounded",
    "bundled_shape_resolver",
    "card_le",
    "check_extension",
    "compile_to_shapes",
    "dcat_ap_base_profile",
    "load_profile",
    "minimum_profile",
    "mobility_shapes",
    "parse_profile",
    "profile_for_version",
]
