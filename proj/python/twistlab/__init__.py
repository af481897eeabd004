"""Python bindings for the twistlab C++ core."""

from ._core import (
    ConfigError,
    ParseError,
    charpoly,
    entropy,
    fekete_limit,
    hom_dims,
    ktheory,
    twist_dims,
    validate,
    verify,
    zoo_emit,
    zoo_names,
)

__all__ = [
    "ConfigError",
    "ParseError",
    "charpoly",
    "entropy",
    "fekete_limit",
    "hom_dims",
    "ktheory",
    "twist_dims",
    "validate",
    "verify",
    "zoo_emit",
    "zoo_names",
]
