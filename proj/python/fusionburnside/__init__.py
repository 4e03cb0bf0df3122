"""Burnside rings of p-groups and saturated fusion systems F_S(G)."""

from ._core import (
    BurnsideRing,
    Error,
    FusionSystem,
    Group,
    InputError,
    InvariantError,
    NotInImageError,
    PreconditionError,
    SizeError,
    StabilityError,
    catalog_names,
    run_cli,
)

__all__ = [
    "BurnsideRing",
    "Error",
    "FusionSystem",
    "Group",
    "InputError",
    "InvariantError",
    "NotInImageError",
    "PreconditionError",
    "SizeError",
    "StabilityError",
    "catalog_names",
    "run_cli",
]
