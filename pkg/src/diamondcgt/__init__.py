"""Partizan game engine: canonical forms, stops, diamond certificates, and
token games on graphs."""

from .engine import Engine
from .values import Dyadic, NumberSystem, Outcome, Relation, ValueClass, ValueKind

__version__ = "0.1.0"

__all__ = [
    "Engine",
    "Dyadic",
    "NumberSystem",
    "Outcome",
    "Relation",
    "ValueClass",
    "ValueKind",
    "__version__",
]
