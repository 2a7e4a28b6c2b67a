"""Serialization and the ``bicat`` command-line driver."""

from .schema import parse, serialize

__all__ = ["parse", "serialize"]
