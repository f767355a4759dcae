"""Shared size-guard machinery for the enumeration engines."""

from __future__ import annotations


class SizeGuardError(ValueError):
    """An input exceeds the documented engine bound for an operation."""


def require(cond: bool, msg: str) -> None:
    if not cond:
        raise SizeGuardError(msg)
