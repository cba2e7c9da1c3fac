from __future__ import annotations


class NetOrderError(Exception):
    """Base exception for NetOrder."""
