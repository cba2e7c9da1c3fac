from __future__ import annotations

from netorder.adapters.cli.app import app, main

__all__: list[str] = ["app", "main"]
